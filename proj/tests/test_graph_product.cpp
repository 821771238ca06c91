#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "qlo/free_group.hpp"
#include "qlo/graph_product.hpp"

using namespace qlo;

namespace {

  std::shared_ptr<GraphProduct const> gp(std::string const& name) {
    return std::dynamic_pointer_cast<GraphProduct const>(make_preset(name));
  }

  Syllable syl(GraphProduct const& g, std::size_t v, std::string_view text) {
    return {v, g.vertices()[v]->parse(text)};
  }

  // Shuffles, merges and identity deletions applied in random order. Every
  // move preserves the group element.
  std::vector<Syllable> scramble(GraphProduct const& g, std::vector<Syllable> w,
                                 std::mt19937_64& rng, int moves) {
    for (int m = 0; m < moves && !w.empty(); ++m) {
      std::uniform_int_distribution<std::size_t> at(0, w.size() - 1);
      auto const                                 i    = at(rng);
      auto const&                                V    = *g.vertices()[w[i].vertex];
      auto const                                 kind = rng() % 4;
      if (kind == 0 && w[i].g == V.identity()) {
        w.erase(w.begin() + static_cast<long>(i));
      } else if (kind == 1 && i + 1 < w.size() && w[i].vertex == w[i + 1].vertex) {
        w[i].g = V.mul(w[i].g, w[i + 1].g);
        w.erase(w.begin() + static_cast<long>(i) + 1);
      } else if (kind == 2 && i + 1 < w.size() && w[i].vertex != w[i + 1].vertex
                 && g.graph().adjacent(w[i].vertex, w[i + 1].vertex)) {
        std::swap(w[i], w[i + 1]);
      } else if (kind == 3) {
        // g = (g h)(h^-1)
        auto h = V.letters()[rng() % V.letters().size()];
        w.insert(w.begin() + static_cast<long>(i) + 1, Syllable{w[i].vertex, V.inv(h)});
        w[i].g = V.mul(w[i].g, h);
      }
    }
    return w;
  }

  std::vector<Syllable> random_raw(GraphProduct const& g, std::mt19937_64& rng,
                                   std::size_t n) {
    std::vector<Syllable> w;
    for (std::size_t k = 0; k < n; ++k) {
      auto        v = rng() % g.vertices().size();
      auto const& V = *g.vertices()[v];
      w.push_back({v, testing::random_element(V, rng, 1 + rng() % 3)});
    }
    return w;
  }

  // Free product of two copies of Z inside F(a, b).
  FWord to_free(GraphProduct const& g, GpElement const& x) {
    FreePresentation const F2(FreePresentation::default_names(2));
    FWord                  w(2);
    for (auto const& s : x.syllables) {
      w = mul(w, F2.decode(F2.parse(g.vertices()[s.vertex]->to_string(s.g))));
    }
    return w;
  }

}  // namespace

TEST_CASE("canonical forms") {
  auto no   = gp("graph:noedge2");
  auto full = gp("graph:complete2");
  auto x    = no->canon({syl(*no, 0, "a"), syl(*no, 0, "a")});
  CHECK(no->to_string(x) == "[v0: a^2]");
  auto y = full->canon({syl(*full, 1, "b"), syl(*full, 0, "a")});
  CHECK(full->to_string(y) == "[v0: a] [v1: b]");
  CHECK(no->canon({syl(*no, 0, "a"), syl(*no, 0, "a^-1")}).syllables.empty());
  CHECK_THROWS_AS(no->canon({Syllable{5, no->vertices()[0]->identity()}}), Error);

  auto p3 = gp("graph:path3");
  // v0 and v2 are not adjacent, v1 commutes with both.
  CHECK(p3->to_string(p3->parse("[v2: c] [v1: b] [v0: a] [v2: c]"))
        == "[v1: b] [v2: c] [v0: a] [v2: c]");
  CHECK(p3->to_string(p3->parse("[v0: a] [v1: b] [v0: a^-1]")) == "[v1: b]");
}

TEST_CASE("canonical forms are confluent under random rewrite schedules") {
  for (auto const* name : {"graph:path3", "graph:noedge2", "graph:complete2"}) {
    auto            g = gp(name);
    std::mt19937_64 rng(41);
    for (int i = 0; i < 500; ++i) {
      auto raw   = random_raw(*g, rng, 1 + i % 8);
      auto canon = g->canon(raw);
      for (int s = 0; s < 3; ++s) {
        auto other = scramble(*g, raw, rng, 40);
        CHECK(g->canon(other) == canon);
        CHECK(canon.length() <= other.size());
      }
      CHECK(g->canon(canon.syllables) == canon);
    }
  }
}

TEST_CASE("the free product of two copies of Z is the free group") {
  auto            g = gp("graph:noedge2");
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    auto x = g->canon(random_raw(*g, rng, 1 + i % 6));
    auto y = g->canon(random_raw(*g, rng, 1 + i % 5));
    CHECK(to_free(*g, g->mul(x, y)) == mul(to_free(*g, x), to_free(*g, y)));
    CHECK((x == y) == (to_free(*g, x) == to_free(*g, y)));
    CHECK(g->is_positive(x) == fplus_is_positive(to_free(*g, x)));
  }
}

TEST_CASE("positivity") {
  auto full = gp("graph:complete2");
  CHECK(full->is_positive(full->parse("[v0: a] [v1: b]")));
  CHECK_FALSE(full->is_positive(full->parse("[v0: a^-1]")));
  CHECK(full->is_positive(full->identity()));
}

TEST_CASE("initial syllables") {
  auto full = gp("graph:complete2");
  auto x    = full->decode(full->parse("[v1: b] [v0: a]"));
  auto d    = full->initial_split(x, 0);
  CHECK(d.head == full->vertices()[0]->parse("a"));
  CHECK(full->to_string(d.rest) == "[v1: b]");

  auto no = gp("graph:noedge2");
  auto z  = no->decode(no->parse("[v1: b] [v0: a]"));
  auto n  = no->initial_split(z, 0);
  CHECK(n.head == no->vertices()[0]->identity());
  CHECK(n.rest == z);

  auto e = no->initial_split(GpElement{}, 1);
  CHECK(e.head == no->vertices()[1]->identity());
  CHECK(e.rest.syllables.empty());
}

TEST_CASE("order") {
  auto no = gp("graph:noedge2");
  CHECK(no->leq(no->parse("[v0: a] [v1: b]"), no->parse("[v0: a] [v1: b] [v0: a]")));
  CHECK_FALSE(no->leq(no->parse("[v0: a] [v1: b]"), no->parse("[v1: b] [v0: a]")));
  auto full = gp("graph:complete2");
  CHECK(full->leq(full->parse("[v0: a] [v1: b^2]"), full->parse("[v0: a^3] [v1: b^2]")));
}

TEST_CASE("joins") {
  auto no = gp("graph:noedge2");
  auto x = no->parse("[v0: a] [v1: b]"), y = no->parse("[v1: b] [v0: a]");
  CHECK(no->join(x, y).is_infinite());
  auto const       b4 = enumerate_ball(*no, 4);
  OrderTable const t(*no, b4);
  CHECK(t.common_upper_bounds(b4.index_of(x), b4.index_of(y)).empty());
  CHECK(no->join(x, no->identity()) == JoinResult::finite(x));

  auto full = gp("graph:complete2");
  auto j    = full->join(full->parse("[v0: a^2]"), full->parse("[v1: b]"));
  REQUIRE(j.is_finite());
  CHECK(full->to_string(j.value()) == "[v0: a^2] [v1: b]");
}

TEST_CASE("the direct sum on two vertices is Z^2") {
  auto                      full = gp("graph:complete2");
  LatticePresentation const Z2({"a", "b"});
  auto to_z2 = [&](Element const& x) {
    std::vector<std::int64_t> v{0, 0};
    for (auto const& s : full->decode(x).syllables) {
      auto str = full->vertices()[s.vertex]->to_string(s.g);
      auto k   = str.find('^');
      v[s.vertex] += k == std::string::npos ? 1 : std::stoll(str.substr(k + 1));
    }
    return Z2.make(v);
  };
  auto const ball = enumerate_ball(*full, 4);
  for (auto const& x : ball.elements()) {
    for (auto const& y : ball.elements()) {
      CHECK(full->leq(x, y) == Z2.leq(to_z2(x), to_z2(y)));
      auto J = full->join(x, y);
      REQUIRE(J.is_finite());
      CHECK(to_z2(J.value()) == Z2.join(to_z2(x), to_z2(y)).value());
    }
  }
}

TEST_CASE("the homomorphism into the direct sum") {
  auto no  = gp("graph:noedge2");
  auto sum = direct_sum_of(*no);
  auto x   = no->decode(no->parse("[v0: a] [v1: b] [v0: a]"));
  CHECK(sum.to_string(no->phi(x, sum)) == "[v0: a^2] [v1: b]");
  CHECK(no->phi(GpElement{}, sum).syllables.empty());
  CHECK(sum.to_string(no->phi(no->decode(no->parse("[v0: a]")), sum)) == "[v0: a]");
}

TEST_CASE("joins agree with the oracle and the recursion keeps vertex sets") {
  for (auto const* name : {"graph:path3", "graph:noedge2", "graph:complete2"}) {
    CAPTURE(name);
    auto g = gp(name);
    CHECK(testing::scan_against_oracle(*g, 4, 8).mismatches == 0);
    CHECK(testing::contradictions(*g, 4, 7) == 0);

    auto const ball = enumerate_ball(*g, 4);
    for (auto const& xe : ball.elements()) {
      for (auto const& ye : ball.elements()) {
        auto x = g->decode(xe), y = g->decode(ye);
        CHECK(g->leq_recursive(x, y) == g->leq(xe, ye));
        std::vector<JoinLayer> trace;
        auto                   J = g->join(x, y, &trace);
        if (J.is_finite()) {
          for (auto const& layer : trace) {
            for (auto v : layer.joined) {
              CHECK(layer.operands.count(v) == 1);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("phi preserves order and finite joins and separates joinable pairs") {
  for (auto const* name : {"graph:path3", "graph:noedge2", "graph:complete2"}) {
    CAPTURE(name);
    auto       g    = gp(name);
    auto       sum  = direct_sum_of(*g);
    auto const ball = enumerate_ball(*g, 4);
    for (auto const& xe : ball.elements()) {
      auto px = sum.encode(g->phi(g->decode(xe), sum));
      for (auto const& ye : ball.elements()) {
        auto py = sum.encode(g->phi(g->decode(ye), sum));
        if (g->leq(xe, ye)) {
          CHECK(sum.leq(px, py));
        }
        auto J = g->join(xe, ye);
        if (J.is_finite()) {
          auto pj = sum.encode(g->phi(g->decode(J.value()), sum));
          CHECK(sum.join(px, py) == JoinResult::finite(pj));
          CHECK((px != py || xe == ye));
        }
      }
    }
  }
}

TEST_CASE("phi is not injective on pairs without a common upper bound") {
  auto g   = gp("graph:noedge2");
  auto sum = direct_sum_of(*g);
  auto x = g->decode(g->parse("[v0: a] [v1: b]")), y = g->decode(g->parse("[v1: b] [v0: a]"));
  CHECK(g->phi(x, sum) == g->phi(y, sum));
  CHECK(g->join(x, y).is_infinite());
}

TEST_CASE("graph products from a JSON description, nested vertex groups included") {
  auto g = graph_from_json(R"({"vertices": ["graph:noedge2", "z:c"], "edges": [[0, 1]]})",
                           "graph:nested");
  CHECK(g->name() == "graph:nested");
  CHECK(testing::scan_against_oracle(*g, 3, 6).mismatches == 0);
  CHECK(testing::contradictions(*g, 3, 6) == 0);
  CHECK(check_order_axioms(*g, enumerate_ball(*g, 3)).empty());

  CHECK_THROWS_AS(graph_from_json(R"({"vertices": ["z:a"], "edges": [[0, 0]]})", "g"),
                  ParseError);
  CHECK_THROWS_AS(graph_from_json(R"({"edges": []})", "g"), ParseError);
  CHECK_THROWS_AS(graph_from_json("not json", "g"), ParseError);
}
