#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "qlo/baumslag.hpp"
#include "qlo/free_group.hpp"

using namespace qlo;
using testing::preset;

namespace {

  std::vector<std::string> names_of(Presentation const& p, Ball const& b) {
    std::vector<std::string> out;
    for (auto const& x : b.elements()) {
      out.push_back(p.to_string(x));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace

TEST_CASE("leq examples") {
  auto F = preset("free:2");
  CHECK(F->leq(F->parse("a"), F->parse("a b")));
  CHECK_FALSE(F->leq(F->parse("a b"), F->parse("a")));
  auto B = preset("bs:2,-3");
  CHECK(B->leq(B->parse("a b^-3 a^-1"), B->parse("b^3 a")));
}

TEST_CASE("ball enumeration") {
  auto F = preset("free:2");
  auto b = enumerate_ball(*F, 2);
  CHECK(b.size() == 7);
  CHECK(names_of(*F, b)
        == std::vector<std::string>{"a", "a b", "a^2", "b", "b a", "b^2", "e"});
  CHECK(b[0] == F->identity());

  auto S = preset("scarparo");
  CHECK(names_of(*S, enumerate_ball(*S, 2))
        == std::vector<std::string>{"b", "b a", "b^2", "e"});

  for (auto const& name : testing::wql_presets()) {
    auto p = preset(name);
    auto z = enumerate_ball(*p, 0);
    CHECK(z.size() == 1);
    CHECK(z[0] == p->identity());
  }
  CHECK_THROWS_AS(enumerate_ball(*F, 12, 100), Error);
}

TEST_CASE("balls contain every prefix of a positive spelling") {
  for (auto const& name : {"free:2", "bs:1,2", "bs:2,-3", "hnn-:x,y@xy", "sd:phi-ab"}) {
    auto p = preset(name);
    auto b = enumerate_ball(*p, 4);
    for (std::size_t i = 0; i < b.size(); ++i) {
      auto w = p->positive_witness(b[i]);
      REQUIRE(w);
      CHECK(w->size() >= b.length(i));
      if (w->size() > b.radius()) {
        continue;
      }
      for (std::size_t k = 0; k <= w->size(); ++k) {
        std::span<std::size_t const> pre(w->data(), k);
        CHECK(b.contains(p->product(pre)));
      }
    }
  }
}

TEST_CASE("oracle join examples") {
  auto F  = preset("free:2");
  auto b4 = enumerate_ball(*F, 4);
  auto j  = oracle_join(*F, F->parse("a"), F->parse("a b"), b4);
  REQUIRE(j.is_finite());
  CHECK(F->to_string(j.value()) == "a b");
  auto k = oracle_join(*F, F->parse("a"), F->parse("b"), b4);
  CHECK(k.is_inconclusive());
  CHECK(k.radius() == 4);

  auto B  = preset("bs:1,2");
  auto b6 = enumerate_ball(*B, 6);
  auto m  = oracle_join(*B, B->parse("a"), B->parse("b"), b6);
  REQUIRE(m.is_finite());
  CHECK(m.value() == B->parse("b^2 a"));
  CHECK(B->to_string(m.value()) == "a b");

  CHECK_THROWS_AS(oracle_join(*F, F->parse("a^5"), F->parse("a"), b4), Error);
}

TEST_CASE("verify_join examples") {
  auto F  = preset("free:2");
  auto b4 = enumerate_ball(*F, 4);
  CHECK(verify_join(*F, F->parse("a"), F->parse("a b"), F->parse("a b"), b4));
  CHECK_FALSE(verify_join(*F, F->parse("a"), F->parse("a b"), F->parse("a b a"), b4));
  auto B = preset("bs:1,2");
  CHECK(verify_join(*B, B->parse("a"), B->parse("b"), B->parse("a b"), enumerate_ball(*B, 6)));
}

TEST_CASE("weak quasi-lattice detector") {
  auto F = preset("free:2");
  CHECK(check_weak_ql(*F, enumerate_ball(*F, 4)).empty());
  auto S = preset("scarparo");
  CHECK(check_weak_ql(*S, enumerate_ball(*S, 4)).empty());
}

TEST_CASE("order axioms and P n P^-1 = {e} on Ball4 of every preset") {
  for (auto const& name : testing::wql_presets()) {
    CAPTURE(name);
    auto p = preset(name);
    CHECK(check_order_axioms(*p, enumerate_ball(*p, 4)).empty());
  }
}

TEST_CASE("left invariance on Ball3") {
  for (auto const& name : testing::wql_presets()) {
    CAPTURE(name);
    auto        p   = preset(name);
    auto const  b3  = enumerate_ball(*p, 3);
    auto const  b6  = enumerate_ball(*p, 6);
    std::size_t bad = 0;
    for (auto const& z : b3.elements()) {
      for (auto const& x : b3.elements()) {
        auto zx = p->mul(z, x);
        if (!b6.contains(zx)) {
          continue;
        }
        for (auto const& y : b3.elements()) {
          auto zy = p->mul(z, y);
          if (b6.contains(zy) && p->leq(x, y) && !p->leq(zx, zy)) {
            ++bad;
          }
        }
      }
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("join laws on every preset") {
  for (auto const& name : testing::wql_presets()) {
    CAPTURE(name);
    auto       p  = preset(name);
    auto const b3 = enumerate_ball(*p, 3);
    auto const b6 = enumerate_ball(*p, 6);
    auto const e  = p->identity();
    for (auto const& x : b3.elements()) {
      CHECK(p->join(x, x) == JoinResult::finite(x));
      CHECK(p->join(e, x) == JoinResult::finite(x));
      CHECK(p->join(x, e) == JoinResult::finite(x));
      for (auto const& y : b3.elements()) {
        auto J = p->join(x, y);
        CHECK(J == p->join(y, x));
        CHECK_FALSE(J.is_inconclusive());
        if (J.is_finite()) {
          CHECK(p->is_positive(J.value()));
          if (b6.contains(J.value())) {
            CHECK(verify_join(*p, x, y, J.value(), b6));
          }
        }
      }
    }
  }
}

TEST_CASE("structural joins never contradict the oracle") {
  for (auto const& name : testing::wql_presets()) {
    CAPTURE(name);
    auto p = preset(name);
    CHECK(testing::contradictions(*p, 3, 6) == 0);
  }
}

TEST_CASE("the nonexample is caught by the detector") {
  auto p    = preset("sd:nonexample");
  auto ball = enumerate_ball(*p, 3);
  auto extra = p->probe_elements();
  std::erase_if(extra, [&](Element const& x) { return ball.contains(x); });
  std::sort(extra.begin(), extra.end());
  extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
  auto found = check_weak_ql(*p, ball.augmented(extra));
  auto x     = p->parse("a t^2");
  auto y     = p->parse("a b t");
  bool hit   = false;
  for (auto const& f : found) {
    if ((f.x == x && f.y == y) || (f.x == y && f.y == x)) {
      hit = true;
      std::vector<std::string> ub;
      for (auto const& u : f.upper_bounds) {
        ub.push_back(p->to_string(u));
      }
      std::sort(ub.begin(), ub.end());
      CHECK(ub == std::vector<std::string>{"a b^2 a b a t^2", "a b^2 a b^2 a b a t^2"});
    }
  }
  CHECK(hit);
}
