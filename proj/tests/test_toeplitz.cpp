#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "qlo/controlled.hpp"
#include "qlo/toeplitz.hpp"

using namespace qlo;
using testing::preset;

namespace {

  // {p in the ball : x <= p}
  std::vector<std::size_t> up_set(Presentation const& pres, Ball const& ball,
                                  Element const& x) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ball.size(); ++i) {
      if (pres.leq(x, ball[i])) {
        out.push_back(i);
      }
    }
    return out;
  }

  PartialInjection range_projection(ToeplitzContext const& ctx, Element const& x) {
    return ctx.truncated({{x, false}, {x, true}});
  }

}  // namespace

TEST_CASE("partial injection algebra") {
  PartialInjection f(4);
  f.set(0, 2);
  f.set(1, 3);
  CHECK(f(0) == 2u);
  CHECK_FALSE(f(2));
  CHECK(f.adjoint()(2) == 0u);
  CHECK(f.adjoint().adjoint() == f);
  CHECK((f.adjoint() * f) == PartialInjection::identity(4).restrict({0, 1}));
  CHECK((f * f).empty());
  CHECK(f.domain() == std::vector<std::size_t>{0, 1});
  CHECK(f.dense()[2][0] == 1);
  CHECK(f.dense()[0][2] == 0);
  CHECK_THROWS_AS(f * PartialInjection(3), Error);
}

TEST_CASE("translation operators on the free monoid") {
  auto       F    = preset("free:2");
  auto const ball = enumerate_ball(*F, 2);
  ToeplitzContext ctx(*F, ball);
  CHECK(ctx.op(F->identity()) == PartialInjection::identity(ball.size()));
  auto const& Ta = ctx.op(F->parse("a"));
  std::vector<std::string> image;
  for (auto i : Ta.domain()) {
    image.push_back(F->to_string(ball[*Ta(i)]));
  }
  std::sort(image.begin(), image.end());
  CHECK(image == std::vector<std::string>{"a", "a b", "a^2"});
  CHECK_THROWS_AS(toeplitz_op(*F, ball, F->parse("a^-1")), Error);
}

TEST_CASE("T_x T_y = T_xy and T_x^* T_x = 1 on the safe region") {
  for (auto const* name : {"free:2", "bs:1,2", "bs:2,-3", "hnn-:x,y@xy", "graph:path3",
                           "sd:phi-ab"}) {
    CAPTURE(name);
    auto            p    = preset(name);
    auto const      ball = enumerate_ball(*p, 6);
    ToeplitzContext ctx(*p, ball);
    auto const      safe = ball.within(2);
    auto const      gens = ball.within(2);
    for (auto i : gens) {
      auto const& x = ball[i];
      CHECK(ctx.op(x).adjoint().adjoint() == ctx.op(x));
      CHECK(compare_on(ctx, safe, {{x, true}, {x, false}}, OpWord{}).passed());
      for (auto j : gens) {
        auto const& y = ball[j];
        CHECK(compare_on(ctx, safe, {{x, false}, {y, false}}, OpWord{{p->mul(x, y), false}})
                  .passed());
        auto lhs = (ctx.op(x) * ctx.op(y)).restrict(safe);
        CHECK(lhs == ctx.op(p->mul(x, y)).restrict(safe));
      }
    }
  }
}

TEST_CASE("diagonal part") {
  auto            F    = preset("free:2");
  auto const      ball = enumerate_ball(*F, 3);
  ToeplitzContext ctx(*F, ball);
  auto const      a = F->parse("a");
  CHECK(ctx.op(a).diagonal().empty());
  auto const id = PartialInjection::identity(ball.size());
  CHECK(id.diagonal() == id);
  auto const P = range_projection(ctx, F->parse("a b"));
  CHECK(P.is_partial_identity());
  CHECK(P.diagonal() == P);
  CHECK(P.diagonal().diagonal() == P.diagonal());
  auto const m = (ctx.op(a) * ctx.op(a).adjoint() * ctx.op(F->parse("b"))).diagonal();
  CHECK(m.diagonal() == m);
}

TEST_CASE("Nica covariance examples") {
  auto            F    = preset("free:2");
  auto const      ball = enumerate_ball(*F, 6);
  ToeplitzContext ctx(*F, ball);
  auto const      safe = ball.within(3);
  auto const      a = F->parse("a"), b = F->parse("b"), ab = F->parse("a b");

  auto r = check_nica(ctx, a, b, safe);
  CHECK(r.join == JoinKind::infinite);
  CHECK(r.passed());
  CHECK((range_projection(ctx, a) * range_projection(ctx, b)).empty());

  auto s = check_nica(ctx, a, ab, safe);
  CHECK(s.join == JoinKind::finite);
  CHECK(s.passed());
  auto both = (range_projection(ctx, a) * range_projection(ctx, ab)).domain();
  CHECK(both == up_set(*F, ball, ab));

  auto            B     = preset("bs:1,2");
  auto const      bball = enumerate_ball(*B, 6);
  ToeplitzContext bctx(*B, bball);
  auto            t = check_nica(bctx, B->parse("a"), B->parse("b"), bball.within(3));
  CHECK(t.passed());
  auto meet = (range_projection(bctx, B->parse("a")) * range_projection(bctx, B->parse("b")))
                  .restrict(bball.within(3))
                  .domain();
  auto above = up_set(*B, bball, B->parse("a b"));
  std::erase_if(above, [&](std::size_t i) { return bball.length(i) > 3; });
  CHECK(meet == above);
}

TEST_CASE("Nica covariance on every pair of Ball3") {
  for (auto const* name : {"free:2", "scarparo", "bs:1,2", "bs:2,3", "bs:2,-3",
                           "graph:path3", "hnn-:x,y@xy"}) {
    CAPTURE(name);
    auto            p    = preset(name);
    auto const      ball = enumerate_ball(*p, 8);
    ToeplitzContext ctx(*p, ball);
    auto const      safe  = ball.within(3);
    std::size_t     fails = 0;
    for (auto i : safe) {
      for (auto j : safe) {
        fails += !check_nica(ctx, ball[i], ball[j], safe).passed();
      }
    }
    CHECK(fails == 0);
  }
}

TEST_CASE("the nonexample has an undecided Nica pair") {
  auto            p    = preset("sd:nonexample");
  auto const      ball = enumerate_ball(*p, 3);
  ToeplitzContext ctx(*p, ball);
  auto r = check_nica(ctx, p->parse("a t^2"), p->parse("a b t"), ball.within(3));
  CHECK(r.join == JoinKind::inconclusive);
  CHECK_FALSE(r.passed());
}

TEST_CASE("different fibres with an infinite join are orthogonal") {
  for (auto const* name : {"bs:2,-3", "free:2", "hnn-:x,y@xy"}) {
    CAPTURE(name);
    auto            p    = preset(name);
    auto            cp   = controlled_preset(p, 3);
    auto const      ball = enumerate_ball(*p, 6);
    ToeplitzContext ctx(*p, ball);
    auto const      safe = ball.within(3);
    for (auto i : ball.within(3)) {
      for (auto j : ball.within(3)) {
        if (cp->mu(ball[i]) == cp->mu(ball[j])) {
          continue;
        }
        if (p->join(ball[i], ball[j]).is_infinite()) {
          CHECK((ctx.op(ball[i]).adjoint() * ctx.op(ball[j])).restrict(safe).empty());
        }
      }
    }
  }
}

TEST_CASE("matrix units from the decreasing chains of bs(2,-3)") {
  auto            p    = preset("bs:2,-3");
  auto            cp   = controlled_preset(p, 6);
  auto const      ball = enumerate_ball(*p, 6);
  ToeplitzContext ctx(*p, ball);
  auto const      safe   = ball.within(2);
  auto const      chains = cp->lambda->chains(cp->mu.target->parse("a"), 2);
  REQUIRE(chains.size() >= 2);
  for (std::size_t n = 0; n <= 2; ++n) {
    std::vector<Element> s;
    for (auto const& ch : chains) {
      s.push_back(ch.terms[n]);
    }
    CAPTURE(n);
    CHECK(matrix_units_check(ctx, s, safe).passed());
    CHECK(matrix_units_check(ctx, {s[0]}, safe).passed());
    // E_{lr} E_{lr} = 0 for l != r
    OpWord E{{s[0], false}, {s[1], true}, {s[0], false}, {s[1], true}};
    CHECK(compare_on(ctx, safe, E, std::nullopt).passed());
  }
}

TEST_CASE("a family with a finite cross join is not a system of matrix units") {
  auto            F    = preset("free:2");
  auto const      ball = enumerate_ball(*F, 6);
  ToeplitzContext ctx(*F, ball);
  auto const      r = matrix_units_check(ctx, {F->parse("a"), F->parse("a b")}, ball.within(2));
  CHECK(r.failures > 0);
}

TEST_CASE("spanning products") {
  auto F = preset("free:2");
  auto a = F->parse("a"), b = F->parse("b"), ab = F->parse("a b");
  auto s = spanning_product(*F, ab, a, a, b);
  REQUIRE(s.left);
  CHECK(*s.left == ab);
  CHECK(*s.right == b);
  auto z = spanning_product(*F, a, a, b, b);
  CHECK(z.kind == JoinKind::infinite);
  CHECK_FALSE(z.left);
  auto w = spanning_product(*F, b, a, ab, a);
  REQUIRE(w.left);
  CHECK(*w.left == F->parse("b^2"));
  CHECK(*w.right == a);

  auto B = preset("bs:2,-3");
  auto c = spanning_product(*B, B->parse("b a"), B->parse("b a"), B->parse("b^2 a"),
                            B->parse("b^2 a"));
  CHECK(c.kind == JoinKind::infinite);

  auto cp = controlled_preset(F, 3);
  CHECK_THROWS_AS(spanning_product(*F, ab, a, a, a, &cp->mu), Error);
  CHECK_NOTHROW(spanning_product(*F, b, a, ab, F->parse("b a"), &cp->mu));

  // The product formula agrees with the operators on the safe region.
  auto const      ball = enumerate_ball(*F, 7);
  ToeplitzContext ctx(*F, ball);
  auto const      safe = ball.within(2);
  OpWord lhs{{b, false}, {a, true}, {ab, false}, {a, true}};
  CHECK(compare_on(ctx, safe, lhs, OpWord{{*w.left, false}, {*w.right, true}}).passed());
}
