#include "qlo/toeplitz.hpp"

#include <algorithm>

namespace qlo {

  PartialInjection PartialInjection::identity(std::size_t n) {
    PartialInjection f(n);
    for (std::size_t i = 0; i < n; ++i) {
      f.map_[i] = static_cast<std::int64_t>(i);
    }
    return f;
  }

  std::optional<std::size_t> PartialInjection::operator()(std::size_t i) const {
    if (i >= map_.size() || map_[i] == undefined) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(map_[i]);
  }

  void PartialInjection::set(std::size_t from, std::size_t to) {
    map_.at(from) = static_cast<std::int64_t>(to);
  }

  PartialInjection PartialInjection::compose(PartialInjection const& g) const {
    if (g.size() != size()) {
      throw Error("partial injections on different balls");
    }
    PartialInjection h(size());
    for (std::size_t i = 0; i < size(); ++i) {
      if (auto gi = g(i)) {
        h.map_[i] = map_[*gi];
      }
    }
    return h;
  }

  PartialInjection PartialInjection::adjoint() const {
    PartialInjection h(size());
    for (std::size_t i = 0; i < size(); ++i) {
      if (map_[i] != undefined) {
        h.map_[static_cast<std::size_t>(map_[i])] = static_cast<std::int64_t>(i);
      }
    }
    return h;
  }

  PartialInjection PartialInjection::diagonal() const {
    PartialInjection h(size());
    for (std::size_t i = 0; i < size(); ++i) {
      if (map_[i] == static_cast<std::int64_t>(i)) {
        h.map_[i] = map_[i];
      }
    }
    return h;
  }

  PartialInjection PartialInjection::restrict(
      std::vector<std::size_t> const& domain) const {
    PartialInjection h(size());
    for (auto i : domain) {
      h.map_.at(i) = map_.at(i);
    }
    return h;
  }

  std::vector<std::size_t> PartialInjection::domain() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i) {
      if (map_[i] != undefined) {
        out.push_back(i);
      }
    }
    return out;
  }

  bool PartialInjection::is_partial_identity() const {
    for (std::size_t i = 0; i < size(); ++i) {
      if (map_[i] != undefined && map_[i] != static_cast<std::int64_t>(i)) {
        return false;
      }
    }
    return true;
  }

  bool PartialInjection::empty() const {
    return std::all_of(map_.begin(), map_.end(),
                       [](std::int64_t v) { return v == undefined; });
  }

  std::vector<std::vector<int>> PartialInjection::dense() const {
    std::vector<std::vector<int>> m(size(), std::vector<int>(size(), 0));
    for (std::size_t i = 0; i < size(); ++i) {
      if (map_[i] != undefined) {
        m[static_cast<std::size_t>(map_[i])][i] = 1;
      }
    }
    return m;
  }

  PartialInjection operator*(PartialInjection const& f, PartialInjection const& g) {
    return f.compose(g);
  }

  PartialInjection toeplitz_op(Presentation const& pres, Ball const& ball,
                               Element const& x) {
    pres.require_positive(x, "toeplitz_op");
    PartialInjection f(ball.size());
    for (std::size_t i = 0; i < ball.size(); ++i) {
      if (auto j = ball.find(pres.mul(x, ball[i]))) {
        f.set(i, *j);
      }
    }
    return f;
  }

  PartialInjection const& ToeplitzContext::op(Element const& x) const {
    auto it = cache_.find(x);
    if (it == cache_.end()) {
      it = cache_.emplace(x, toeplitz_op(pres_, ball_, x)).first;
    }
    return it->second;
  }

  PartialInjection ToeplitzContext::truncated(OpWord const& word) const {
    auto f = PartialInjection::identity(ball_.size());
    for (auto const& factor : word) {
      auto const& t = op(factor.x);
      f             = f * (factor.adjoint ? t.adjoint() : t);
    }
    return f;
  }

  ExactValue ToeplitzContext::exact(OpWord const& word, Element const& p) const {
    ExactValue v{p, false};
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      if (it->adjoint) {
        if (!pres_.leq(it->x, *v.value)) {
          v.value.reset();
          return v;
        }
        v.value = pres_.mul(pres_.inv(it->x), *v.value);
      } else {
        v.value = pres_.mul(it->x, *v.value);
      }
      if (!ball_.contains(*v.value)) {
        v.escaped = true;
      }
    }
    return v;
  }

  void IdentityCheck::absorb(IdentityCheck const& other) {
    failures += other.failures;
    escapes += other.escapes;
    for (auto const& d : other.detail) {
      if (detail.size() < 20) {
        detail.push_back(d);
      }
    }
  }

  IdentityCheck compare_on(ToeplitzContext const& ctx,
                           std::vector<std::size_t> const& safe, OpWord const& lhs,
                           std::optional<OpWord> const& rhs) {
    IdentityCheck out;
    auto const&   ball = ctx.ball();
    auto const&   pres = ctx.pres();
    auto const    L    = ctx.truncated(lhs);
    auto const    R    = rhs ? ctx.truncated(*rhs) : PartialInjection(ball.size());
    auto          note = [&](std::string what, std::size_t p) {
      if (out.detail.size() < 20) {
        out.detail.push_back(what + " at e_{" + pres.to_string(ball[p]) + "}");
      }
    };
    // The truncated value agrees with the exact one unless the path escaped.
    auto expected = [&](ExactValue const& v) -> std::optional<std::size_t> {
      return v.value ? ball.find(*v.value) : std::nullopt;
    };
    for (auto p : safe) {
      ExactValue el = ctx.exact(lhs, ball[p]);
      ExactValue er = rhs ? ctx.exact(*rhs, ball[p]) : ExactValue{};
      if (el.value != er.value) {
        ++out.failures;
        note("exact sides differ", p);
        continue;
      }
      bool const lhs_ok = L(p) == expected(el);
      bool const rhs_ok = R(p) == expected(er);
      if ((!lhs_ok && !el.escaped) || (!rhs_ok && !er.escaped)) {
        ++out.failures;
        note("truncated operator disagrees with the exact action", p);
      } else if (L(p) != R(p)) {
        ++out.escapes;
        note("escape", p);
      }
    }
    return out;
  }

  NicaResult check_nica(ToeplitzContext const& ctx, Element const& x,
                        Element const& y, std::vector<std::size_t> const& safe) {
    auto const& pres = ctx.pres();
    auto const& ball = ctx.ball();
    NicaResult  out;
    auto        J = pres.join(x, y);
    out.join      = J.kind();
    if (J.is_inconclusive()) {
      return out;
    }
    for (auto p : safe) {
      bool both  = pres.leq(x, ball[p]) && pres.leq(y, ball[p]);
      bool above = J.is_finite() && pres.leq(J.value(), ball[p]);
      if (both != above) {
        ++out.logical_failures;
      }
    }
    OpWord lhs{{x, false}, {x, true}, {y, false}, {y, true}};
    std::optional<OpWord> rhs;
    if (J.is_finite()) {
      rhs = OpWord{{J.value(), false}, {J.value(), true}};
    }
    out.operator_form = compare_on(ctx, safe, lhs, rhs);
    return out;
  }

  IdentityCheck matrix_units_check(ToeplitzContext const& ctx,
                                   std::vector<Element> const& s,
                                   std::vector<std::size_t> const& safe) {
    IdentityCheck out;
    auto const    n = s.size();
    for (std::size_t l = 0; l < n; ++l) {
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t l2 = 0; l2 < n; ++l2) {
          for (std::size_t r2 = 0; r2 < n; ++r2) {
            OpWord lhs{{s[l], false}, {s[r], true}, {s[l2], false}, {s[r2], true}};
            std::optional<OpWord> rhs;
            if (r == l2) {
              rhs = OpWord{{s[l], false}, {s[r2], true}};
            }
            out.absorb(compare_on(ctx, safe, lhs, rhs));
          }
        }
      }
    }
    return out;
  }

  SpanningProduct spanning_product(Presentation const& pres, Element const& p,
                                   Element const& q, Element const& r,
                                   Element const& s, Morphism const* mu) {
    for (auto const* z : {&p, &q, &r, &s}) {
      pres.require_positive(*z, "spanning_product");
    }
    if (mu && ((*mu)(p) != (*mu)(q) || (*mu)(r) != (*mu)(s))) {
      throw Error("spanning_product: p, q or r, s lie in different fibres");
    }
    SpanningProduct out;
    auto            J = pres.join(q, r);
    out.kind          = J.kind();
    if (!J.is_finite()) {
      return out;
    }
    Element const& v = J.value();
    out.left         = pres.mul(pres.mul(p, pres.inv(q)), v);
    out.right        = pres.mul(pres.mul(s, pres.inv(r)), v);
    pres.require_positive(*out.left, "spanning_product result");
    pres.require_positive(*out.right, "spanning_product result");
    return out;
  }

}  // namespace qlo
