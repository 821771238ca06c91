#ifndef QLO_TESTS_HELPERS_HPP_
#define QLO_TESTS_HELPERS_HPP_

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "qlo/order.hpp"
#include "qlo/presets.hpp"

namespace qlo::testing {

  inline PresentationPtr preset(std::string const& name) {
    return make_preset(name);
  }

  // Every preset that is a weak quasi-lattice.
  inline std::vector<std::string> wql_presets() {
    return {"free:2",      "scarparo",    "bs:1,2",        "bs:2,3",
            "bs:2,-3",     "bs:3,-2",     "bs:1,-1",       "hnn+:x,y@xy",
            "hnn-:x,y@xy", "graph:path3", "graph:noedge2", "graph:complete2",
            "sd:swap2",    "sd:perm3",    "sd:phi-ab",     "z:a,b"};
  }

  // A product of n letters or inverse letters chosen uniformly.
  inline Element random_element(Presentation const& pres, std::mt19937_64& rng,
                                std::size_t n) {
    auto const letters = pres.letters();
    std::uniform_int_distribution<std::size_t> pick(0, 2 * letters.size() - 1);
    Element                                    x = pres.identity();
    for (std::size_t i = 0; i < n; ++i) {
      auto k = pick(rng);
      auto l = letters[k / 2];
      x      = pres.mul(x, k % 2 ? pres.inv(l) : l);
    }
    return x;
  }

  inline Element random_positive(Presentation const& pres, std::mt19937_64& rng,
                                 std::size_t n) {
    auto const letters = pres.letters();
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    Element                                    x = pres.identity();
    for (std::size_t i = 0; i < n; ++i) {
      x = pres.mul(x, letters[pick(rng)]);
    }
    return x;
  }

  // Pairs of the inner ball whose structural join is finite inside the outer
  // ball but disagrees with the order oracle there.
  struct OracleScan {
    std::size_t pairs       = 0;
    std::size_t compared    = 0;
    std::size_t mismatches  = 0;
    std::vector<std::string> detail;
  };

  inline OracleScan scan_against_oracle(Presentation const& pres, std::size_t inner,
                                        std::size_t outer) {
    OracleScan       out;
    Ball const       ball  = enumerate_ball(pres, outer);
    OrderTable const table(pres, ball);
    auto const       idx = ball.within(inner);
    for (auto i : idx) {
      for (auto j : idx) {
        ++out.pairs;
        auto const J = pres.join(ball[i], ball[j]);
        if (!J.is_finite() || !ball.contains(J.value())) {
          continue;
        }
        ++out.compared;
        auto const O = oracle_join(table, ball, i, j);
        if (!O.is_finite() || O.value() != J.value()) {
          ++out.mismatches;
          if (out.detail.size() < 5) {
            out.detail.push_back(pres.to_string(ball[i]) + " | " + pres.to_string(ball[j])
                                 + " -> " + pres.to_string(J.value()));
          }
        }
      }
    }
    return out;
  }

  // Structural answers that the ball contradicts: a finite join that the
  // oracle does not confirm, or an infinite join with an upper bound present.
  inline std::size_t contradictions(Presentation const& pres, std::size_t inner,
                                    std::size_t outer) {
    Ball const       ball = enumerate_ball(pres, outer);
    OrderTable const table(pres, ball);
    std::size_t      bad = 0;
    auto const       idx = ball.within(inner);
    for (auto i : idx) {
      for (auto j : idx) {
        auto const J = pres.join(ball[i], ball[j]);
        auto const O = oracle_join(table, ball, i, j);
        if (J.is_infinite() && !table.common_upper_bounds(i, j).empty()) {
          ++bad;
        } else if (J.is_finite() && O.is_finite() && O.value() != J.value()) {
          ++bad;
        }
      }
    }
    return bad;
  }

}  // namespace qlo::testing

#endif  // QLO_TESTS_HELPERS_HPP_
