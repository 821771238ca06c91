#include "qlo/order.hpp"

#include <algorithm>
#include <deque>

namespace qlo {

  std::optional<std::size_t> Ball::find(Element const& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::size_t Ball::index_of(Element const& x) const {
    auto i = find(x);
    if (!i) {
      throw Error("element outside the ball");
    }
    return *i;
  }

  std::vector<std::size_t> Ball::within(std::size_t r) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i) {
      if (lengths_[i] <= r) {
        out.push_back(i);
      }
    }
    return out;
  }

  void Ball::push(Element x, std::size_t len) {
    index_.emplace(x, elements_.size());
    elements_.push_back(std::move(x));
    lengths_.push_back(len);
  }

  Ball Ball::augmented(std::vector<Element> const& extra) const {
    Ball b = *this;
    for (auto const& x : extra) {
      if (!b.contains(x)) {
        b.push(x, radius_ + 1);
      }
    }
    return b;
  }

  Ball enumerate_ball(Presentation const& pres, std::size_t radius,
                      std::size_t cap) {
    Ball b;
    b.radius_ = radius;
    b.push(pres.identity(), 0);
    std::size_t frontier_begin = 0;
    for (std::size_t len = 1; len <= radius; ++len) {
      std::size_t frontier_end = b.size();
      for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
        for (auto& y : pres.successors(b.elements_[i])) {
          if (!b.contains(y)) {
            if (b.size() >= cap) {
              throw Error("ball cap of " + std::to_string(cap) + " exceeded");
            }
            b.push(std::move(y), len);
          }
        }
      }
      frontier_begin = frontier_end;
    }
    return b;
  }

  OrderTable::OrderTable(Presentation const& pres, Ball const& ball)
      : n_(ball.size()), words_((ball.size() + 63) / 64), up_(n_ * words_, 0) {
    for (std::size_t i = 0; i < n_; ++i) {
      Element xi = pres.inv(ball[i]);
      for (std::size_t j = 0; j < n_; ++j) {
        if (i == j || pres.is_positive(pres.mul(xi, ball[j]))) {
          up_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
        }
      }
    }
  }

  std::vector<std::size_t> OrderTable::common_upper_bounds(std::size_t i,
                                                           std::size_t j) const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = up_[i * words_ + w] & up_[j * words_ + w];
      while (bits != 0) {
        int b = __builtin_ctzll(bits);
        out.push_back(w * 64 + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
    return out;
  }

  std::vector<std::size_t> OrderTable::minimal(
      std::vector<std::size_t> const& set) const {
    std::vector<std::size_t> out;
    for (auto z : set) {
      bool is_min = std::none_of(set.begin(), set.end(), [&](std::size_t w) {
        return w != z && leq(w, z);
      });
      if (is_min) {
        out.push_back(z);
      }
    }
    return out;
  }

  JoinResult oracle_join(OrderTable const& table, Ball const& ball,
                         std::size_t i, std::size_t j) {
    auto upper = table.common_upper_bounds(i, j);
    // A least element of U, if any, is the unique minimal element that lies
    // below every other member.
    for (auto m : upper) {
      bool least = std::all_of(upper.begin(), upper.end(),
                               [&](std::size_t z) { return table.leq(m, z); });
      if (least) {
        return JoinResult::finite(ball[m]);
      }
    }
    return JoinResult::inconclusive(ball.radius());
  }

  JoinResult oracle_join(Presentation const& pres, Element const& x,
                         Element const& y, Ball const& ball) {
    if (!ball.contains(x) || !ball.contains(y)) {
      throw Error("oracle_join: element outside the ball");
    }
    std::vector<std::size_t> upper;
    for (std::size_t z = 0; z < ball.size(); ++z) {
      if (pres.leq(x, ball[z]) && pres.leq(y, ball[z])) {
        upper.push_back(z);
      }
    }
    for (auto m : upper) {
      bool least = std::all_of(upper.begin(), upper.end(), [&](std::size_t z) {
        return pres.leq(ball[m], ball[z]);
      });
      if (least) {
        return JoinResult::finite(ball[m]);
      }
    }
    return JoinResult::inconclusive(ball.radius());
  }

  bool verify_join(Presentation const& pres, Element const& x, Element const& y,
                   Element const& j, Ball const& ball) {
    if (!pres.leq(x, j) || !pres.leq(y, j)) {
      return false;
    }
    for (auto const& z : ball.elements()) {
      if (pres.leq(x, z) && pres.leq(y, z) && !pres.leq(j, z)) {
        return false;
      }
    }
    return true;
  }

  std::vector<WqlFinding> check_weak_ql(OrderTable const& table,
                                        Ball const&       ball) {
    std::vector<WqlFinding> out;
    for (std::size_t i = 0; i < ball.size(); ++i) {
      for (std::size_t j = i + 1; j < ball.size(); ++j) {
        if (table.leq(i, j) || table.leq(j, i)) {
          continue;
        }
        auto upper = table.common_upper_bounds(i, j);
        if (upper.size() < 2) {
          continue;
        }
        auto mins = table.minimal(upper);
        if (mins.size() < 2) {
          continue;
        }
        WqlFinding f{ball[i], ball[j], {}};
        for (auto m : mins) {
          f.upper_bounds.push_back(ball[m]);
        }
        out.push_back(std::move(f));
      }
    }
    return out;
  }

  std::vector<WqlFinding> check_weak_ql(Presentation const& pres,
                                        Ball const&         ball) {
    return check_weak_ql(OrderTable(pres, ball), ball);
  }

  std::vector<OrderAxiomFailure> check_order_axioms(Presentation const& pres,
                                                    Ball const&         ball) {
    std::vector<OrderAxiomFailure> out;
    OrderTable                     t(pres, ball);
    auto const                     n = ball.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (!pres.leq(ball[i], ball[i])) {
        out.push_back({"reflexivity", {ball[i]}});
      }
      if (i != 0 && pres.is_positive(pres.inv(ball[i]))) {
        out.push_back({"cone meets its inverse", {ball[i]}});
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && t.leq(i, j) && t.leq(j, i)) {
          out.push_back({"antisymmetry", {ball[i], ball[j]}});
        }
        if (!t.leq(i, j)) {
          continue;
        }
        for (std::size_t k = 0; k < n; ++k) {
          if (t.leq(j, k) && !t.leq(i, k)) {
            out.push_back({"transitivity", {ball[i], ball[j], ball[k]}});
          }
        }
      }
    }
    return out;
  }

}  // namespace qlo
