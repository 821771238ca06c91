#ifndef QLO_ORDER_HPP_
#define QLO_ORDER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qlo/presentation.hpp"

namespace qlo {

  inline constexpr std::size_t default_ball_cap = 200000;

  // Positive elements of word length <= radius, in breadth-first order with
  // the identity first. Immutable after construction.
  class Ball {
   public:
    Ball() = default;

    std::size_t radius() const noexcept {
      return radius_;
    }
    std::size_t size() const noexcept {
      return elements_.size();
    }
    std::vector<Element> const& elements() const noexcept {
      return elements_;
    }
    Element const& operator[](std::size_t i) const {
      return elements_[i];
    }
    // Word length at which the element was first reached.
    std::size_t length(std::size_t i) const {
      return lengths_[i];
    }
    std::optional<std::size_t> find(Element const& x) const;
    bool                       contains(Element const& x) const {
      return index_.count(x) != 0;
    }
    std::size_t index_of(Element const& x) const;

    // Indices of the members of length <= r.
    std::vector<std::size_t> within(std::size_t r) const;

    // A copy with the extra elements appended (length radius + 1).
    Ball augmented(std::vector<Element> const& extra) const;

    friend Ball enumerate_ball(Presentation const&, std::size_t, std::size_t);

   private:
    void push(Element x, std::size_t len);

    std::size_t                                       radius_ = 0;
    std::vector<Element>                              elements_;
    std::vector<std::size_t>                          lengths_;
    std::unordered_map<Element, std::size_t, ElementHash> index_;
  };

  Ball enumerate_ball(Presentation const& pres, std::size_t radius,
                      std::size_t cap = default_ball_cap);

  // The full <= relation on a ball as bit rows: up(i) holds every j with
  // ball[i] <= ball[j].
  class OrderTable {
   public:
    OrderTable(Presentation const& pres, Ball const& ball);

    bool leq(std::size_t i, std::size_t j) const {
      return (up_[i * words_ + j / 64] >> (j % 64)) & 1U;
    }
    std::size_t size() const noexcept {
      return n_;
    }
    // Indices z with ball[i] <= z and ball[j] <= z.
    std::vector<std::size_t> common_upper_bounds(std::size_t i, std::size_t j) const;
    // The <=-minimal members of a set of indices.
    std::vector<std::size_t> minimal(std::vector<std::size_t> const& set) const;

   private:
    std::size_t                n_     = 0;
    std::size_t                words_ = 0;
    std::vector<std::uint64_t> up_;
  };

  // Three-valued join read off a finite ball. Never answers Infinite.
  JoinResult oracle_join(Presentation const& pres, Element const& x,
                         Element const& y, Ball const& ball);
  JoinResult oracle_join(OrderTable const& table, Ball const& ball,
                         std::size_t i, std::size_t j);

  bool verify_join(Presentation const& pres, Element const& x, Element const& y,
                   Element const& j, Ball const& ball);

  struct WqlFinding {
    Element              x;
    Element              y;
    std::vector<Element> upper_bounds;  // the minimal ones
  };

  // Pairs of the ball with two or more incomparable minimal upper bounds
  // inside the ball. Each is a violation candidate within the ball only.
  std::vector<WqlFinding> check_weak_ql(Presentation const& pres, Ball const& ball);
  std::vector<WqlFinding> check_weak_ql(OrderTable const& table, Ball const& ball);

  struct OrderAxiomFailure {
    std::string          law;
    std::vector<Element> elements;
  };

  // Reflexivity, antisymmetry, transitivity and P n P^-1 = {e} on a ball.
  std::vector<OrderAxiomFailure> check_order_axioms(Presentation const& pres,
                                                    Ball const&         ball);

}  // namespace qlo

#endif  // QLO_ORDER_HPP_
