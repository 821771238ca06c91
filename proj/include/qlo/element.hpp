#ifndef QLO_ELEMENT_HPP_
#define QLO_ELEMENT_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qlo/error.hpp"

namespace qlo {

  // An opaque, presentation-tagged canonical form. Each Presentation encodes
  // its own canonical form into a flat integer sequence; two elements of the
  // same presentation are equal iff their encodings are equal, so equality,
  // ordering and hashing never need to consult the presentation.
  class Element {
   public:
    using value_type = std::int64_t;

    Element() = default;
    explicit Element(std::vector<value_type> code) : code_(std::move(code)) {}

    std::span<value_type const> code() const noexcept {
      return code_;
    }

    std::size_t hash() const noexcept {
      std::size_t h = 0xcbf29ce484222325ULL;
      for (auto v : code_) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6)
             + (h >> 2);
      }
      return h;
    }

    friend bool operator==(Element const&, Element const&) = default;
    friend auto operator<=>(Element const&, Element const&) = default;

   private:
    std::vector<value_type> code_;
  };

  struct ElementHash {
    std::size_t operator()(Element const& x) const noexcept {
      return x.hash();
    }
  };

  enum class JoinKind { finite, infinite, inconclusive };

  // Finite(value) | Infinite | InconclusiveWithinBall(radius).
  template <typename T>
  class BasicJoin {
   public:
    static BasicJoin finite(T value) {
      BasicJoin r(JoinKind::finite);
      r.value_ = std::move(value);
      return r;
    }
    static BasicJoin infinite() {
      return BasicJoin(JoinKind::infinite);
    }
    static BasicJoin inconclusive(std::size_t radius) {
      BasicJoin r(JoinKind::inconclusive);
      r.radius_ = radius;
      return r;
    }

    JoinKind kind() const noexcept {
      return kind_;
    }
    bool is_finite() const noexcept {
      return kind_ == JoinKind::finite;
    }
    bool is_infinite() const noexcept {
      return kind_ == JoinKind::infinite;
    }
    bool is_inconclusive() const noexcept {
      return kind_ == JoinKind::inconclusive;
    }

    T const& value() const {
      if (!value_) {
        throw Error("join result has no finite value");
      }
      return *value_;
    }

    std::size_t radius() const noexcept {
      return radius_;
    }

    template <typename F>
    auto map(F&& f) const -> BasicJoin<std::invoke_result_t<F, T const&>> {
      using U = std::invoke_result_t<F, T const&>;
      switch (kind_) {
        case JoinKind::finite:
          return BasicJoin<U>::finite(f(*value_));
        case JoinKind::infinite:
          return BasicJoin<U>::infinite();
        default:
          return BasicJoin<U>::inconclusive(radius_);
      }
    }

    friend bool operator==(BasicJoin const&, BasicJoin const&) = default;

   private:
    explicit BasicJoin(JoinKind k) : kind_(k) {}

    JoinKind           kind_;
    std::optional<T>   value_;
    std::size_t        radius_ = 0;
  };

  using JoinResult = BasicJoin<Element>;

  char const* to_string(JoinKind k) noexcept;

}  // namespace qlo

template <>
struct std::hash<qlo::Element> {
  std::size_t operator()(qlo::Element const& x) const noexcept {
    return x.hash();
  }
};

#endif  // QLO_ELEMENT_HPP_
