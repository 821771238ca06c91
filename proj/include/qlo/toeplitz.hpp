#ifndef QLO_TOEPLITZ_HPP_
#define QLO_TOEPLITZ_HPP_

// The left-regular representation of P truncated to a ball. Each T_x sends
// basis vector e_p to e_{xp}, so every operator in play is a partial
// injection of the ball and the relations can be checked exactly.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qlo/controlled.hpp"
#include "qlo/order.hpp"

namespace qlo {

  class PartialInjection {
   public:
    static constexpr std::int64_t undefined = -1;

    PartialInjection() = default;
    explicit PartialInjection(std::size_t n) : map_(n, undefined) {}

    static PartialInjection identity(std::size_t n);

    std::size_t size() const noexcept {
      return map_.size();
    }
    std::optional<std::size_t> operator()(std::size_t i) const;
    void                       set(std::size_t from, std::size_t to);

    // (*this o g)(i) = this(g(i)).
    PartialInjection compose(PartialInjection const& g) const;
    PartialInjection adjoint() const;
    // Delta: keep only the fixed points.
    PartialInjection diagonal() const;
    PartialInjection restrict(std::vector<std::size_t> const& domain) const;
    std::vector<std::size_t> domain() const;
    bool is_partial_identity() const;
    bool empty() const;

    // Dense 0/1 rows, row = image index.
    std::vector<std::vector<int>> dense() const;

    friend bool operator==(PartialInjection const&, PartialInjection const&) = default;

   private:
    std::vector<std::int64_t> map_;
  };

  PartialInjection operator*(PartialInjection const& f, PartialInjection const& g);

  // p -> x p wherever x p lies in the ball.
  PartialInjection toeplitz_op(Presentation const& pres, Ball const& ball,
                               Element const& x);

  // T_x or T_x^*. A word of factors acts right to left.
  struct OpFactor {
    Element x;
    bool    adjoint = false;
  };
  using OpWord = std::vector<OpFactor>;

  struct ExactValue {
    std::optional<Element> value;            // nullopt: the word kills e_p
    bool                   escaped = false;  // some intermediate left the ball
  };

  // Operators on one ball, with T_x cached per x.
  class ToeplitzContext {
   public:
    ToeplitzContext(Presentation const& pres, Ball const& ball)
        : pres_(pres), ball_(ball) {}

    Presentation const& pres() const noexcept {
      return pres_;
    }
    Ball const& ball() const noexcept {
      return ball_;
    }

    PartialInjection const& op(Element const& x) const;
    PartialInjection        truncated(OpWord const& word) const;
    // The untruncated action on e_p.
    ExactValue exact(OpWord const& word, Element const& p) const;

   private:
    Presentation const&                                           pres_;
    Ball const&                                                   ball_;
    mutable std::unordered_map<Element, PartialInjection, ElementHash> cache_;
  };

  struct IdentityCheck {
    std::size_t              failures = 0;
    std::size_t              escapes  = 0;  // truncation artefacts, undecided
    std::vector<std::string> detail;

    bool passed() const {
      return failures == 0 && escapes == 0;
    }
    void absorb(IdentityCheck const& other);
  };

  // lhs = rhs on every e_p of the safe region, both exactly and as truncated
  // partial injections. A missing rhs is the zero operator.
  IdentityCheck compare_on(ToeplitzContext const& ctx,
                           std::vector<std::size_t> const& safe, OpWord const& lhs,
                           std::optional<OpWord> const& rhs);

  // T_x T_x^* T_y T_y^* = T_j T_j^* with j = x v y, or 0 when x v y is
  // infinite. The logical form compares {p : x, y <= p} with {p : j <= p}.
  struct NicaResult {
    JoinKind      join             = JoinKind::finite;
    std::size_t   logical_failures = 0;
    IdentityCheck operator_form;

    bool passed() const {
      return join != JoinKind::inconclusive && logical_failures == 0
             && operator_form.passed();
    }
  };

  NicaResult check_nica(ToeplitzContext const& ctx, Element const& x,
                        Element const& y, std::vector<std::size_t> const& safe);

  // E_{lr} = T_{s_l} T_{s_r}^* over a family s; checks
  // E_{lr} E_{l'r'} = [r = l'] E_{lr'} on the safe region.
  IdentityCheck matrix_units_check(ToeplitzContext const& ctx,
                                   std::vector<Element> const& s,
                                   std::vector<std::size_t> const& safe);

  struct SpanningProduct {
    JoinKind                kind = JoinKind::infinite;
    std::optional<Element>  left;   // p q^-1 (q v r)
    std::optional<Element>  right;  // s r^-1 (q v r)
  };

  // T_p T_q^* T_r T_s^* = T_{p'} T_{s'}^*; mu, when given, must agree on p, q
  // and on r, s.
  SpanningProduct spanning_product(Presentation const& pres, Element const& p,
                                   Element const& q, Element const& r,
                                   Element const& s, Morphism const* mu = nullptr);

}  // namespace qlo

#endif  // QLO_TOEPLITZ_HPP_
