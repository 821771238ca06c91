#ifndef QLO_HNN_HPP_
#define QLO_HNN_HPP_

// HNN extensions of a free group F(S) over <u> and <w> with stable letter t,
// using t^-1 a t = phi(a). PLUS sends u to w (relator u t = t w); MINUS sends
// u to w^-1 (relator u t w = t).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlo/presentation.hpp"
#include "qlo/words.hpp"

namespace qlo {

  enum class HnnMode { plus, minus };

  struct HnnParams {
    std::vector<std::string> names;  // the alphabet S
    FWord                    u;
    FWord                    w;
    HnnMode                  mode = HnnMode::plus;
  };

  // h_0 t^{e_1} h_1 ... t^{e_k} h_k.
  struct HnnNormal {
    std::vector<FWord> parts;
    std::vector<int>   eps;

    friend bool operator==(HnnNormal const&, HnnNormal const&) = default;
  };

  // A base-group word or t^{+-1}.
  struct HnnToken {
    bool  is_t = false;
    int   sign = 1;
    FWord word;
  };

  // {e} and the nonempty suffixes of u.
  std::vector<FWord> omega(FWord const& u);

  // h = rep u^m with rep in the transversal of F/<u> built from largest
  // common suffixes with u.
  std::pair<FWord, std::int64_t> coset_rep(FWord const& u, FWord const& h);

  // Whether some w^m h u^n with |m| <= M, |n| <= N is positive, where
  // M = ceil(|h|/|w|) + 1 and N = ceil(|h|/|u|) + 1.
  bool double_coset_positive(FWord const& u, FWord const& w, FWord const& h);
  // The exponents (m, n) of a positive representative, if found.
  std::optional<std::pair<std::int64_t, std::int64_t>> double_coset_witness(
      FWord const& u, FWord const& w, FWord const& h, std::int64_t extra = 0);

  class HnnExtension final : public Presentation {
   public:
    explicit HnnExtension(HnnParams p);

    HnnParams const& params() const noexcept {
      return p_;
    }
    std::size_t rank() const noexcept {
      return p_.names.size();
    }

    HnnNormal normal_form(std::vector<HnnToken> const& toks) const;
    HnnNormal mul(HnnNormal const& x, HnnNormal const& y) const;
    HnnNormal inv(HnnNormal const& x) const;
    HnnNormal from_word(FWord const& h) const;
    HnnNormal stable_letter(int sign = 1) const;

    bool         is_positive(HnnNormal const& x) const;
    std::int64_t height(HnnNormal const& x) const;
    HnnNormal    stem(HnnNormal const& x) const;
    bool         leq(HnnNormal const& x, HnnNormal const& y) const;
    BasicJoin<HnnNormal> join(HnnNormal const& x, HnnNormal const& y) const;

    // Positive spelling over S and t, as alternating base words and t's:
    // p_0 t p_1 t ... t p_k.
    std::optional<std::vector<FWord>> witness_parts(HnnNormal const& x) const;

    Element   encode(HnnNormal const& x) const;
    HnnNormal decode(Element const& x) const;

    Family family() const noexcept override {
      return Family::hnn;
    }
    std::string name() const override;
    Element     identity() const override;
    Element     mul(Element const& x, Element const& y) const override;
    Element     inv(Element const& x) const override;
    bool        is_positive(Element const& x) const override;
    bool        leq(Element const& x, Element const& y) const override;
    JoinResult  join(Element const& x, Element const& y) const override;
    std::string to_string(Element const& x) const override;
    std::string to_string(HnnNormal const& x) const;
    std::vector<std::string> generator_names() const override;
    Element                  generator(std::size_t i) const override;
    std::vector<Element>     letters() const override;
    std::optional<std::vector<std::size_t>> positive_witness(
        Element const& x) const override;

   private:
    FWord phi_u_power(std::int64_t m) const;  // phi(u^m)
    FWord phi_inv_w_power(std::int64_t m) const;  // phi^-1(w^m)

    HnnParams p_;
  };

}  // namespace qlo

#endif  // QLO_HNN_HPP_
