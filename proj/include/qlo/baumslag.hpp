#ifndef QLO_BAUMSLAG_HPP_
#define QLO_BAUMSLAG_HPP_

// Baumslag-Solitar groups <a, b : a b^c = b^d a> with c >= 1 and d != 0.
// Negative d gives the relator b^|d| a b^c = a.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qlo/presentation.hpp"

namespace qlo {

  struct BsParams {
    std::int64_t c = 1;
    std::int64_t d = 1;  // signed
  };

  // b^{m_0} a^{e_1} b^{m_1} ... a^{e_k} b^{m_k}. Canonical forms keep
  // m_{i-1} in [0, |d|) before a and in [0, c) before a^-1.
  struct BsWord {
    std::vector<std::int64_t> exps{0};
    std::vector<int>          signs;

    friend bool operator==(BsWord const&, BsWord const&) = default;
  };

  // A b-run (is_a false, value = exponent) or a^{value} with value = +-1.
  struct BsToken {
    bool         is_a  = false;
    std::int64_t value = 0;
  };

  struct ChainCheck {
    std::string          name;
    bool                 passed = true;
    std::vector<std::string> detail;
  };

  struct ChainDemoReport {
    std::string             h;
    std::vector<ChainCheck> checks;  // domination, strict decrease, no lower bound

    bool passed() const;
  };

  class BaumslagSolitar final : public Presentation {
   public:
    explicit BaumslagSolitar(BsParams p);

    BsParams params() const noexcept {
      return p_;
    }

    BsWord canon(std::span<BsToken const> tokens) const;
    BsWord canon_letters(std::string_view word) const;  // over {a, b}
    BsWord mul(BsWord const& x, BsWord const& y) const;
    BsWord inv(BsWord const& x) const;
    bool   is_positive(BsWord const& x) const;
    std::int64_t height(BsWord const& x) const;
    bool   leq(BsWord const& x, BsWord const& y) const;
    BasicJoin<BsWord> join(BsWord const& x, BsWord const& y) const;
    // Exponents of a and b in a positive word equal to x.
    std::optional<std::vector<std::int64_t>> witness_runs(BsWord const& x) const;

    Element encode(BsWord const& w) const;
    BsWord  decode(Element const& x) const;

    // h = a b^-|d| a^-1 sits below every b^{n|d|} a (negative d only).
    ChainDemoReport chain_demo(std::size_t n_max, std::size_t radius) const;

    Family family() const noexcept override {
      return Family::bs;
    }
    std::string name() const override;
    Element     identity() const override;
    Element     mul(Element const& x, Element const& y) const override;
    Element     inv(Element const& x) const override;
    bool        is_positive(Element const& x) const override;
    bool        leq(Element const& x, Element const& y) const override;
    JoinResult  join(Element const& x, Element const& y) const override;
    std::string to_string(Element const& x) const override;
    std::string to_string(BsWord const& x) const;
    Element     parse(std::string_view text) const override;
    std::vector<std::string> generator_names() const override {
      return {"a", "b"};
    }
    Element              generator(std::size_t i) const override;
    std::vector<Element> letters() const override;
    std::optional<std::vector<std::size_t>> positive_witness(
        Element const& x) const override;

   private:
    std::vector<BsToken> tokens(BsWord const& x) const;

    BsParams p_;
  };

  std::int64_t floor_mod(std::int64_t a, std::int64_t m);

}  // namespace qlo

#endif  // QLO_BAUMSLAG_HPP_
