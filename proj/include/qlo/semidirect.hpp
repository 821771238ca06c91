#ifndef QLO_SEMIDIRECT_HPP_
#define QLO_SEMIDIRECT_HPP_

// (F, F+) x| (Z, N) with the action of 1 given by generator images. Elements
// are pairs (n, h) with (n, h)(n', h') = (n phi^h(n'), h + h'). The stable
// generator (e, 1) prints as t.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlo/presentation.hpp"
#include "qlo/words.hpp"

namespace qlo {

  enum class SdJoinRule {
    levelwise,  // phi permutes the generators, so phi(F+) = F+
    phi_ab,     // phi(a) = ab, phi(b) = b
    generic,    // comparable pairs only
  };

  struct SdParams {
    std::string              name;
    std::vector<std::string> names;
    std::vector<FWord>       images;          // phi(generator i)
    std::vector<FWord>       inverse_images;  // phi^-1(generator i)
    SdJoinRule               rule = SdJoinRule::generic;
  };

  struct SdElement {
    FWord        n;
    std::int64_t h = 0;

    friend bool operator==(SdElement const&, SdElement const&) = default;
  };

  // A pair with two incomparable minimal common upper bounds.
  struct SdNonJoinWitness {
    SdElement              x;
    SdElement              y;
    std::vector<SdElement> bounds;
  };

  class Semidirect final : public Presentation {
   public:
    explicit Semidirect(SdParams p);

    static Semidirect swap2();
    static Semidirect perm3();
    static Semidirect phi_ab();
    static Semidirect nonexample();

    SdParams const& params() const noexcept {
      return p_;
    }
    std::size_t rank() const noexcept {
      return p_.names.size();
    }
    std::optional<SdNonJoinWitness> const& non_join_witness() const noexcept {
      return witness_;
    }

    // phi^k applied to a word; negative k uses the inverse images.
    FWord act(std::int64_t k, FWord const& n) const;

    SdElement make(FWord n, std::int64_t h) const;
    SdElement make(std::string_view n, std::int64_t h) const;  // positive spelling
    SdElement mul(SdElement const& x, SdElement const& y) const;
    SdElement inv(SdElement const& x) const;
    bool      is_positive(SdElement const& x) const;
    bool      leq(SdElement const& x, SdElement const& y) const;
    BasicJoin<SdElement> join(SdElement const& x, SdElement const& y) const;

    Element   encode(SdElement const& x) const;
    SdElement decode(Element const& x) const;

    Family family() const noexcept override {
      return Family::semidirect;
    }
    std::string name() const override {
      return p_.name;
    }
    Element     identity() const override;
    Element     mul(Element const& x, Element const& y) const override;
    Element     inv(Element const& x) const override;
    bool        is_positive(Element const& x) const override;
    bool        leq(Element const& x, Element const& y) const override;
    JoinResult  join(Element const& x, Element const& y) const override;
    bool        join_is_exact() const override {
      return p_.rule != SdJoinRule::generic;
    }
    std::string to_string(Element const& x) const override;
    std::string to_string(SdElement const& x) const;
    std::vector<std::string> generator_names() const override;
    Element                  generator(std::size_t i) const override;
    std::vector<Element>     letters() const override;
    std::optional<std::vector<std::size_t>> positive_witness(
        Element const& x) const override;
    std::vector<Element> probe_elements() const override;

   private:
    BasicJoin<SdElement> join_phi_ab(SdElement const& x, SdElement const& y) const;

    SdParams                        p_;
    std::optional<SdNonJoinWitness> witness_;
  };

}  // namespace qlo

#endif  // QLO_SEMIDIRECT_HPP_
