#ifndef QLO_FREE_GROUP_HPP_
#define QLO_FREE_GROUP_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "qlo/presentation.hpp"
#include "qlo/words.hpp"

namespace qlo {

  // (F, F+) on a finite alphabet.
  class FreePresentation : public Presentation {
   public:
    explicit FreePresentation(std::vector<std::string> names);

    // a, b, c, ... skipping the reserved names e and t.
    static std::vector<std::string> default_names(std::size_t rank);

    std::size_t rank() const noexcept {
      return names_.size();
    }
    std::vector<std::string> const& names() const noexcept {
      return names_;
    }

    Element encode(FWord const& w) const;
    FWord   decode(Element const& x) const;

    Family      family() const noexcept override {
      return Family::free;
    }
    std::string name() const override;
    Element     identity() const override {
      return Element{};
    }
    Element     mul(Element const& x, Element const& y) const override;
    Element     inv(Element const& x) const override;
    bool        is_positive(Element const& x) const override;
    JoinResult  join(Element const& x, Element const& y) const override;
    std::string to_string(Element const& x) const override;
    std::vector<std::string> generator_names() const override {
      return names_;
    }
    Element              generator(std::size_t i) const override;
    std::vector<Element> letters() const override;
    std::optional<std::vector<std::size_t>> positive_witness(
        Element const& x) const override;

   protected:
    std::vector<std::string> names_;
  };

  // (F(a, b), {e} u bF+).
  class ScarparoPresentation final : public FreePresentation {
   public:
    ScarparoPresentation();

    Family family() const noexcept override {
      return Family::scarparo;
    }
    std::string name() const override {
      return "scarparo";
    }
    bool       is_positive(Element const& x) const override;
    JoinResult join(Element const& x, Element const& y) const override;
    std::vector<Element> successors(Element const& x) const override;
    std::optional<std::vector<std::size_t>> positive_witness(
        Element const& x) const override;
  };

  // (Z^k, N^k) with componentwise order; the targets of controlled maps and
  // the vertex groups of the graph presets.
  class LatticePresentation final : public Presentation {
   public:
    explicit LatticePresentation(std::vector<std::string> names);

    std::size_t rank() const noexcept {
      return names_.size();
    }
    Element make(std::vector<std::int64_t> v) const;

    Family family() const noexcept override {
      return Family::lattice;
    }
    std::string name() const override;
    Element     identity() const override;
    Element     mul(Element const& x, Element const& y) const override;
    Element     inv(Element const& x) const override;
    bool        is_positive(Element const& x) const override;
    bool        leq(Element const& x, Element const& y) const override;
    JoinResult  join(Element const& x, Element const& y) const override;
    std::string to_string(Element const& x) const override;
    std::vector<std::string> generator_names() const override {
      return names_;
    }
    Element              generator(std::size_t i) const override;
    std::vector<Element> letters() const override;
    std::optional<std::vector<std::size_t>> positive_witness(
        Element const& x) const override;

   private:
    std::vector<std::string> names_;
  };

}  // namespace qlo

#endif  // QLO_FREE_GROUP_HPP_
