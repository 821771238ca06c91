#ifndef QLO_PRESENTATION_HPP_
#define QLO_PRESENTATION_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qlo/element.hpp"

namespace qlo {

  enum class Family { free, scarparo, lattice, bs, hnn, graphprod, semidirect };

  char const* to_string(Family f) noexcept;

  // The capability set of an ordered group (G, P). Elements are opaque
  // canonical encodings owned by the presentation that produced them.
  class Presentation {
   public:
    virtual ~Presentation() = default;

    virtual Family      family() const noexcept = 0;
    virtual std::string name() const            = 0;

    virtual Element identity() const                                = 0;
    virtual Element mul(Element const& x, Element const& y) const   = 0;
    virtual Element inv(Element const& x) const                     = 0;
    virtual bool    is_positive(Element const& x) const             = 0;
    virtual JoinResult join(Element const& x, Element const& y) const = 0;

    // x <= y iff x^-1 y lies in P.
    virtual bool leq(Element const& x, Element const& y) const {
      return is_positive(mul(inv(x), y));
    }

    // False when join() may answer Inconclusive.
    virtual bool join_is_exact() const {
      return true;
    }

    virtual std::string to_string(Element const& x) const = 0;

    // Whitespace separated tokens `name` or `name^k` over generator_names();
    // `e` is the identity.
    virtual Element parse(std::string_view text) const;

    virtual std::vector<std::string> generator_names() const = 0;
    virtual Element                  generator(std::size_t i) const = 0;

    // The letters in which positive words are spelled. Ball enumeration
    // steps through them and positivity witnesses index into them.
    virtual std::vector<Element> letters() const = 0;

    // Ball neighbours of a positive element: x times each letter by default.
    virtual std::vector<Element> successors(Element const& x) const;

    // A word over letters() whose product is x, or nullopt when x is not
    // positive.
    virtual std::optional<std::vector<std::size_t>> positive_witness(
        Element const& x) const = 0;

    // Extra elements a ball should contain for this presentation's checks.
    virtual std::vector<Element> probe_elements() const {
      return {};
    }

    Element power(Element const& x, std::int64_t k) const;
    Element product(std::span<std::size_t const> word) const;
    void    require_positive(Element const& x, char const* what) const;
  };

  using PresentationPtr = std::shared_ptr<Presentation const>;

  // Splits "a b^-2 c" into (name, exponent) pairs.
  std::vector<std::pair<std::string, std::int64_t>> tokenize_word(
      std::string_view text);

  std::string power_string(std::string const& name, std::int64_t k);

}  // namespace qlo

#endif  // QLO_PRESENTATION_HPP_
