#include "qlo/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace qlo {

  char const* to_string(Family f) noexcept {
    switch (f) {
      case Family::free:
        return "free";
      case Family::scarparo:
        return "scarparo";
      case Family::lattice:
        return "lattice";
      case Family::bs:
        return "bs";
      case Family::hnn:
        return "hnn";
      case Family::graphprod:
        return "graphprod";
      default:
        return "semidirect";
    }
  }

  std::vector<std::pair<std::string, std::int64_t>> tokenize_word(
      std::string_view text) {
    std::vector<std::pair<std::string, std::int64_t>> out;
    std::size_t                                       i = 0;
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) {
        ++j;
      }
      std::string_view tok = text.substr(i, j - i);
      i                    = j;
      auto caret           = tok.find('^');
      std::string name(tok.substr(0, caret));
      if (name.empty()) {
        throw ParseError("empty generator name in '" + std::string(tok) + "'");
      }
      std::int64_t k = 1;
      if (caret != std::string_view::npos) {
        auto        digits = tok.substr(caret + 1);
        char const* first  = digits.data();
        char const* last   = digits.data() + digits.size();
        if (!digits.empty() && *first == '+') {
          ++first;
        }
        auto [ptr, ec] = std::from_chars(first, last, k);
        if (ec != std::errc() || ptr != last || first == last) {
          throw ParseError("malformed exponent in '" + std::string(tok) + "'");
        }
      }
      out.emplace_back(std::move(name), k);
    }
    return out;
  }

  std::string power_string(std::string const& name, std::int64_t k) {
    return k == 1 ? name : name + "^" + std::to_string(k);
  }

  Element Presentation::parse(std::string_view text) const {
    auto    names = generator_names();
    Element x     = identity();
    for (auto const& [name, k] : tokenize_word(text)) {
      if (name == "e") {
        continue;
      }
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) {
        throw ParseError("unknown generator '" + name + "'");
      }
      x = mul(x, power(generator(static_cast<std::size_t>(it - names.begin())), k));
    }
    return x;
  }

  std::vector<Element> Presentation::successors(Element const& x) const {
    std::vector<Element> out;
    for (auto const& l : letters()) {
      out.push_back(mul(x, l));
    }
    return out;
  }

  Element Presentation::power(Element const& x, std::int64_t k) const {
    Element base = k < 0 ? inv(x) : x;
    Element r    = identity();
    for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) {
      r = mul(r, base);
    }
    return r;
  }

  Element Presentation::product(std::span<std::size_t const> word) const {
    auto    ls = letters();
    Element r  = identity();
    for (auto i : word) {
      if (i >= ls.size()) {
        throw Error("letter index out of range");
      }
      r = mul(r, ls[i]);
    }
    return r;
  }

  void Presentation::require_positive(Element const& x, char const* what) const {
    if (!is_positive(x)) {
      throw Error(std::string(what) + ": " + to_string(x) + " is not positive");
    }
  }

}  // namespace qlo
