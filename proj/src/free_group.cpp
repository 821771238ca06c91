#include "qlo/free_group.hpp"

#include <algorithm>

namespace qlo {

  FreePresentation::FreePresentation(std::vector<std::string> names)
      : names_(std::move(names)) {
    if (names_.empty()) {
      throw Error("free group needs at least one generator");
    }
  }

  std::vector<std::string> FreePresentation::default_names(std::size_t rank) {
    std::vector<std::string> out;
    for (char c = 'a'; out.size() < rank; ++c) {
      if (c > 'z') {
        throw Error("free group rank too large for single-letter names");
      }
      if (c != 'e' && c != 't') {
        out.emplace_back(1, c);
      }
    }
    return out;
  }

  std::string FreePresentation::name() const {
    return "free:" + std::to_string(rank());
  }

  Element FreePresentation::encode(FWord const& w) const {
    std::vector<Element::value_type> code;
    qlo::encode(w, code);
    return Element(std::move(code));
  }

  FWord FreePresentation::decode(Element const& x) const {
    return decode_fword(rank(), x.code());
  }

  Element FreePresentation::mul(Element const& x, Element const& y) const {
    return encode(qlo::mul(decode(x), decode(y)));
  }

  Element FreePresentation::inv(Element const& x) const {
    return encode(qlo::inv(decode(x)));
  }

  bool FreePresentation::is_positive(Element const& x) const {
    return std::all_of(x.code().begin(), x.code().end(),
                       [](auto v) { return v > 0; });
  }

  JoinResult FreePresentation::join(Element const& x, Element const& y) const {
    require_positive(x, "join");
    require_positive(y, "join");
    return fplus_join(decode(x), decode(y)).map([this](FWord const& w) {
      return encode(w);
    });
  }

  std::string FreePresentation::to_string(Element const& x) const {
    return qlo::to_string(decode(x), names_);
  }

  Element FreePresentation::generator(std::size_t i) const {
    return encode(FWord::generator(rank(), static_cast<Gen>(i)));
  }

  std::vector<Element> FreePresentation::letters() const {
    std::vector<Element> out;
    for (std::size_t i = 0; i < rank(); ++i) {
      out.push_back(generator(i));
    }
    return out;
  }

  std::optional<std::vector<std::size_t>> FreePresentation::positive_witness(
      Element const& x) const {
    if (!is_positive(x)) {
      return std::nullopt;
    }
    std::vector<std::size_t> word;
    for (auto v : x.code()) {
      word.push_back(static_cast<std::size_t>(v - 1));
    }
    return word;
  }

  ScarparoPresentation::ScarparoPresentation() : FreePresentation({"a", "b"}) {}

  bool ScarparoPresentation::is_positive(Element const& x) const {
    return scarparo_is_positive(decode(x));
  }

  JoinResult ScarparoPresentation::join(Element const& x,
                                        Element const& y) const {
    return scarparo_join(decode(x), decode(y)).map([this](FWord const& w) {
      return encode(w);
    });
  }

  // The cone is not finitely generated; balls grow by letters of F instead,
  // starting with b.
  std::vector<Element> ScarparoPresentation::successors(Element const& x) const {
    if (x.code().empty()) {
      return {generator(1)};
    }
    return {mul(x, generator(0)), mul(x, generator(1))};
  }

  std::optional<std::vector<std::size_t>> ScarparoPresentation::positive_witness(
      Element const& x) const {
    if (!is_positive(x)) {
      return std::nullopt;
    }
    return FreePresentation::positive_witness(x);
  }

  LatticePresentation::LatticePresentation(std::vector<std::string> names)
      : names_(std::move(names)) {
    if (names_.empty()) {
      throw Error("lattice needs at least one coordinate");
    }
  }

  std::string LatticePresentation::name() const {
    if (rank() == 1) {
      return "z:" + names_[0];
    }
    std::string s = "z";
    for (std::size_t i = 0; i < rank(); ++i) {
      s += (i == 0 ? ":" : ",") + names_[i];
    }
    return s;
  }

  Element LatticePresentation::make(std::vector<std::int64_t> v) const {
    if (v.size() != rank()) {
      throw Error("lattice vector has the wrong rank");
    }
    return Element(std::move(v));
  }

  Element LatticePresentation::identity() const {
    return Element(std::vector<Element::value_type>(rank(), 0));
  }

  Element LatticePresentation::mul(Element const& x, Element const& y) const {
    std::vector<Element::value_type> v(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
      v[i] = x.code()[i] + y.code()[i];
    }
    return Element(std::move(v));
  }

  Element LatticePresentation::inv(Element const& x) const {
    std::vector<Element::value_type> v(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
      v[i] = -x.code()[i];
    }
    return Element(std::move(v));
  }

  bool LatticePresentation::is_positive(Element const& x) const {
    return std::all_of(x.code().begin(), x.code().end(),
                       [](auto v) { return v >= 0; });
  }

  bool LatticePresentation::leq(Element const& x, Element const& y) const {
    for (std::size_t i = 0; i < rank(); ++i) {
      if (x.code()[i] > y.code()[i]) {
        return false;
      }
    }
    return true;
  }

  JoinResult LatticePresentation::join(Element const& x, Element const& y) const {
    require_positive(x, "join");
    require_positive(y, "join");
    std::vector<Element::value_type> v(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
      v[i] = std::max(x.code()[i], y.code()[i]);
    }
    return JoinResult::finite(Element(std::move(v)));
  }

  std::string LatticePresentation::to_string(Element const& x) const {
    std::string s;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (x.code()[i] != 0) {
        if (!s.empty()) {
          s += ' ';
        }
        s += power_string(names_[i], x.code()[i]);
      }
    }
    return s.empty() ? "e" : s;
  }

  Element LatticePresentation::generator(std::size_t i) const {
    std::vector<Element::value_type> v(rank(), 0);
    v.at(i) = 1;
    return Element(std::move(v));
  }

  std::vector<Element> LatticePresentation::letters() const {
    std::vector<Element> out;
    for (std::size_t i = 0; i < rank(); ++i) {
      out.push_back(generator(i));
    }
    return out;
  }

  std::optional<std::vector<std::size_t>> LatticePresentation::positive_witness(
      Element const& x) const {
    if (!is_positive(x)) {
      return std::nullopt;
    }
    std::vector<std::size_t> word;
    for (std::size_t i = 0; i < rank(); ++i) {
      word.insert(word.end(), static_cast<std::size_t>(x.code()[i]), i);
    }
    return word;
  }

}  // namespace qlo
