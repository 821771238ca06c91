#include "qlo/semidirect.hpp"

#include <algorithm>

namespace qlo {

  namespace {
    FWord spell(std::size_t rank, std::string_view s) {
      std::vector<Gen> gens;
      for (char c : s) {
        gens.push_back(static_cast<Gen>(c - 'a'));
      }
      return FWord::from_positive(rank, gens);
    }
  }  // namespace

  Semidirect::Semidirect(SdParams p) : p_(std::move(p)) {
    auto const r = rank();
    if (r == 0 || p_.images.size() != r || p_.inverse_images.size() != r) {
      throw Error("semidirect: need one image and one inverse image per generator");
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (p_.images[i].rank() != r || p_.inverse_images[i].rank() != r) {
        throw Error("semidirect: images over the wrong alphabet");
      }
      if (!fplus_is_positive(p_.images[i])) {
        throw Error("semidirect: the action must map positive words to positive words");
      }
    }
    for (std::size_t i = 0; i < r; ++i) {
      FWord g = FWord::generator(r, static_cast<Gen>(i));
      if (act(1, act(-1, g)) != g || act(-1, act(1, g)) != g) {
        throw Error("semidirect: inverse images do not invert the action");
      }
    }
  }

  Semidirect Semidirect::swap2() {
    SdParams p{"sd:swap2", {"a", "b"}, {}, {}, SdJoinRule::levelwise};
    p.images         = {spell(2, "b"), spell(2, "a")};
    p.inverse_images = p.images;
    return Semidirect(std::move(p));
  }

  Semidirect Semidirect::perm3() {
    SdParams p{"sd:perm3", {"a", "b", "c"}, {}, {}, SdJoinRule::levelwise};
    p.images         = {spell(3, "b"), spell(3, "c"), spell(3, "a")};
    p.inverse_images = {spell(3, "c"), spell(3, "a"), spell(3, "b")};
    return Semidirect(std::move(p));
  }

  Semidirect Semidirect::phi_ab() {
    SdParams p{"sd:phi-ab", {"a", "b"}, {}, {}, SdJoinRule::phi_ab};
    p.images         = {spell(2, "ab"), spell(2, "b")};
    p.inverse_images = {qlo::mul(spell(2, "a"), qlo::inv(spell(2, "b"))), spell(2, "b")};
    return Semidirect(std::move(p));
  }

  Semidirect Semidirect::nonexample() {
    SdParams p{"sd:nonexample", {"a", "b"}, {}, {}, SdJoinRule::generic};
    p.images = {spell(2, "ba"), spell(2, "bba")};
    // a = b^-1 phi(a) and phi(b) = b phi(a)
    FWord const a = spell(2, "a"), b = spell(2, "b");
    p.inverse_images = {qlo::mul(qlo::mul(a, qlo::inv(b)), a), qlo::mul(b, qlo::inv(a))};
    Semidirect sd(std::move(p));
    sd.witness_ = SdNonJoinWitness{
        sd.make("a", 2),
        sd.make("ab", 1),
        {sd.make("abbaba", 2), sd.make("abbabbaba", 2)}};
    return sd;
  }

  FWord Semidirect::act(std::int64_t k, FWord const& n) const {
    auto const& imgs = k >= 0 ? p_.images : p_.inverse_images;
    FWord       x    = n;
    for (std::int64_t s = 0; s < (k >= 0 ? k : -k); ++s) {
      std::vector<Letter> raw;
      for (auto l : x.letters()) {
        FWord img = l.is_positive() ? imgs[l.gen] : qlo::inv(imgs[l.gen]);
        raw.insert(raw.end(), img.letters().begin(), img.letters().end());
      }
      x = FWord::reduce(rank(), raw);
    }
    return x;
  }

  SdElement Semidirect::make(FWord n, std::int64_t h) const {
    if (n.rank() != rank()) {
      throw Error("semidirect: word over the wrong alphabet");
    }
    return SdElement{std::move(n), h};
  }

  SdElement Semidirect::make(std::string_view n, std::int64_t h) const {
    return make(spell(rank(), n), h);
  }

  SdElement Semidirect::mul(SdElement const& x, SdElement const& y) const {
    return SdElement{qlo::mul(x.n, act(x.h, y.n)), x.h + y.h};
  }

  SdElement Semidirect::inv(SdElement const& x) const {
    return SdElement{act(-x.h, qlo::inv(x.n)), -x.h};
  }

  bool Semidirect::is_positive(SdElement const& x) const {
    return x.h >= 0 && fplus_is_positive(x.n);
  }

  // (l, q) <= (m, r) iff q <= r and phi^-q(l^-1 m) is positive.
  bool Semidirect::leq(SdElement const& x, SdElement const& y) const {
    return x.h <= y.h && fplus_is_positive(act(-x.h, qlo::mul(qlo::inv(x.n), y.n)));
  }

  BasicJoin<SdElement> Semidirect::join(SdElement const& x,
                                        SdElement const& y) const {
    using J = BasicJoin<SdElement>;
    if (!is_positive(x) || !is_positive(y)) {
      throw Error("semidirect join needs positive elements");
    }
    switch (p_.rule) {
      case SdJoinRule::levelwise: {
        auto n = fplus_join(x.n, y.n);
        if (!n.is_finite()) {
          return J::infinite();
        }
        return J::finite(SdElement{n.value(), std::max(x.h, y.h)});
      }
      case SdJoinRule::phi_ab:
        return join_phi_ab(x, y);
      default:
        if (leq(x, y)) {
          return J::finite(y);
        }
        if (leq(y, x)) {
          return J::finite(x);
        }
        return J::inconclusive(0);
    }
  }

  // With p a prefix of q and p^-1 q = b^{i_0} a ... a b^{i_k}, an upper bound
  // exists iff every interior run reaches the height m of (p, m); the last
  // run is padded up to m.
  BasicJoin<SdElement> Semidirect::join_phi_ab(SdElement const& x,
                                               SdElement const& y) const {
    using J = BasicJoin<SdElement>;
    if (!is_prefix(x.n, y.n)) {
      if (is_prefix(y.n, x.n)) {
        return join_phi_ab(y, x);
      }
      return J::infinite();
    }
    std::int64_t const        m = x.h;
    std::int64_t const        h = std::max(x.h, y.h);
    std::vector<std::int64_t> runs{0};
    FWord const               rest = y.n.drop_prefix(x.n.size());
    for (auto l : rest.letters()) {
      if (l.gen == 0) {
        runs.push_back(0);
      } else {
        ++runs.back();
      }
    }
    auto const k = runs.size() - 1;
    for (std::size_t j = 1; j < k; ++j) {
      if (runs[j] < m) {
        return J::infinite();
      }
    }
    if (k == 0 || runs[k] >= m) {
      return J::finite(SdElement{y.n, h});
    }
    FWord pad = pow(FWord::generator(2, 1), m - runs[k]);
    return J::finite(SdElement{qlo::mul(y.n, pad), h});
  }

  Element Semidirect::encode(SdElement const& x) const {
    std::vector<Element::value_type> code{x.h};
    qlo::encode(x.n, code);
    return Element(std::move(code));
  }

  SdElement Semidirect::decode(Element const& x) const {
    auto c = x.code();
    if (c.empty()) {
      throw Error("malformed semidirect encoding");
    }
    return SdElement{decode_fword(rank(), c.subspan(1)), c[0]};
  }

  Element Semidirect::identity() const {
    return encode(SdElement{FWord(rank()), 0});
  }

  Element Semidirect::mul(Element const& x, Element const& y) const {
    return encode(mul(decode(x), decode(y)));
  }

  Element Semidirect::inv(Element const& x) const {
    return encode(inv(decode(x)));
  }

  bool Semidirect::is_positive(Element const& x) const {
    return is_positive(decode(x));
  }

  bool Semidirect::leq(Element const& x, Element const& y) const {
    return leq(decode(x), decode(y));
  }

  JoinResult Semidirect::join(Element const& x, Element const& y) const {
    return join(decode(x), decode(y)).map([this](SdElement const& j) {
      return encode(j);
    });
  }

  std::string Semidirect::to_string(SdElement const& x) const {
    std::string s = x.n.empty() ? "" : qlo::to_string(x.n, p_.names);
    if (x.h != 0) {
      s += (s.empty() ? "" : " ") + power_string("t", x.h);
    }
    return s.empty() ? "e" : s;
  }

  std::string Semidirect::to_string(Element const& x) const {
    return to_string(decode(x));
  }

  std::vector<std::string> Semidirect::generator_names() const {
    auto n = p_.names;
    n.emplace_back("t");
    return n;
  }

  Element Semidirect::generator(std::size_t i) const {
    if (i < rank()) {
      return encode(SdElement{FWord::generator(rank(), static_cast<Gen>(i)), 0});
    }
    if (i == rank()) {
      return encode(SdElement{FWord(rank()), 1});
    }
    throw Error("generator index out of range");
  }

  std::vector<Element> Semidirect::letters() const {
    std::vector<Element> out;
    for (std::size_t i = 0; i <= rank(); ++i) {
      out.push_back(generator(i));
    }
    return out;
  }

  std::optional<std::vector<std::size_t>> Semidirect::positive_witness(
      Element const& x) const {
    auto s = decode(x);
    if (!is_positive(s)) {
      return std::nullopt;
    }
    std::vector<std::size_t> word;
    for (auto l : s.n.letters()) {
      word.push_back(l.gen);
    }
    word.insert(word.end(), static_cast<std::size_t>(s.h), rank());
    return word;
  }

  // Everything below the recorded bounds, so that their minimality is
  // decided inside any ball that holds them.
  std::vector<Element> Semidirect::probe_elements() const {
    std::vector<Element> out;
    if (!witness_) {
      return out;
    }
    for (auto const& b : witness_->bounds) {
      for (std::size_t len = 0; len <= b.n.size(); ++len) {
        for (std::int64_t h = 0; h <= b.h; ++h) {
          SdElement z{b.n.prefix(len), h};
          if (leq(z, b)) {
            out.push_back(encode(z));
          }
        }
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

}  // namespace qlo
