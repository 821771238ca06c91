#include "qlo/words.hpp"

#include <algorithm>
#include <sstream>

namespace qlo {

  char const* to_string(JoinKind k) noexcept {
    switch (k) {
      case JoinKind::finite:
        return "finite";
      case JoinKind::infinite:
        return "infinite";
      default:
        return "inconclusive";
    }
  }

  namespace {
    void check_letter(std::size_t rank, Letter l) {
      if (l.gen >= rank || (l.sign != 1 && l.sign != -1)) {
        throw Error("letter outside the alphabet");
      }
    }
  }  // namespace

  FWord FWord::reduce(std::size_t rank, std::span<Letter const> raw) {
    FWord result(rank);
    auto& out = result.letters_;
    out.reserve(raw.size());
    for (auto l : raw) {
      check_letter(rank, l);
      if (!out.empty() && out.back() == l.inverse()) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    return result;
  }

  FWord FWord::from_positive(std::size_t rank, std::span<Gen const> gens) {
    FWord result(rank);
    for (auto g : gens) {
      check_letter(rank, Letter{g, 1});
      result.letters_.push_back(Letter{g, 1});
    }
    return result;
  }

  FWord FWord::generator(std::size_t rank, Gen g, int sign) {
    Letter l{g, sign};
    return reduce(rank, std::span<Letter const>(&l, 1));
  }

  FWord FWord::prefix(std::size_t n) const {
    FWord r(rank_);
    r.letters_.assign(letters_.begin(),
                      letters_.begin() + std::min(n, letters_.size()));
    return r;
  }

  FWord FWord::suffix(std::size_t n) const {
    FWord r(rank_);
    n = std::min(n, letters_.size());
    r.letters_.assign(letters_.end() - n, letters_.end());
    return r;
  }

  FWord mul(FWord const& x, FWord const& y) {
    if (x.rank() != y.rank()) {
      throw Error("alphabet mismatch in free-group product");
    }
    auto xs = x.letters();
    auto ys = y.letters();
    // Cancellation only happens at the seam.
    std::size_t k = 0;
    while (k < xs.size() && k < ys.size()
           && xs[xs.size() - 1 - k] == ys[k].inverse()) {
      ++k;
    }
    std::vector<Letter> raw(xs.begin(), xs.end() - k);
    raw.insert(raw.end(), ys.begin() + k, ys.end());
    return FWord::reduce(x.rank(), raw);
  }

  FWord inv(FWord const& x) {
    std::vector<Letter> raw;
    raw.reserve(x.size());
    for (auto it = x.letters().rbegin(); it != x.letters().rend(); ++it) {
      raw.push_back(it->inverse());
    }
    return FWord::reduce(x.rank(), raw);
  }

  FWord pow(FWord const& x, std::int64_t k) {
    FWord base = k < 0 ? inv(x) : x;
    FWord r(x.rank());
    for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) {
      r = mul(r, base);
    }
    return r;
  }

  std::int64_t exponent_sum(FWord const& x, Gen g) {
    std::int64_t s = 0;
    for (auto l : x.letters()) {
      if (l.gen == g) {
        s += l.sign;
      }
    }
    return s;
  }

  bool is_prefix(FWord const& p, FWord const& w) {
    return p.size() <= w.size()
           && std::equal(p.letters().begin(), p.letters().end(),
                         w.letters().begin());
  }

  bool is_suffix(FWord const& s, FWord const& w) {
    return s.size() <= w.size()
           && std::equal(s.letters().rbegin(), s.letters().rend(),
                         w.letters().rbegin());
  }

  bool fplus_is_positive(FWord const& x) {
    return std::all_of(x.letters().begin(), x.letters().end(),
                       [](Letter l) { return l.is_positive(); });
  }

  BasicJoin<FWord> fplus_join(FWord const& x, FWord const& y) {
    if (!fplus_is_positive(x) || !fplus_is_positive(y)) {
      throw Error("fplus_join requires positive words");
    }
    if (is_prefix(x, y)) {
      return BasicJoin<FWord>::finite(y);
    }
    if (is_prefix(y, x)) {
      return BasicJoin<FWord>::finite(x);
    }
    return BasicJoin<FWord>::infinite();
  }

  bool scarparo_is_positive(FWord const& x) {
    return x.empty() || (fplus_is_positive(x) && x.front().gen == 1);
  }

  BasicJoin<FWord> scarparo_join(FWord const& x, FWord const& y) {
    if (!scarparo_is_positive(x) || !scarparo_is_positive(y)) {
      throw Error("scarparo_join requires elements of the Scarparo cone");
    }
    // x <= y iff y = x or y = x b w; a prefix step starting with a is not
    // in the cone, so such pairs have no common upper bound.
    auto above = [](FWord const& lo, FWord const& hi) {
      return is_prefix(lo, hi)
             && (lo.size() == hi.size() || hi.letters()[lo.size()].gen == 1);
    };
    if (above(x, y)) {
      return BasicJoin<FWord>::finite(y);
    }
    if (above(y, x)) {
      return BasicJoin<FWord>::finite(x);
    }
    return BasicJoin<FWord>::infinite();
  }

  FWord largest_common_suffix(FWord const& h, FWord const& u) {
    auto        hs = h.letters();
    auto        us = u.letters();
    std::size_t k  = 0;
    while (k < hs.size() && k < us.size()
           && hs[hs.size() - 1 - k] == us[us.size() - 1 - k]) {
      ++k;
    }
    return u.suffix(k);
  }

  std::string to_string(FWord const& x, std::span<std::string const> names) {
    if (x.empty()) {
      return "e";
    }
    std::ostringstream os;
    auto               ls    = x.letters();
    bool               first = true;
    for (std::size_t i = 0; i < ls.size();) {
      std::size_t j = i;
      while (j < ls.size() && ls[j] == ls[i]) {
        ++j;
      }
      auto const run = static_cast<std::int64_t>(j - i) * ls[i].sign;
      if (!first) {
        os << ' ';
      }
      first = false;
      os << names[ls[i].gen];
      if (run != 1) {
        os << '^' << run;
      }
      i = j;
    }
    return os.str();
  }

  void encode(FWord const& x, std::vector<Element::value_type>& out) {
    for (auto l : x.letters()) {
      out.push_back(static_cast<Element::value_type>(l.gen + 1) * l.sign);
    }
  }

  FWord decode_fword(std::size_t                          rank,
                     std::span<Element::value_type const> code) {
    std::vector<Letter> raw;
    raw.reserve(code.size());
    for (auto v : code) {
      raw.push_back(Letter{static_cast<Gen>((v < 0 ? -v : v) - 1),
                           v < 0 ? -1 : 1});
    }
    return FWord::reduce(rank, raw);
  }

}  // namespace qlo
