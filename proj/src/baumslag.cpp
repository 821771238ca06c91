#include "qlo/baumslag.hpp"

#include <algorithm>
#include <sstream>

#include "qlo/order.hpp"

namespace qlo {

  std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
  }

  namespace {
    std::int64_t floor_div(std::int64_t a, std::int64_t m) {
      return (a - floor_mod(a, m)) / m;
    }
  }  // namespace

  bool ChainDemoReport::passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](ChainCheck const& c) { return c.passed; });
  }

  BaumslagSolitar::BaumslagSolitar(BsParams p) : p_(p) {
    if (p_.c < 1 || p_.d == 0) {
      throw Error("Baumslag-Solitar parameters need c >= 1 and d != 0");
    }
  }

  std::string BaumslagSolitar::name() const {
    return "bs:" + std::to_string(p_.c) + "," + std::to_string(p_.d);
  }

  // Britton reduction with a stack of emitted syllables; the b-exponent
  // pending to the right of the stack is r.
  BsWord BaumslagSolitar::canon(std::span<BsToken const> toks) const {
    std::int64_t const c  = p_.c;
    std::int64_t const d  = p_.d;
    std::int64_t const ad = d < 0 ? -d : d;
    BsWord             out;
    out.exps.clear();
    std::int64_t r = 0;
    for (auto const& tok : toks) {
      if (!tok.is_a) {
        r += tok.value;
        continue;
      }
      if (tok.value == 1) {
        if (!out.signs.empty() && out.signs.back() == -1 && r % d == 0) {
          // a^-1 b^{jd} a = b^{jc}
          r = out.exps.back() + (r / d) * c;
          out.exps.pop_back();
          out.signs.pop_back();
        } else {
          // b^{qd} a = a b^{qc}
          std::int64_t s = floor_mod(r, ad);
          out.exps.push_back(s);
          out.signs.push_back(1);
          r = floor_div(r, ad) * (d < 0 ? -1 : 1) * c;
        }
      } else if (tok.value == -1) {
        if (!out.signs.empty() && out.signs.back() == 1 && r % c == 0) {
          // a b^{jc} a^-1 = b^{jd}
          r = out.exps.back() + (r / c) * d;
          out.exps.pop_back();
          out.signs.pop_back();
        } else {
          // b^{qc} a^-1 = a^-1 b^{qd}
          std::int64_t s = floor_mod(r, c);
          out.exps.push_back(s);
          out.signs.push_back(-1);
          r = floor_div(r, c) * d;
        }
      } else {
        throw Error("a-token exponent must be +-1");
      }
    }
    out.exps.push_back(r);
    return out;
  }

  BsWord BaumslagSolitar::canon_letters(std::string_view word) const {
    std::vector<BsToken> toks;
    for (auto const& [name, k] : tokenize_word(word)) {
      if (name == "b") {
        toks.push_back({false, k});
      } else if (name == "a") {
        for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) {
          toks.push_back({true, k < 0 ? -1 : 1});
        }
      } else if (name != "e") {
        throw ParseError("unknown generator '" + name + "'");
      }
    }
    return canon(toks);
  }

  std::vector<BsToken> BaumslagSolitar::tokens(BsWord const& x) const {
    std::vector<BsToken> out;
    for (std::size_t i = 0; i < x.signs.size(); ++i) {
      out.push_back({false, x.exps[i]});
      out.push_back({true, x.signs[i]});
    }
    out.push_back({false, x.exps.back()});
    return out;
  }

  BsWord BaumslagSolitar::mul(BsWord const& x, BsWord const& y) const {
    auto toks = tokens(x);
    auto ty   = tokens(y);
    toks.insert(toks.end(), ty.begin(), ty.end());
    return canon(toks);
  }

  BsWord BaumslagSolitar::inv(BsWord const& x) const {
    auto                 tx = tokens(x);
    std::vector<BsToken> toks;
    for (auto it = tx.rbegin(); it != tx.rend(); ++it) {
      toks.push_back({it->is_a, -it->value});
    }
    return canon(toks);
  }

  std::int64_t BaumslagSolitar::height(BsWord const& x) const {
    std::int64_t h = 0;
    for (auto s : x.signs) {
      h += s;
    }
    return h;
  }

  bool BaumslagSolitar::is_positive(BsWord const& x) const {
    if (std::any_of(x.signs.begin(), x.signs.end(), [](int s) { return s < 0; })) {
      return false;
    }
    if (p_.d > 0 || x.signs.empty()) {
      return x.exps.back() >= 0;
    }
    return true;
  }

  bool BaumslagSolitar::leq(BsWord const& x, BsWord const& y) const {
    return is_positive(mul(inv(x), y));
  }

  std::optional<std::vector<std::int64_t>> BaumslagSolitar::witness_runs(
      BsWord const& x) const {
    if (!is_positive(x)) {
      return std::nullopt;
    }
    std::vector<std::int64_t> runs = x.exps;
    if (runs.back() < 0) {
      // Negative d, height >= 1: b^{nd} a = a b^{-nc}.
      std::int64_t const ad = -p_.d;
      std::int64_t const n  = (-runs.back() + p_.c - 1) / p_.c;
      runs[runs.size() - 2] += n * ad;
      runs.back() += n * p_.c;
    }
    return runs;
  }

  BasicJoin<BsWord> BaumslagSolitar::join(BsWord const& x, BsWord const& y) const {
    if (!is_positive(x) || !is_positive(y)) {
      throw Error("bs join requires positive elements");
    }
    if (p_.d < 0) {
      if (leq(x, y)) {
        return BasicJoin<BsWord>::finite(y);
      }
      if (leq(y, x)) {
        return BasicJoin<BsWord>::finite(x);
      }
      return BasicJoin<BsWord>::infinite();
    }
    // Least y b^t above x: x^-1 y b^t is positive iff x^-1 y has no a^-1
    // and its final exponent plus t is nonnegative.
    auto above = [this](BsWord const& lo, BsWord const& hi) -> std::optional<BsWord> {
      BsWord v = mul(inv(lo), hi);
      if (std::any_of(v.signs.begin(), v.signs.end(), [](int s) { return s < 0; })) {
        return std::nullopt;
      }
      std::int64_t t = std::max<std::int64_t>(0, -v.exps.back());
      BsWord       bt;
      bt.exps = {t};
      return mul(hi, bt);
    };
    auto hx = height(x);
    auto hy = height(y);
    std::optional<BsWord> best;
    if (hx <= hy) {
      best = above(x, y);
    }
    if (hy <= hx) {
      auto other = above(y, x);
      if (other && (!best || leq(*other, *best))) {
        best = other;
      }
    }
    if (!best) {
      return BasicJoin<BsWord>::infinite();
    }
    return BasicJoin<BsWord>::finite(*best);
  }

  Element BaumslagSolitar::encode(BsWord const& w) const {
    std::vector<Element::value_type> code;
    code.reserve(2 * w.exps.size());
    for (std::size_t i = 0; i < w.signs.size(); ++i) {
      code.push_back(w.exps[i]);
      code.push_back(w.signs[i]);
    }
    code.push_back(w.exps.back());
    return Element(std::move(code));
  }

  BsWord BaumslagSolitar::decode(Element const& x) const {
    auto   c = x.code();
    BsWord w;
    w.exps.clear();
    if (c.empty() || c.size() % 2 == 0) {
      throw Error("malformed Baumslag-Solitar encoding");
    }
    for (std::size_t i = 0; i + 1 < c.size(); i += 2) {
      w.exps.push_back(c[i]);
      w.signs.push_back(static_cast<int>(c[i + 1]));
    }
    w.exps.push_back(c.back());
    return w;
  }

  Element BaumslagSolitar::identity() const {
    return encode(BsWord{});
  }

  Element BaumslagSolitar::mul(Element const& x, Element const& y) const {
    return encode(mul(decode(x), decode(y)));
  }

  Element BaumslagSolitar::inv(Element const& x) const {
    return encode(inv(decode(x)));
  }

  bool BaumslagSolitar::is_positive(Element const& x) const {
    return is_positive(decode(x));
  }

  bool BaumslagSolitar::leq(Element const& x, Element const& y) const {
    return leq(decode(x), decode(y));
  }

  JoinResult BaumslagSolitar::join(Element const& x, Element const& y) const {
    return join(decode(x), decode(y)).map([this](BsWord const& w) {
      return encode(w);
    });
  }

  std::string BaumslagSolitar::to_string(BsWord const& x) const {
    std::ostringstream os;
    bool               first = true;
    auto               emit  = [&](std::string const& s) {
      if (!first) {
        os << ' ';
      }
      first = false;
      os << s;
    };
    for (std::size_t i = 0; i < x.signs.size(); ++i) {
      if (x.exps[i] != 0) {
        emit(power_string("b", x.exps[i]));
      }
      emit(x.signs[i] > 0 ? "a" : "a^-1");
    }
    if (x.exps.back() != 0) {
      emit(power_string("b", x.exps.back()));
    }
    return first ? "e" : os.str();
  }

  std::string BaumslagSolitar::to_string(Element const& x) const {
    return to_string(decode(x));
  }

  Element BaumslagSolitar::parse(std::string_view text) const {
    return encode(canon_letters(text));
  }

  Element BaumslagSolitar::generator(std::size_t i) const {
    if (i > 1) {
      throw Error("generator index out of range");
    }
    std::vector<BsToken> t{{i == 0, 1}};
    return encode(canon(t));
  }

  std::vector<Element> BaumslagSolitar::letters() const {
    return {generator(0), generator(1)};
  }

  std::optional<std::vector<std::size_t>> BaumslagSolitar::positive_witness(
      Element const& x) const {
    auto runs = witness_runs(decode(x));
    if (!runs) {
      return std::nullopt;
    }
    std::vector<std::size_t> word;
    for (std::size_t i = 0; i < runs->size(); ++i) {
      word.insert(word.end(), static_cast<std::size_t>((*runs)[i]), 1);
      if (i + 1 < runs->size()) {
        word.push_back(0);
      }
    }
    return word;
  }

  ChainDemoReport BaumslagSolitar::chain_demo(std::size_t n_max,
                                              std::size_t radius) const {
    if (p_.d >= 0) {
      throw Error("chain demo needs a negative d");
    }
    std::int64_t const ad = -p_.d;
    std::vector<BsToken> ht{{true, 1}, {false, -ad}, {true, -1}};
    BsWord const         h = canon(ht);
    auto chain             = [&](std::size_t n) {
      std::vector<BsToken> t{{false, static_cast<std::int64_t>(n) * ad}, {true, 1}};
      return canon(t);
    };

    ChainDemoReport rep;
    rep.h = to_string(h);

    ChainCheck dom{"h below every chain term", true, {}};
    for (std::size_t n = 0; n <= n_max; ++n) {
      // h^-1 b^{nd} a should equal the positive word b^{nd} a b^d.
      std::vector<BsToken> wt{
          {false, static_cast<std::int64_t>(n) * ad}, {true, 1}, {false, ad}};
      BsWord const expect = canon(wt);
      BsWord const quot   = mul(inv(h), chain(n));
      if (!(quot == expect) || !is_positive(quot)) {
        dom.passed = false;
        dom.detail.push_back("n=" + std::to_string(n) + ": h^-1 b^{nd} a = "
                             + to_string(quot));
      }
    }

    ChainCheck dec{"chain strictly decreasing", true, {}};
    for (std::size_t n = 0; n < n_max; ++n) {
      bool down = leq(chain(n + 1), chain(n));
      bool up   = leq(chain(n), chain(n + 1));
      if (!down || up) {
        dec.passed = false;
        dec.detail.push_back("n=" + std::to_string(n));
      }
    }

    ChainCheck low{"no ball element between h and the chain", true, {}};
    Ball const ball = enumerate_ball(*this, radius);
    for (auto const& xe : ball.elements()) {
      BsWord x = decode(xe);
      if (!leq(h, x)) {
        continue;
      }
      bool below_all = true;
      for (std::size_t n = 0; n <= n_max && below_all; ++n) {
        below_all = leq(x, chain(n));
      }
      if (below_all) {
        low.passed = false;
        low.detail.push_back(to_string(x));
      }
    }
    rep.checks = {dom, dec, low};
    return rep;
  }

}  // namespace qlo
