#include "qlo/hnn.hpp"

#include <algorithm>

namespace qlo {

  std::vector<FWord> omega(FWord const& u) {
    if (u.empty() || !fplus_is_positive(u)) {
      throw Error("omega needs a nonempty positive word");
    }
    std::vector<FWord> out{FWord(u.rank())};
    for (std::size_t k = 1; k <= u.size(); ++k) {
      out.push_back(u.suffix(k));
    }
    return out;
  }

  std::pair<FWord, std::int64_t> coset_rep(FWord const& u, FWord const& h) {
    if (u.empty()) {
      throw Error("coset_rep needs a nonempty u");
    }
    FWord const  ui = inv(u);
    FWord        h0 = h;
    std::int64_t m  = 0;
    for (bool changed = true; changed;) {
      changed = false;
      if (is_suffix(u, h0)) {
        h0 = h0.drop_suffix(u.size());
        ++m;
        changed = true;
      } else if (is_suffix(ui, h0)) {
        h0 = h0.drop_suffix(u.size());
        --m;
        changed = true;
      }
    }
    // h0 u^-1 cancels: h0 shares a nontrivial proper suffix with u.
    if (!h0.empty() && h0.back() == u.back()) {
      return {h0, m};
    }
    // h0 u reduced as well: h0 is in the e-class.
    if (h0.empty() || h0.back() != u.front().inverse()) {
      return {h0, m};
    }
    // h0 = h1 beta^-1 with beta the largest proper prefix of u whose inverse
    // ends h0; then h0 A = h1 (beta^-1 u) A.
    for (std::size_t len = u.size() - 1; len >= 1; --len) {
      FWord beta = u.prefix(len);
      if (is_suffix(inv(beta), h0)) {
        FWord h1    = h0.drop_suffix(len);
        FWord alpha = u.drop_prefix(len);
        return {mul(h1, alpha), m - 1};
      }
    }
    throw Error("coset_rep: unreachable case");
  }

  std::optional<std::pair<std::int64_t, std::int64_t>> double_coset_witness(
      FWord const& u, FWord const& w, FWord const& h, std::int64_t extra) {
    auto const len = static_cast<std::int64_t>(h.size());
    auto const lu  = static_cast<std::int64_t>(u.size());
    auto const lw  = static_cast<std::int64_t>(w.size());
    std::int64_t const M = (len + lw - 1) / lw + 1 + extra;
    std::int64_t const N = (len + lu - 1) / lu + 1 + extra;
    for (std::int64_t m = -M; m <= M; ++m) {
      FWord left = mul(pow(w, m), h);
      for (std::int64_t n = -N; n <= N; ++n) {
        if (fplus_is_positive(mul(left, pow(u, n)))) {
          return std::make_pair(m, n);
        }
      }
    }
    return std::nullopt;
  }

  bool double_coset_positive(FWord const& u, FWord const& w, FWord const& h) {
    return double_coset_witness(u, w, h).has_value();
  }

  HnnExtension::HnnExtension(HnnParams p) : p_(std::move(p)) {
    auto const r = p_.names.size();
    if (r == 0 || p_.u.rank() != r || p_.w.rank() != r) {
      throw Error("hnn: u and w must be words over the declared alphabet");
    }
    if (p_.u.empty() || p_.w.empty() || !fplus_is_positive(p_.u)
        || !fplus_is_positive(p_.w)) {
      throw Error("hnn: u and w must be nonempty positive words");
    }
    if (std::find(p_.names.begin(), p_.names.end(), "t") != p_.names.end()) {
      throw Error("hnn: the name t is reserved for the stable letter");
    }
  }

  std::string HnnExtension::name() const {
    std::string s = p_.mode == HnnMode::plus ? "hnn+:" : "hnn-:";
    auto        flat = [&](FWord const& x) {
      std::string r;
      for (auto l : x.letters()) {
        r += p_.names[l.gen];
      }
      return r;
    };
    s += flat(p_.u) + "," + flat(p_.w) + "@";
    for (auto const& n : p_.names) {
      s += n;
    }
    return s;
  }

  FWord HnnExtension::phi_u_power(std::int64_t m) const {
    return pow(p_.w, p_.mode == HnnMode::plus ? m : -m);
  }

  FWord HnnExtension::phi_inv_w_power(std::int64_t m) const {
    return pow(p_.u, p_.mode == HnnMode::plus ? m : -m);
  }

  HnnNormal HnnExtension::normal_form(std::vector<HnnToken> const& toks) const {
    HnnNormal out;
    FWord     g(rank());
    for (auto const& tok : toks) {
      if (!tok.is_t) {
        g = qlo::mul(g, tok.word);
        continue;
      }
      if (tok.sign == 1) {
        auto [rep, m] = coset_rep(p_.u, g);
        if (!out.eps.empty() && out.eps.back() == -1 && rep.empty()) {
          // t^-1 u^m t = phi(u^m)
          g = qlo::mul(out.parts.back(), phi_u_power(m));
          out.parts.pop_back();
          out.eps.pop_back();
        } else {
          out.parts.push_back(rep);
          out.eps.push_back(1);
          g = phi_u_power(m);
        }
      } else {
        auto [rep, m] = coset_rep(p_.w, g);
        if (!out.eps.empty() && out.eps.back() == 1 && rep.empty()) {
          // t w^m t^-1 = phi^-1(w^m)
          g = qlo::mul(out.parts.back(), phi_inv_w_power(m));
          out.parts.pop_back();
          out.eps.pop_back();
        } else {
          out.parts.push_back(rep);
          out.eps.push_back(-1);
          g = phi_inv_w_power(m);
        }
      }
    }
    out.parts.push_back(g);
    return out;
  }

  namespace {
    void append_tokens(HnnNormal const& x, std::vector<HnnToken>& toks) {
      for (std::size_t i = 0; i < x.eps.size(); ++i) {
        toks.push_back({false, 1, x.parts[i]});
        toks.push_back({true, x.eps[i], {}});
      }
      toks.push_back({false, 1, x.parts.back()});
    }
  }  // namespace

  HnnNormal HnnExtension::mul(HnnNormal const& x, HnnNormal const& y) const {
    std::vector<HnnToken> toks;
    append_tokens(x, toks);
    append_tokens(y, toks);
    return normal_form(toks);
  }

  HnnNormal HnnExtension::inv(HnnNormal const& x) const {
    std::vector<HnnToken> toks;
    toks.push_back({false, 1, qlo::inv(x.parts.back())});
    for (std::size_t i = x.eps.size(); i-- > 0;) {
      toks.push_back({true, -x.eps[i], {}});
      toks.push_back({false, 1, qlo::inv(x.parts[i])});
    }
    return normal_form(toks);
  }

  HnnNormal HnnExtension::from_word(FWord const& h) const {
    if (h.rank() != rank()) {
      throw Error("hnn: base word over the wrong alphabet");
    }
    return HnnNormal{{h}, {}};
  }

  HnnNormal HnnExtension::stable_letter(int sign) const {
    std::vector<HnnToken> toks{{true, sign, {}}};
    return normal_form(toks);
  }

  std::int64_t HnnExtension::height(HnnNormal const& x) const {
    std::int64_t h = 0;
    for (auto e : x.eps) {
      h += e;
    }
    return h;
  }

  HnnNormal HnnExtension::stem(HnnNormal const& x) const {
    HnnNormal s = x;
    s.parts.back() = FWord(rank());
    return s;
  }

  bool HnnExtension::is_positive(HnnNormal const& x) const {
    if (std::any_of(x.eps.begin(), x.eps.end(), [](int e) { return e < 0; })) {
      return false;
    }
    if (p_.mode == HnnMode::plus) {
      return std::all_of(x.parts.begin(), x.parts.end(), fplus_is_positive);
    }
    if (!fplus_is_positive(x.parts.front())) {
      return false;
    }
    auto const k = x.eps.size();
    if (k == 0) {
      return true;
    }
    for (std::size_t i = 1; i < k; ++i) {
      if (!double_coset_positive(p_.u, p_.w, x.parts[i])) {
        return false;
      }
    }
    // h_k = w^m q with q positive iff w^K h_k is positive for K large enough;
    // a q not starting with w cancels less than |w| letters of w^-m.
    FWord const& hk = x.parts.back();
    auto const   K  = static_cast<std::int64_t>(hk.size() / p_.w.size()) + 1;
    return fplus_is_positive(qlo::mul(pow(p_.w, K), hk));
  }

  bool HnnExtension::leq(HnnNormal const& x, HnnNormal const& y) const {
    return is_positive(mul(inv(x), y));
  }

  std::optional<std::vector<FWord>> HnnExtension::witness_parts(
      HnnNormal const& x) const {
    if (!is_positive(x)) {
      return std::nullopt;
    }
    auto const k = x.eps.size();
    if (p_.mode == HnnMode::plus || k == 0) {
      return x.parts;
    }
    // h_i = w^{a_i} p_i u^{b_i}; the joint u^{b_{i-1}} t w^{a_i} equals
    // t w^{a_i - b_{i-1}}, spelled t w^e or u^-e t.
    std::vector<FWord>        p(k + 1);
    std::vector<std::int64_t> a(k + 1, 0), b(k + 1, 0);
    p[0] = x.parts[0];
    for (std::size_t i = 1; i < k; ++i) {
      auto mn = double_coset_witness(p_.u, p_.w, x.parts[i]);
      if (!mn) {
        return std::nullopt;
      }
      a[i] = -mn->first;
      b[i] = -mn->second;
      p[i] = qlo::mul(qlo::mul(pow(p_.w, mn->first), x.parts[i]),
                      pow(p_.u, mn->second));
    }
    auto K = static_cast<std::int64_t>(x.parts[k].size() / p_.w.size()) + 1;
    while (K > 0 && fplus_is_positive(qlo::mul(pow(p_.w, K - 1), x.parts[k]))) {
      --K;
    }
    a[k] = -K;
    p[k]         = qlo::mul(pow(p_.w, K), x.parts[k]);

    std::vector<FWord> out(p.begin(), p.end());
    for (std::size_t i = 1; i <= k; ++i) {
      std::int64_t e = a[i] - b[i - 1];
      if (e >= 0) {
        out[i] = qlo::mul(pow(p_.w, e), out[i]);
      } else {
        out[i - 1] = qlo::mul(out[i - 1], pow(p_.u, -e));
      }
    }
    return out;
  }

  BasicJoin<HnnNormal> HnnExtension::join(HnnNormal const& x,
                                          HnnNormal const& y) const {
    if (!is_positive(x) || !is_positive(y)) {
      throw Error("hnn join requires positive elements");
    }
    using J = BasicJoin<HnnNormal>;
    if (p_.mode == HnnMode::minus) {
      if (leq(x, y)) {
        return J::finite(y);
      }
      if (leq(y, x)) {
        return J::finite(x);
      }
      return J::infinite();
    }
    auto const hx = height(x);
    auto const hy = height(y);
    if (hx == hy) {
      if (!(stem(x) == stem(y))) {
        return J::infinite();
      }
      auto tail = fplus_join(x.parts.back(), y.parts.back());
      if (!tail.is_finite()) {
        return J::infinite();
      }
      HnnNormal j     = x;
      j.parts.back() = tail.value();
      return J::finite(j);
    }
    HnnNormal const& lo = hx < hy ? x : y;
    HnnNormal const& hi = hx < hy ? y : x;
    // An upper bound stem(hi) r exists iff lo^-1 hi r is positive for some
    // positive r. The stem of lo^-1 hi is untouched by r, and its final
    // part h becomes h r, so h must read alpha beta^-1 and r = beta is least.
    HnnNormal z = mul(inv(lo), hi);
    if (std::any_of(z.eps.begin(), z.eps.end(), [](int e) { return e < 0; })) {
      return J::infinite();
    }
    for (std::size_t i = 0; i + 1 < z.parts.size(); ++i) {
      if (!fplus_is_positive(z.parts[i])) {
        return J::infinite();
      }
    }
    auto const   ls = z.parts.back().letters();
    std::size_t  split = 0;
    while (split < ls.size() && ls[split].is_positive()) {
      ++split;
    }
    for (std::size_t i = split; i < ls.size(); ++i) {
      if (ls[i].is_positive()) {
        return J::infinite();
      }
    }
    FWord beta = qlo::inv(z.parts.back().drop_prefix(split));
    return J::finite(mul(hi, from_word(beta)));
  }

  Element HnnExtension::encode(HnnNormal const& x) const {
    std::vector<Element::value_type> code;
    for (std::size_t i = 0; i < x.parts.size(); ++i) {
      code.push_back(static_cast<Element::value_type>(x.parts[i].size()));
      qlo::encode(x.parts[i], code);
      if (i < x.eps.size()) {
        code.push_back(x.eps[i]);
      }
    }
    return Element(std::move(code));
  }

  HnnNormal HnnExtension::decode(Element const& x) const {
    auto        c = x.code();
    HnnNormal   out;
    std::size_t i = 0;
    while (true) {
      if (i >= c.size()) {
        throw Error("malformed hnn encoding");
      }
      auto len = static_cast<std::size_t>(c[i++]);
      if (i + len > c.size()) {
        throw Error("malformed hnn encoding");
      }
      out.parts.push_back(decode_fword(rank(), c.subspan(i, len)));
      i += len;
      if (i == c.size()) {
        break;
      }
      out.eps.push_back(static_cast<int>(c[i++]));
    }
    return out;
  }

  Element HnnExtension::identity() const {
    return encode(from_word(FWord(rank())));
  }

  Element HnnExtension::mul(Element const& x, Element const& y) const {
    return encode(mul(decode(x), decode(y)));
  }

  Element HnnExtension::inv(Element const& x) const {
    return encode(inv(decode(x)));
  }

  bool HnnExtension::is_positive(Element const& x) const {
    return is_positive(decode(x));
  }

  bool HnnExtension::leq(Element const& x, Element const& y) const {
    return leq(decode(x), decode(y));
  }

  JoinResult HnnExtension::join(Element const& x, Element const& y) const {
    return join(decode(x), decode(y)).map([this](HnnNormal const& j) {
      return encode(j);
    });
  }

  std::string HnnExtension::to_string(HnnNormal const& x) const {
    std::string s;
    auto        emit = [&](std::string const& tok) {
      if (!s.empty()) {
        s += ' ';
      }
      s += tok;
    };
    for (std::size_t i = 0; i < x.parts.size(); ++i) {
      if (!x.parts[i].empty()) {
        emit(qlo::to_string(x.parts[i], p_.names));
      }
      if (i < x.eps.size()) {
        emit(x.eps[i] > 0 ? "t" : "t^-1");
      }
    }
    return s.empty() ? "e" : s;
  }

  std::string HnnExtension::to_string(Element const& x) const {
    return to_string(decode(x));
  }

  std::vector<std::string> HnnExtension::generator_names() const {
    auto n = p_.names;
    n.emplace_back("t");
    return n;
  }

  Element HnnExtension::generator(std::size_t i) const {
    if (i < rank()) {
      return encode(from_word(FWord::generator(rank(), static_cast<Gen>(i))));
    }
    if (i == rank()) {
      return encode(stable_letter());
    }
    throw Error("generator index out of range");
  }

  std::vector<Element> HnnExtension::letters() const {
    std::vector<Element> out;
    for (std::size_t i = 0; i <= rank(); ++i) {
      out.push_back(generator(i));
    }
    return out;
  }

  std::optional<std::vector<std::size_t>> HnnExtension::positive_witness(
      Element const& x) const {
    auto parts = witness_parts(decode(x));
    if (!parts) {
      return std::nullopt;
    }
    std::vector<std::size_t> word;
    for (std::size_t i = 0; i < parts->size(); ++i) {
      for (auto l : (*parts)[i].letters()) {
        if (!l.is_positive()) {
          return std::nullopt;
        }
        word.push_back(l.gen);
      }
      if (i + 1 < parts->size()) {
        word.push_back(rank());
      }
    }
    return word;
  }

}  // namespace qlo
