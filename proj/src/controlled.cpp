#include "qlo/controlled.hpp"

#include <algorithm>
#include <map>
#include <memory>

#include "qlo/baumslag.hpp"
#include "qlo/free_group.hpp"
#include "qlo/graph_product.hpp"
#include "qlo/hnn.hpp"
#include "qlo/semidirect.hpp"

namespace qlo {

  namespace {

    std::shared_ptr<LatticePresentation> z_target(std::vector<std::string> names) {
      return std::make_shared<LatticePresentation>(std::move(names));
    }

    std::int64_t scalar(Element const& q) {
      return q.code()[0];
    }

    // All positive words of length n over `rank` letters.
    std::vector<FWord> positive_words(std::size_t rank, std::size_t n) {
      std::vector<std::vector<Gen>> words{{}};
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::vector<Gen>> next;
        for (auto const& w : words) {
          for (Gen g = 0; g < rank; ++g) {
            next.push_back(w);
            next.back().push_back(g);
          }
        }
        words = std::move(next);
      }
      std::vector<FWord> out;
      for (auto const& w : words) {
        out.push_back(FWord::from_positive(rank, w));
      }
      return out;
    }

    std::vector<FWord> positive_words_upto(std::size_t rank, std::size_t n) {
      std::vector<FWord> out;
      for (std::size_t k = 0; k <= n; ++k) {
        auto w = positive_words(rank, k);
        out.insert(out.end(), w.begin(), w.end());
      }
      return out;
    }

    // Every vector in [0, base)^len.
    std::vector<std::vector<std::int64_t>> digit_vectors(std::int64_t base,
                                                         std::size_t  len) {
      std::vector<std::vector<std::int64_t>> out{{}};
      for (std::size_t i = 0; i < len; ++i) {
        std::vector<std::vector<std::int64_t>> next;
        for (auto const& v : out) {
          for (std::int64_t s = 0; s < base; ++s) {
            next.push_back(v);
            next.back().push_back(s);
          }
        }
        out = std::move(next);
      }
      return out;
    }

    std::string label_of(std::vector<std::int64_t> const& v) {
      std::string s = "(";
      for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
      }
      return s + ")";
    }

    std::map<Element, std::vector<std::size_t>> fibres(Morphism const& mu,
                                                       Ball const&     ball) {
      std::map<Element, std::vector<std::size_t>> out;
      for (std::size_t i = 0; i < ball.size(); ++i) {
        out[mu(ball[i])].push_back(i);
      }
      return out;
    }

    std::optional<ControlledPreset> free_preset(PresentationPtr src,
                                                std::size_t) {
      auto const* f = dynamic_cast<FreePresentation const*>(src.get());
      auto        Z = z_target({"n"});
      Morphism mu{"length", src, Z, [f, Z](Element const& x) {
                    std::int64_t n = 0;
                    FWord const  w = f->decode(x);
                    for (auto l : w.letters()) {
                      n += l.sign;
                    }
                    return Z->make({n});
                  }};
      SigmaWitness sigma;
      if (src->family() == Family::scarparo) {
        sigma = {"b-words of length q", [f](Element const& q) {
                   std::vector<Element> out;
                   auto                 n = scalar(q);
                   if (n == 0) {
                     out.push_back(f->identity());
                   } else if (n > 0) {
                     FWord b = FWord::generator(2, 1);
                     for (auto const& w : positive_words(2, static_cast<std::size_t>(n - 1))) {
                       out.push_back(f->encode(mul(b, w)));
                     }
                   }
                   return out;
                 }};
      } else {
        sigma = {"positive words of length q", [f](Element const& q) {
                   std::vector<Element> out;
                   if (scalar(q) >= 0) {
                     for (auto const& w :
                          positive_words(f->rank(), static_cast<std::size_t>(scalar(q)))) {
                       out.push_back(f->encode(w));
                     }
                   }
                   return out;
                 }};
      }
      return ControlledPreset{mu, sigma, constant_chains(sigma)};
    }

    std::optional<ControlledPreset> bs_preset(PresentationPtr src, std::size_t) {
      auto const* bs = dynamic_cast<BaumslagSolitar const*>(src.get());
      auto        Z  = z_target({"a"});
      Morphism mu{"height", src, Z,
                  [bs, Z](Element const& x) { return Z->make({bs->height(bs->decode(x))}); }};
      auto const d = bs->params().d;
      // b^{s_0} a ... b^{s_{q-1}} a b^{tail}
      auto stem = [bs](std::vector<std::int64_t> const& s, std::int64_t tail) {
        std::vector<BsToken> toks;
        for (auto si : s) {
          toks.push_back({false, si});
          toks.push_back({true, 1});
        }
        toks.push_back({false, tail});
        return bs->encode(bs->canon(toks));
      };
      if (d > 0) {
        SigmaWitness sigma{"stems b^s0 a ... b^s(q-1) a", [stem, d](Element const& q) {
                             std::vector<Element> out;
                             if (scalar(q) >= 0) {
                               for (auto const& s : digit_vectors(d, static_cast<std::size_t>(scalar(q)))) {
                                 out.push_back(stem(s, 0));
                               }
                             }
                             return out;
                           }};
        return ControlledPreset{mu, sigma, constant_chains(sigma)};
      }
      LambdaWitness lambda{
          "b^s0 a ... b^s(q-1) a b^-n", [stem, bs, d](Element const& q, std::size_t depth) {
            std::vector<Chain> out;
            if (scalar(q) < 0) {
              return out;
            }
            if (scalar(q) == 0) {
              out.push_back({"()", std::vector<Element>(depth + 1, bs->identity())});
              return out;
            }
            for (auto const& s : digit_vectors(-d, static_cast<std::size_t>(scalar(q)))) {
              Chain ch{label_of(s), {}};
              for (std::size_t n = 0; n <= depth; ++n) {
                ch.terms.push_back(stem(s, -static_cast<std::int64_t>(n)));
              }
              out.push_back(std::move(ch));
            }
            return out;
          }};
      return ControlledPreset{mu, std::nullopt, lambda};
    }

    std::optional<ControlledPreset> hnn_preset(PresentationPtr src,
                                               std::size_t     radius) {
      auto const* h = dynamic_cast<HnnExtension const*>(src.get());
      auto        Z = z_target({"t"});
      Morphism mu{"theta", src, Z,
                  [h, Z](Element const& x) { return Z->make({h->height(h->decode(x))}); }};
      auto const& p = h->params();
      if (p.mode == HnnMode::plus) {
        // Positive transversal words: not ending in u.
        std::vector<FWord> reps;
        for (auto const& w : positive_words_upto(h->rank(), radius)) {
          if (!is_suffix(p.u, w)) {
            reps.push_back(w);
          }
        }
        SigmaWitness sigma{
            "stems h0 t ... h(q-1) t", [h, reps, radius](Element const& q) {
              std::vector<Element> out;
              if (scalar(q) < 0 || static_cast<std::size_t>(scalar(q)) > radius) {
                return out;
              }
              auto const k      = static_cast<std::size_t>(scalar(q));
              auto const budget = radius - k;
              std::vector<HnnToken> toks;
              std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                                      std::size_t used) {
                if (i == k) {
                  out.push_back(h->encode(h->normal_form(toks)));
                  return;
                }
                for (auto const& r : reps) {
                  if (used + r.size() > budget) {
                    continue;
                  }
                  toks.push_back({false, 1, r});
                  toks.push_back({true, 1, {}});
                  rec(i + 1, used + r.size());
                  toks.pop_back();
                  toks.pop_back();
                }
              };
              rec(0, 0);
              return out;
            }};
        return ControlledPreset{mu, sigma, constant_chains(sigma)};
      }
      // Classes are indexed by the stems met in the ball.
      auto ball  = std::make_shared<Ball>(enumerate_ball(*h, radius));
      auto stems = std::make_shared<std::map<std::int64_t, std::vector<HnnNormal>>>();
      for (auto const& x : ball->elements()) {
        auto nf = h->decode(x);
        auto s  = h->stem(nf);
        auto& v = (*stems)[h->height(nf)];
        if (std::find(v.begin(), v.end(), s) == v.end()) {
          v.push_back(s);
        }
      }
      LambdaWitness lambda{
          "h0 t ... h(q-1) t w^-n", [h, stems, ball](Element const& q, std::size_t depth) {
            std::vector<Chain> out;
            if (scalar(q) == 0) {
              out.push_back({"e", std::vector<Element>(depth + 1, h->identity())});
              return out;
            }
            auto it = stems->find(scalar(q));
            if (it == stems->end()) {
              return out;
            }
            for (auto const& s : it->second) {
              Chain ch{h->to_string(s), {}};
              for (std::size_t n = 0; n <= depth; ++n) {
                auto wn = h->from_word(pow(h->params().w, -static_cast<std::int64_t>(n)));
                ch.terms.push_back(h->encode(h->mul(s, wn)));
              }
              out.push_back(std::move(ch));
            }
            return out;
          }};
      return ControlledPreset{mu, std::nullopt, lambda};
    }

    std::optional<ControlledPreset> graph_preset(PresentationPtr src,
                                                 std::size_t     radius) {
      auto const* gp  = dynamic_cast<GraphProduct const*>(src.get());
      auto        sum = std::make_shared<GraphProduct>(direct_sum_of(*gp));
      Morphism mu{"phi", src, sum, [gp, sum](Element const& x) {
                    return sum->encode(gp->phi(gp->decode(x), *sum));
                  }};
      // A fibre element has the word length of its image, so the ball of the
      // check radius holds every fibre it meets.
      auto ball  = std::make_shared<Ball>(enumerate_ball(*gp, radius));
      auto table = std::make_shared<OrderTable>(*gp, *ball);
      auto fib   = std::make_shared<std::map<Element, std::vector<std::size_t>>>(
          fibres(mu, *ball));
      SigmaWitness sigma{"minimal elements of the fibre", [ball, table, fib](Element const& q) {
                           std::vector<Element> out;
                           auto                 it = fib->find(q);
                           if (it != fib->end()) {
                             for (auto i : table->minimal(it->second)) {
                               out.push_back((*ball)[i]);
                             }
                           }
                           return out;
                         }};
      return ControlledPreset{mu, sigma, constant_chains(sigma)};
    }

    std::optional<ControlledPreset> sd_preset(PresentationPtr src,
                                              std::size_t     radius) {
      auto const* sd = dynamic_cast<Semidirect const*>(src.get());
      if (sd->params().rule == SdJoinRule::phi_ab) {
        auto Z2 = z_target({"a", "t"});
        Morphism mu{"(a-count, height)", src, Z2, [sd, Z2](Element const& x) {
                      auto s = sd->decode(x);
                      return Z2->make({exponent_sum(s.n, 0), s.h});
                    }};
        // (p, n) with p positive, m letters a, not ending in b. A member below
        // (p', n) has |p| <= |p'|, so the longest F-part in the ball bounds p.
        std::size_t longest = 0;
        Ball const  ball    = enumerate_ball(*sd, radius);
        for (auto const& x : ball.elements()) {
          longest = std::max(longest, sd->decode(x).n.size());
        }
        SigmaWitness sigma{"(p, n) with b not a suffix of p", [sd, longest](Element const& q) {
                             std::vector<Element> out;
                             auto const m = q.code()[0];
                             auto const n = q.code()[1];
                             if (m < 0 || n < 0) {
                               return out;
                             }
                             for (auto const& p : positive_words_upto(2, longest)) {
                               if (exponent_sum(p, 0) == m
                                   && (p.empty() || p.back().gen == 0)) {
                                 out.push_back(sd->encode(SdElement{p, n}));
                               }
                             }
                             return out;
                           }};
        return ControlledPreset{mu, sigma, constant_chains(sigma)};
      }
      auto Z = z_target({"t"});
      Morphism mu{"projection", src, Z,
                  [sd, Z](Element const& x) { return Z->make({sd->decode(x).h}); }};
      if (sd->params().rule != SdJoinRule::levelwise) {
        return ControlledPreset{mu, std::nullopt, std::nullopt};
      }
      SigmaWitness sigma{"{(e, q)}", [sd](Element const& q) {
                           std::vector<Element> out;
                           if (scalar(q) >= 0) {
                             out.push_back(sd->encode(SdElement{FWord(sd->rank()), scalar(q)}));
                           }
                           return out;
                         }};
      return ControlledPreset{mu, sigma, constant_chains(sigma)};
    }

  }  // namespace

  std::optional<ControlledPreset> controlled_preset(PresentationPtr source,
                                                   std::size_t     radius) {
    switch (source->family()) {
      case Family::free:
      case Family::scarparo:
        return free_preset(source, radius);
      case Family::bs:
        return bs_preset(source, radius);
      case Family::hnn:
        return hnn_preset(source, radius);
      case Family::graphprod:
        return graph_preset(source, radius);
      case Family::semidirect:
        return sd_preset(source, radius);
      default:
        return std::nullopt;
    }
  }

  SigmaWitness bs_empty_sigma(PresentationPtr source) {
    return {"Sigma_0 = {e}, otherwise empty", [source](Element const& q) {
              std::vector<Element> out;
              if (scalar(q) == 0) {
                out.push_back(source->identity());
              }
              return out;
            }};
  }

  LambdaWitness constant_chains(SigmaWitness const& sigma) {
    return {"constant chains through " + sigma.name,
            [sigma](Element const& q, std::size_t depth) {
              std::vector<Chain> out;
              for (auto const& s : sigma.sigma(q)) {
                out.push_back({"", std::vector<Element>(depth + 1, s)});
              }
              return out;
            }};
  }

  std::vector<Finding> check_homomorphism(Morphism const& mu, Ball const& ball) {
    std::vector<Finding> out;
    auto const&          G = *mu.source;
    auto const&          K = *mu.target;
    for (auto const& x : ball.elements()) {
      for (auto const& y : ball.elements()) {
        Element xy = G.mul(G.inv(x), y);
        if (mu(xy) != K.mul(K.inv(mu(x)), mu(y))) {
          out.push_back({"homomorphism", {G.to_string(x), G.to_string(y)},
                         "mu(x^-1 y) != mu(x)^-1 mu(y)"});
        }
      }
    }
    return out;
  }

  std::vector<Finding> check_order_preserving(Morphism const& mu,
                                              Ball const&     ball) {
    std::vector<Finding> out;
    auto const&          G = *mu.source;
    OrderTable           t(G, ball);
    std::vector<Element> img;
    for (auto const& x : ball.elements()) {
      img.push_back(mu(x));
      if (!mu.target->is_positive(img.back())) {
        out.push_back({"image outside the cone", {G.to_string(x)}, ""});
      }
    }
    for (std::size_t i = 0; i < ball.size(); ++i) {
      for (std::size_t j = 0; j < ball.size(); ++j) {
        if (t.leq(i, j) && !mu.target->leq(img[i], img[j])) {
          out.push_back({"order", {G.to_string(ball[i]), G.to_string(ball[j])},
                         "x <= y but mu(x) > mu(y)"});
        }
      }
    }
    return out;
  }

  std::vector<Finding> check_join_preserving(Morphism const& mu,
                                             Ball const&     ball) {
    std::vector<Finding> out;
    auto const&          G = *mu.source;
    for (std::size_t i = 0; i < ball.size(); ++i) {
      for (std::size_t j = i + 1; j < ball.size(); ++j) {
        auto J = G.join(ball[i], ball[j]);
        if (J.is_inconclusive()) {
          out.push_back({"join undecided", {G.to_string(ball[i]), G.to_string(ball[j])},
                         "", true});
          continue;
        }
        if (!J.is_finite()) {
          continue;
        }
        auto Q = mu.target->join(mu(ball[i]), mu(ball[j]));
        if (!Q.is_finite() || Q.value() != mu(J.value())) {
          out.push_back({"join", {G.to_string(ball[i]), G.to_string(ball[j])},
                         "mu(x v y) = " + mu.target->to_string(mu(J.value()))});
        }
      }
    }
    return out;
  }

  std::vector<Finding> check_sigma_axioms(Morphism const&     mu,
                                          SigmaWitness const& sigma,
                                          Ball const&         ball) {
    std::vector<Finding> out;
    auto const&          G = *mu.source;
    auto const&          K = *mu.target;
    for (auto const& [q, members] : fibres(mu, ball)) {
      auto const S  = sigma.sigma(q);
      auto const qs = "q = " + K.to_string(q);
      for (auto const& s : S) {
        if (!G.is_positive(s) || mu(s) != q) {
          out.push_back({"sigma member", {G.to_string(s)}, qs});
        }
      }
      for (auto i : members) {
        bool dominated = std::any_of(S.begin(), S.end(), [&](Element const& s) {
          return G.leq(s, ball[i]);
        });
        if (!dominated) {
          out.push_back({"axiom (i)", {G.to_string(ball[i])},
                         qs + ": above no member of Sigma_q"});
        }
      }
      for (std::size_t a = 0; a < S.size(); ++a) {
        for (std::size_t b = a + 1; b < S.size(); ++b) {
          auto J = G.join(S[a], S[b]);
          if (J.is_finite()) {
            out.push_back({"axiom (ii)", {G.to_string(S[a]), G.to_string(S[b])},
                           qs + ": distinct members with a finite join"});
          } else if (J.is_inconclusive()) {
            out.push_back({"axiom (ii) undecided", {G.to_string(S[a]), G.to_string(S[b])},
                           qs, true});
          }
        }
      }
    }
    return out;
  }

  CoverReport check_decreasing_cover(Morphism const&      mu,
                                     LambdaWitness const& lambda,
                                     Ball const& ball, std::size_t depth) {
    CoverReport out;
    auto const& G = *mu.source;
    auto const& K = *mu.target;
    for (auto const& [q, members] : fibres(mu, ball)) {
      auto const chains = lambda.chains(q, depth);
      auto const qs     = "q = " + K.to_string(q);
      auto       label  = [&](std::size_t c) {
        return chains[c].label.empty() ? G.to_string(chains[c].terms.front())
                                       : chains[c].label;
      };
      for (std::size_t c = 0; c < chains.size(); ++c) {
        auto const& s = chains[c].terms;
        for (std::size_t n = 0; n < s.size(); ++n) {
          if (!G.is_positive(s[n]) || mu(s[n]) != q) {
            out.findings.push_back({"chain term", {G.to_string(s[n])},
                                    qs + ", lambda " + label(c) + ", n = " + std::to_string(n)});
          }
          if (n + 1 < s.size() && !G.leq(s[n + 1], s[n])) {
            out.findings.push_back({"chain not decreasing", {G.to_string(s[n + 1]), G.to_string(s[n])},
                                    qs + ", lambda " + label(c)});
          }
        }
      }
      std::vector<std::optional<std::size_t>> cls(ball.size());
      std::vector<bool>                       seen(chains.size(), false);
      for (auto i : members) {
        std::vector<std::size_t> hits;
        for (std::size_t c = 0; c < chains.size(); ++c) {
          auto const& s = chains[c].terms;
          if (std::any_of(s.begin(), s.end(),
                          [&](Element const& t) { return G.leq(t, ball[i]); })) {
            hits.push_back(c);
          }
        }
        if (hits.empty()) {
          out.findings.push_back({"uncovered", {G.to_string(ball[i])},
                                  qs + ": above no chain term up to n = "
                                      + std::to_string(depth) + " (increase N)"});
        } else if (hits.size() > 1) {
          out.findings.push_back({"covered twice", {G.to_string(ball[i])},
                                  qs + ": classes " + label(hits[0]) + " and " + label(hits[1])});
        } else {
          cls[i]           = hits[0];
          seen[hits[0]]    = true;
        }
      }
      for (std::size_t c = 0; c < chains.size(); ++c) {
        if (seen[c]) {
          out.lambdas_seen.push_back(qs + ": " + label(c));
        }
      }
      for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
          auto i = members[a], j = members[b];
          if (!cls[i] || !cls[j] || *cls[i] == *cls[j]) {
            continue;
          }
          auto J = G.join(ball[i], ball[j]);
          if (J.is_finite()) {
            out.findings.push_back({"separation", {G.to_string(ball[i]), G.to_string(ball[j])},
                                    qs + ": classes " + label(*cls[i]) + " and "
                                        + label(*cls[j]) + " have a common upper bound"});
          } else if (J.is_inconclusive()) {
            out.findings.push_back({"separation undecided", {G.to_string(ball[i]), G.to_string(ball[j])},
                                    qs, true});
          }
        }
      }
    }
    return out;
  }

  std::vector<std::size_t> kernel_cone(Morphism const& mu, Ball const& ball) {
    std::vector<std::size_t> out;
    Element const            e = mu.target->identity();
    for (std::size_t i = 0; i < ball.size(); ++i) {
      if (mu(ball[i]) == e) {
        out.push_back(i);
      }
    }
    return out;
  }

}  // namespace qlo
