#include "qlo/cli.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <sstream>

#include "qlo/baumslag.hpp"
#include "qlo/controlled.hpp"
#include "qlo/error.hpp"
#include "qlo/order.hpp"
#include "qlo/presets.hpp"
#include "qlo/semidirect.hpp"
#include "qlo/toeplitz.hpp"

namespace qlo {

  namespace {

    using json = nlohmann::ordered_json;

    void need_args(CliOptions const& opt, std::size_t n) {
      if (opt.args.size() != n) {
        throw ParseError(opt.verb + " takes " + std::to_string(n) + " element argument"
                         + (n == 1 ? "" : "s"));
      }
    }

    std::string join_value(Presentation const& pres, JoinResult const& j) {
      return j.is_finite() ? pres.to_string(j.value()) : to_string(j.kind());
    }

    Ball probed_ball(Presentation const& pres, std::size_t radius) {
      auto ball   = enumerate_ball(pres, radius);
      auto probes = pres.probe_elements();
      std::vector<Element> extra;
      for (auto const& p : probes) {
        if (!ball.contains(p)
            && std::find(extra.begin(), extra.end(), p) == extra.end()) {
          extra.push_back(p);
        }
      }
      return extra.empty() ? ball : ball.augmented(extra);
    }

    Report verb_nf(Presentation const& pres, CliOptions const& opt, Report r) {
      need_args(opt, 1);
      auto x                = pres.parse(opt.args[0]);
      r.result["canonical"] = pres.to_string(x);
      r.result["positive"]  = pres.is_positive(x);
      return r;
    }

    Report verb_leq(Presentation const& pres, CliOptions const& opt, Report r) {
      need_args(opt, 2);
      auto x          = pres.parse(opt.args[0]);
      auto y          = pres.parse(opt.args[1]);
      r.result["x"]   = pres.to_string(x);
      r.result["y"]   = pres.to_string(y);
      r.result["leq"] = pres.leq(x, y);
      return r;
    }

    Report verb_pos(Presentation const& pres, CliOptions const& opt, Report r) {
      need_args(opt, 1);
      auto x                = pres.parse(opt.args[0]);
      r.result["canonical"] = pres.to_string(x);
      auto w                = pres.positive_witness(x);
      r.result["positive"]  = w.has_value();
      if (w) {
        auto const  letters = pres.letters();
        std::string spelled;
        for (auto i : *w) {
          spelled += (spelled.empty() ? "" : " ") + pres.to_string(letters[i]);
        }
        r.result["witness"] = spelled.empty() ? "e" : spelled;
        if (pres.product(*w) != x) {
          r.findings.push_back({"witness mismatch", {pres.to_string(x), spelled}, ""});
        }
      }
      return r;
    }

    // The structural join, cross-checked against the radius ball.
    Report verb_join(Presentation const& pres, CliOptions const& opt, Report r) {
      need_args(opt, 2);
      auto x = pres.parse(opt.args[0]);
      auto y = pres.parse(opt.args[1]);
      pres.require_positive(x, "join");
      pres.require_positive(y, "join");
      auto const J     = pres.join(x, y);
      r.result["x"]    = pres.to_string(x);
      r.result["y"]    = pres.to_string(y);
      r.result["join"] = join_value(pres, J);
      auto const ball  = enumerate_ball(pres, opt.radius);
      auto const sx = pres.to_string(x), sy = pres.to_string(y);
      if (J.is_finite()) {
        if (ball.contains(J.value()) && !verify_join(pres, x, y, J.value(), ball)) {
          r.findings.push_back({"join not least in ball", {sx, sy, r.result["join"]}, ""});
        }
      } else if (J.is_infinite()) {
        for (auto const& z : ball.elements()) {
          if (pres.leq(x, z) && pres.leq(y, z)) {
            r.findings.push_back({"common upper bound of an infinite join",
                                  {sx, sy, pres.to_string(z)}, ""});
            break;
          }
        }
      } else {
        auto const O       = oracle_join(pres, x, y, ball);
        r.result["oracle"] = join_value(pres, O);
        if (!O.is_finite()) {
          r.findings.push_back({"join undecided", {sx, sy},
                                "no least upper bound within radius "
                                    + std::to_string(opt.radius),
                                true});
        }
      }
      return r;
    }

    Report verb_ball(Presentation const& pres, CliOptions const& opt, Report r) {
      auto const ball = enumerate_ball(pres, opt.radius);
      r.result["size"] = ball.size();
      json elems       = json::array();
      for (auto const& x : ball.elements()) {
        elems.push_back(pres.to_string(x));
      }
      r.result["elements"] = std::move(elems);
      return r;
    }

    Report verb_wql(Presentation const& pres, CliOptions const& opt, Report r) {
      auto const ball       = probed_ball(pres, opt.radius);
      r.result["ball_size"] = ball.size();
      auto const found      = check_weak_ql(pres, ball);
      for (auto const& f : found) {
        Finding g{"no least upper bound",
                  {pres.to_string(f.x), pres.to_string(f.y)},
                  "violation candidate within ball"};
        for (auto const& b : f.upper_bounds) {
          g.elements.push_back(pres.to_string(b));
        }
        r.findings.push_back(std::move(g));
      }
      if (auto const* sd = dynamic_cast<Semidirect const*>(&pres);
          sd && sd->non_join_witness()) {
        auto const& w = *sd->non_join_witness();
        auto const  x = sd->encode(w.x), y = sd->encode(w.y);
        bool        hit = std::any_of(found.begin(), found.end(), [&](WqlFinding const& f) {
          return (f.x == x && f.y == y) || (f.x == y && f.y == x);
        });
        json wj;
        wj["pair"] = {sd->to_string(w.x), sd->to_string(w.y)};
        json bj    = json::array();
        for (auto const& b : w.bounds) {
          bj.push_back(sd->to_string(b));
        }
        wj["upper_bounds"] = std::move(bj);
        wj["reported"]     = hit;
        r.result["known_witness"] = std::move(wj);
      }
      return r;
    }

    Report verb_controlled(PresentationPtr const& pres, CliOptions const& opt,
                           Report r) {
      if (opt.mode != "sigma" && opt.mode != "lambda") {
        throw ParseError("--mode must be sigma or lambda");
      }
      if (opt.witness != "default" && opt.witness != "empty") {
        throw ParseError("--witness must be default or empty");
      }
      auto const ball   = enumerate_ball(*pres, opt.radius);
      auto       preset = controlled_preset(pres, opt.radius);
      if (!preset) {
        throw Error("no controlled map is known for " + pres->name());
      }
      if (opt.witness == "empty") {
        if (pres->family() != Family::bs) {
          throw Error("--witness empty applies to bs presets only");
        }
        preset->sigma  = bs_empty_sigma(pres);
        preset->lambda = std::nullopt;
      }
      auto const& mu        = preset->mu;
      r.result["morphism"]  = mu.name;
      r.result["target"]    = mu.target->name();
      r.result["ball_size"] = ball.size();
      auto add              = [&](std::vector<Finding> fs) {
        r.findings.insert(r.findings.end(), fs.begin(), fs.end());
      };
      add(check_homomorphism(mu, ball));
      add(check_order_preserving(mu, ball));
      add(check_join_preserving(mu, ball));
      if (opt.mode == "sigma") {
        if (!preset->sigma) {
          r.findings.push_back({"no sigma witness", {}, "try --mode lambda", true});
          return r;
        }
        r.result["witness"] = preset->sigma->name;
        add(check_sigma_axioms(mu, *preset->sigma, ball));
        return r;
      }
      std::optional<LambdaWitness> lambda = preset->lambda;
      if (!lambda && preset->sigma) {
        lambda = constant_chains(*preset->sigma);
      }
      if (!lambda) {
        r.findings.push_back({"no chain witness", {}, "", true});
        return r;
      }
      r.result["witness"]     = lambda->name;
      r.result["chain_depth"] = opt.chain_depth;
      auto cover              = check_decreasing_cover(mu, *lambda, ball, opt.chain_depth);
      add(std::move(cover.findings));
      r.result["classes_seen"] = cover.lambdas_seen.size();
      return r;
    }

    std::vector<std::pair<std::size_t, std::size_t>> choose_pairs(
        std::vector<std::size_t> const& safe, CliOptions const& opt) {
      std::vector<std::pair<std::size_t, std::size_t>> all;
      for (auto i : safe) {
        for (auto j : safe) {
          all.emplace_back(i, j);
        }
      }
      if (opt.pairs == "all") {
        return all;
      }
      if (!opt.pairs.starts_with("sample:")) {
        throw ParseError("--pairs must be all or sample:k");
      }
      std::string_view  ks = std::string_view(opt.pairs).substr(7);
      std::size_t       k  = 0;
      auto [ptr, ec]       = std::from_chars(ks.data(), ks.data() + ks.size(), k);
      if (ks.empty() || ec != std::errc{} || ptr != ks.data() + ks.size()) {
        throw ParseError("--pairs sample:k needs a count");
      }
      std::mt19937_64 rng(opt.seed);
      std::shuffle(all.begin(), all.end(), rng);
      all.resize(std::min(k, all.size()));
      std::sort(all.begin(), all.end());
      return all;
    }

    Report verb_nica(Presentation const& pres, CliOptions const& opt, Report r) {
      if (opt.safe > opt.radius) {
        throw ParseError("--safe must not exceed --radius");
      }
      auto const ball = enumerate_ball(pres, opt.radius);
      ToeplitzContext ctx(pres, ball);
      auto const safe  = ball.within(opt.safe);
      auto const pairs = choose_pairs(safe, opt);
      std::size_t escapes = 0, checked = 0;
      for (auto [i, j] : pairs) {
        auto const res = check_nica(ctx, ball[i], ball[j], safe);
        std::vector<std::string> xy{pres.to_string(ball[i]), pres.to_string(ball[j])};
        if (res.join == JoinKind::inconclusive) {
          r.findings.push_back({"join undecided", xy, "", true});
          continue;
        }
        ++checked;
        if (res.logical_failures > 0) {
          r.findings.push_back({"logical form", xy,
                                std::to_string(res.logical_failures) + " basis vectors"});
        }
        if (res.operator_form.failures > 0) {
          r.findings.push_back({"operator form", xy,
                                res.operator_form.detail.empty() ? ""
                                                                 : res.operator_form.detail.front()});
        }
        if (res.operator_form.escapes > 0) {
          escapes += res.operator_form.escapes;
          r.findings.push_back({"truncation escape", xy,
                                std::to_string(res.operator_form.escapes)
                                    + " basis vectors; raise --radius",
                                true});
        }
      }
      r.result["ambient_size"] = ball.size();
      r.result["safe_size"]    = safe.size();
      r.result["pairs"]        = pairs.size();
      r.result["checked"]      = checked;
      r.result["escapes"]      = escapes;
      if (opt.matrix) {
        auto x = pres.parse(*opt.matrix);
        auto T = ctx.op(x).restrict(safe);
        auto dense = T.dense();
        // Rows and columns over the safe region only.
        json rows = json::array();
        for (auto a : safe) {
          json row = json::array();
          for (auto b : safe) {
            row.push_back(dense[a][b]);
          }
          rows.push_back(std::move(row));
        }
        json basis = json::array();
        for (auto a : safe) {
          basis.push_back(pres.to_string(ball[a]));
        }
        r.result["matrix"] = {{"element", pres.to_string(x)},
                              {"basis", std::move(basis)},
                              {"rows", std::move(rows)}};
      }
      return r;
    }

    Report verb_chain(Presentation const& pres, CliOptions const& opt, Report r) {
      auto const* bs = dynamic_cast<BaumslagSolitar const*>(&pres);
      if (!bs || bs->params().d >= 0) {
        throw Error("demo-chain needs a bs:c,d preset with negative d");
      }
      auto const rep = bs->chain_demo(opt.n, opt.radius);
      r.result["h"]  = rep.h;
      json checks    = json::object();
      for (auto const& c : rep.checks) {
        checks[c.name] = c.passed;
        if (!c.passed) {
          r.findings.push_back({c.name, c.detail, ""});
        }
      }
      r.result["checks"] = std::move(checks);
      return r;
    }

  }  // namespace

  std::vector<std::string> const& verbs() {
    static std::vector<std::string> const v{"nf",        "leq",
                                            "join",      "pos",
                                            "ball",      "check-wql",
                                            "check-controlled", "nica-verify",
                                            "demo-chain"};
    return v;
  }

  Report run_verb(CliOptions const& opt) {
    auto const& vs = verbs();
    if (std::find(vs.begin(), vs.end(), opt.verb) == vs.end()) {
      throw ParseError("unknown verb '" + opt.verb + "'");
    }
    auto const pres = make_preset(opt.preset);
    Report     r;
    r.verb   = opt.verb;
    r.preset = pres->name();
    auto& p  = r.parameters;
    if (opt.verb == "ball" || opt.verb == "check-wql" || opt.verb == "join"
        || opt.verb == "check-controlled" || opt.verb == "nica-verify"
        || opt.verb == "demo-chain") {
      p["radius"] = std::to_string(opt.radius);
    }
    if (opt.verb == "check-controlled") {
      p["mode"]    = opt.mode;
      p["witness"] = opt.witness;
      if (opt.mode == "lambda") {
        p["chain-depth"] = std::to_string(opt.chain_depth);
      }
    }
    if (opt.verb == "nica-verify") {
      p["safe"]  = std::to_string(opt.safe);
      p["pairs"] = opt.pairs;
      if (opt.pairs != "all") {
        p["seed"] = std::to_string(opt.seed);
      }
    }
    if (opt.verb == "demo-chain") {
      p["n"] = std::to_string(opt.n);
    }

    if (opt.verb == "nf") {
      r = verb_nf(*pres, opt, std::move(r));
    } else if (opt.verb == "leq") {
      r = verb_leq(*pres, opt, std::move(r));
    } else if (opt.verb == "join") {
      r = verb_join(*pres, opt, std::move(r));
    } else if (opt.verb == "pos") {
      r = verb_pos(*pres, opt, std::move(r));
    } else if (opt.verb == "ball") {
      r = verb_ball(*pres, opt, std::move(r));
    } else if (opt.verb == "check-wql") {
      r = verb_wql(*pres, opt, std::move(r));
    } else if (opt.verb == "check-controlled") {
      r = verb_controlled(pres, opt, std::move(r));
    } else if (opt.verb == "nica-verify") {
      r = verb_nica(*pres, opt, std::move(r));
    } else {
      r = verb_chain(*pres, opt, std::move(r));
    }
    r.sort_findings();
    return r;
  }

  std::string to_json_lines(Report const& r) {
    std::ostringstream out;
    for (auto const& f : r.findings) {
      json j;
      auto const split = std::min<std::size_t>(2, f.elements.size());
      j["pair"]        = std::vector<std::string>(f.elements.begin(),
                                                  f.elements.begin() + static_cast<long>(split));
      j["upper_bounds"] = std::vector<std::string>(f.elements.begin() + static_cast<long>(split),
                                                   f.elements.end());
      j["classification"] = f.inconclusive ? "inconclusive" : f.kind;
      if (!f.detail.empty()) {
        j["detail"] = f.detail;
      }
      out << j.dump() << "\n";
    }
    return out.str();
  }

}  // namespace qlo
