#include "qlo/presets.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qlo/baumslag.hpp"
#include "qlo/error.hpp"
#include "qlo/free_group.hpp"
#include "qlo/graph_product.hpp"
#include "qlo/hnn.hpp"
#include "qlo/semidirect.hpp"

namespace qlo {

  namespace {

    std::int64_t parse_int(std::string_view s, std::string_view what) {
      std::int64_t v   = 0;
      auto const   end = s.data() + s.size();
      auto [ptr, ec]   = std::from_chars(s.data(), end, v);
      if (s.empty() || ec != std::errc{} || ptr != end) {
        throw ParseError("bad " + std::string(what) + " '" + std::string(s) + "'");
      }
      return v;
    }

    std::vector<std::string> split(std::string_view s, char sep) {
      std::vector<std::string> out;
      std::size_t              start = 0;
      while (true) {
        auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) {
          return out;
        }
        start = pos + 1;
      }
    }

    PresentationPtr lattice(std::vector<std::string> names) {
      return std::make_shared<LatticePresentation>(std::move(names));
    }

    PresentationPtr make_free(std::string_view arg) {
      auto k = parse_int(arg, "rank");
      if (k < 1 || k > 26) {
        throw ParseError("free: rank must lie in 1..26");
      }
      return std::make_shared<FreePresentation>(
          FreePresentation::default_names(static_cast<std::size_t>(k)));
    }

    PresentationPtr make_z(std::string_view arg) {
      auto names = split(arg, ',');
      std::set<std::string> seen;
      for (auto const& n : names) {
        if (n.empty() || !seen.insert(n).second) {
          throw ParseError("z: generator names must be distinct and nonempty");
        }
      }
      return lattice(std::move(names));
    }

    PresentationPtr make_bs(std::string_view arg) {
      auto parts = split(arg, ',');
      if (parts.size() != 2) {
        throw ParseError("bs: expected bs:c,d");
      }
      BsParams p{parse_int(parts[0], "c"), parse_int(parts[1], "d")};
      if (p.c < 1 || p.d == 0) {
        throw ParseError("bs: need c >= 1 and d != 0");
      }
      return std::make_shared<BaumslagSolitar>(p);
    }

    PresentationPtr make_hnn(std::string_view arg, HnnMode mode) {
      auto        at = arg.find('@');
      std::string body(arg.substr(0, at));
      auto        uw = split(body, ',');
      if (uw.size() != 2 || uw[0].empty() || uw[1].empty()) {
        throw ParseError("hnn: expected hnn+:u,w@S");
      }
      std::string alphabet;
      if (at != std::string_view::npos) {
        alphabet = std::string(arg.substr(at + 1));
      } else {
        alphabet = uw[0] + uw[1];
        std::sort(alphabet.begin(), alphabet.end());
        alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
      }
      HnnParams p;
      p.mode = mode;
      for (char c : alphabet) {
        std::string n(1, c);
        if (std::find(p.names.begin(), p.names.end(), n) != p.names.end()) {
          throw ParseError("hnn: repeated letter in the alphabet");
        }
        p.names.push_back(n);
      }
      auto word = [&](std::string const& s) {
        std::vector<Gen> gens;
        for (char c : s) {
          auto pos = alphabet.find(c);
          if (pos == std::string::npos) {
            throw ParseError(std::string("hnn: letter '") + c + "' not in the alphabet");
          }
          gens.push_back(static_cast<Gen>(pos));
        }
        return FWord::from_positive(p.names.size(), gens);
      };
      p.u = word(uw[0]);
      p.w = word(uw[1]);
      try {
        return std::make_shared<HnnExtension>(std::move(p));
      } catch (ParseError const&) {
        throw;
      } catch (Error const& e) {
        throw ParseError(e.what());
      }
    }

    PresentationPtr make_graph(std::string_view arg) {
      std::string const name = "graph:" + std::string(arg);
      if (arg == "path3") {
        Graph g(3);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        return std::make_shared<GraphProduct>(
            name, g, std::vector{lattice({"a"}), lattice({"b"}), lattice({"c"})});
      }
      if (arg == "noedge2") {
        return std::make_shared<GraphProduct>(name, Graph(2),
                                              std::vector{lattice({"a"}), lattice({"b"})});
      }
      if (arg == "complete2") {
        return std::make_shared<GraphProduct>(name, Graph::complete(2),
                                              std::vector{lattice({"a"}), lattice({"b"})});
      }
      if (arg.ends_with(".json")) {
        std::ifstream in{std::string(arg)};
        if (!in) {
          throw ParseError("graph: cannot read " + std::string(arg));
        }
        std::stringstream buf;
        buf << in.rdbuf();
        return graph_from_json(buf.str(), name);
      }
      throw ParseError("graph: unknown graph '" + std::string(arg) + "'");
    }

    PresentationPtr make_sd(std::string_view arg) {
      if (arg == "swap2") {
        return std::make_shared<Semidirect>(Semidirect::swap2());
      }
      if (arg == "perm3") {
        return std::make_shared<Semidirect>(Semidirect::perm3());
      }
      if (arg == "phi-ab") {
        return std::make_shared<Semidirect>(Semidirect::phi_ab());
      }
      if (arg == "nonexample") {
        return std::make_shared<Semidirect>(Semidirect::nonexample());
      }
      throw ParseError("sd: unknown action '" + std::string(arg) + "'");
    }

  }  // namespace

  std::vector<PresetSpec> const& preset_registry() {
    static std::vector<PresetSpec> const r{
        {"free:k", "free group of rank k, cone F+"},
        {"free:2", "free group on a, b"},
        {"scarparo", "F(a, b) with cone {e} u bF+"},
        {"z:a,b", "free abelian group with cone N^k"},
        {"bs:c,d", "Baumslag-Solitar <a, b : a b^c = b^d a>, d signed"},
        {"bs:1,2", ""},
        {"bs:2,3", ""},
        {"bs:2,-3", ""},
        {"bs:3,-2", ""},
        {"bs:1,-1", ""},
        {"hnn+:u,w@S", "HNN extension with u t = t w"},
        {"hnn-:u,w@S", "HNN extension with u t w = t"},
        {"hnn+:x,y@xy", ""},
        {"hnn-:x,y@xy", ""},
        {"graph:path3", "graph product of three copies of Z on a path"},
        {"graph:noedge2", "free product of two copies of Z"},
        {"graph:complete2", "direct sum of two copies of Z"},
        {"graph:FILE.json", "graph product from {vertices, edges}"},
        {"sd:swap2", "F(a, b) x Z, t swapping a and b"},
        {"sd:perm3", "F(a, b, c) x Z, t cycling the generators"},
        {"sd:phi-ab", "F(a, b) x Z with a -> ab, b -> b"},
        {"sd:nonexample", "F(a, b) x Z with a -> ba, b -> bba"},
    };
    return r;
  }

  PresentationPtr make_preset(std::string_view name) {
    auto colon = name.find(':');
    auto head  = name.substr(0, colon);
    auto arg   = colon == std::string_view::npos ? std::string_view{}
                                                 : name.substr(colon + 1);
    if (name == "scarparo") {
      return std::make_shared<ScarparoPresentation>();
    }
    if (colon != std::string_view::npos) {
      if (head == "free") {
        return make_free(arg);
      }
      if (head == "z") {
        return make_z(arg);
      }
      if (head == "bs") {
        return make_bs(arg);
      }
      if (head == "hnn+") {
        return make_hnn(arg, HnnMode::plus);
      }
      if (head == "hnn-") {
        return make_hnn(arg, HnnMode::minus);
      }
      if (head == "graph") {
        return make_graph(arg);
      }
      if (head == "sd") {
        return make_sd(arg);
      }
    }
    throw ParseError("unknown preset '" + std::string(name) + "'");
  }

  PresentationPtr graph_from_json(std::string const& text, std::string name) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("graph config: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
      throw ParseError("graph config: missing vertices array");
    }
    std::vector<PresentationPtr> vs;
    for (auto const& v : j["vertices"]) {
      if (!v.is_string()) {
        throw ParseError("graph config: vertices must be preset names");
      }
      vs.push_back(make_preset(v.get<std::string>()));
    }
    Graph g(vs.size());
    if (j.contains("edges")) {
      for (auto const& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned()
            || !e[1].is_number_unsigned()) {
          throw ParseError("graph config: edges are pairs of vertex indices");
        }
        try {
          g.add_edge(e[0].get<std::size_t>(), e[1].get<std::size_t>());
        } catch (Error const& err) {
          throw ParseError(std::string("graph config: ") + err.what());
        }
      }
    }
    try {
      return std::make_shared<GraphProduct>(std::move(name), g, std::move(vs));
    } catch (ParseError const&) {
      throw;
    } catch (Error const& err) {
      throw ParseError(std::string("graph config: ") + err.what());
    }
  }

}  // namespace qlo
