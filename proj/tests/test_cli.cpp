#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <set>

#include <json.hpp>

#include "helpers.hpp"
#include "qlo/cli.hpp"

using namespace qlo;

namespace {

  CliOptions opts(std::string verb, std::string preset, std::vector<std::string> args = {}) {
    CliOptions o;
    o.verb   = std::move(verb);
    o.preset = std::move(preset);
    o.args   = std::move(args);
    return o;
  }

  struct Run {
    int         status;
    std::string out;
  };

  Run run(std::string const& args) {
    std::string cmd = std::string(QLO_BINARY) + " " + args + " 2>/dev/null";
    FILE*       f   = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    std::string           out;
    std::array<char, 4096> buf{};
    while (auto n = std::fread(buf.data(), 1, buf.size(), f)) {
      out.append(buf.data(), n);
    }
    int st = pclose(f);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
  }

}  // namespace

TEST_CASE("element parsing") {
  auto r = run_verb(opts("nf", "bs:2,3", {"b^3 a"}));
  CHECK(r.result["canonical"] == "a b^2");
  CHECK(run_verb(opts("nf", "bs:2,3", {"e"})).result["canonical"] == "e");
  CHECK(run_verb(opts("nf", "bs:2,3", {"b^0 a"})).result["canonical"] == "a");
  CHECK_THROWS_AS(run_verb(opts("nf", "bs:2,3", {"c"})), ParseError);
  CHECK_THROWS_AS(run_verb(opts("nf", "bs:2,3", {"a^x"})), ParseError);
  CHECK_THROWS_AS(run_verb(opts("nf", "bs:2,3", {})), ParseError);
}

TEST_CASE("parse and print are inverse on balls") {
  for (auto const& name : testing::wql_presets()) {
    CAPTURE(name);
    auto       p    = testing::preset(name);
    auto const ball = enumerate_ball(*p, 4);
    for (auto const& x : ball.elements()) {
      CHECK(p->parse(p->to_string(x)) == x);
    }
  }
}

TEST_CASE("verbs in process") {
  auto j = run_verb(opts("join", "bs:2,-3", {"b a", "b^2 a"}));
  CHECK(j.result["join"] == "infinite");
  CHECK(j.verdict() == Verdict::pass);

  auto l = run_verb(opts("leq", "free:2", {"a", "a b"}));
  CHECK(l.result["leq"] == true);

  auto p = run_verb(opts("pos", "bs:2,-3", {"a b^-7"}));
  CHECK(p.result["positive"] == true);

  auto b = run_verb([] {
    auto o   = opts("ball", "free:2");
    o.radius = 2;
    return o;
  }());
  CHECK(b.result["size"] == 7);

  auto d = run_verb([] {
    auto o = opts("demo-chain", "bs:2,-3");
    o.n    = 4;
    return o;
  }());
  CHECK(d.verdict() == Verdict::pass);

  auto w = run_verb([] {
    auto o   = opts("check-wql", "sd:nonexample");
    o.radius = 3;
    return o;
  }());
  CHECK(w.verdict() == Verdict::violation);
  CHECK(w.result.contains("known_witness"));

  CHECK_THROWS_AS(run_verb(opts("frobnicate", "free:2")), ParseError);
  CHECK_THROWS_AS(run_verb(opts("nf", "bs:0,2", {"a"})), ParseError);
  CHECK_THROWS_AS(run_verb(opts("demo-chain", "bs:2,3")), Error);
}

TEST_CASE("check-controlled in both modes") {
  auto s   = opts("check-controlled", "bs:2,3");
  s.radius = 4;
  CHECK(run_verb(s).verdict() == Verdict::pass);
  auto l   = opts("check-controlled", "bs:2,-3");
  l.radius = 4;
  l.mode   = "lambda";
  CHECK(run_verb(l).verdict() == Verdict::pass);
  auto e    = opts("check-controlled", "bs:1,-1");
  e.radius  = 4;
  e.witness = "empty";
  auto er   = run_verb(e);
  CHECK(er.verdict() == Verdict::violation);
  for (auto const& f : er.findings) {
    CHECK(f.kind == "axiom (i)");
  }
  auto n   = opts("check-controlled", "sd:nonexample");
  n.radius = 3;
  CHECK(run_verb(n).verdict() != Verdict::pass);
}

TEST_CASE("nica-verify with sampling and matrix export") {
  auto o   = opts("nica-verify", "free:2");
  o.radius = 6;
  o.safe   = 2;
  o.pairs  = "sample:10";
  o.seed   = 7;
  auto r   = run_verb(o);
  CHECK(r.verdict() == Verdict::pass);
  CHECK(r.result["pairs"] == 10);
  o.matrix = "a";
  auto m   = run_verb(o);
  REQUIRE(m.result.contains("matrix"));
  CHECK(m.result["matrix"]["rows"].size() == m.result["safe_size"]);
  o.safe = 9;
  CHECK_THROWS_AS(run_verb(o), ParseError);
}

TEST_CASE("registry names are unique and concrete presets construct") {
  std::set<std::string> const grammar{"free:k", "bs:c,d", "hnn+:u,w@S", "hnn-:u,w@S",
                                      "graph:FILE.json", "z:a,b"};
  std::set<std::string>       seen;
  for (auto const& spec : preset_registry()) {
    CHECK(seen.insert(spec.name).second);
    if (grammar.count(spec.name) == 0) {
      CAPTURE(spec.name);
      CHECK_NOTHROW(make_preset(spec.name));
    }
  }
  CHECK(make_preset("z:a,b")->name() == "z:a,b");
}

TEST_CASE("exit codes of the binary") {
  CHECK(run(R"(join bs:2,-3 "b a" "b^2 a")").status == 0);
  CHECK(run("demo-chain bs:2,-3 --n 4").status == 0);
  CHECK(run("check-wql sd:nonexample --radius 6").status == 2);
  CHECK(run("demo-chain bs:1,-1 --n 4").status == 2);
  CHECK(run(R"(join sd:nonexample "a t^2" "a b t" --radius 3)").status == 3);
  CHECK(run("frobnicate free:2").status == 64);
  CHECK(run("nf bs:2,3 q").status == 64);
  CHECK(run("nf").status == 64);
  CHECK(run("--radius x nf free:2 a").status == 64);
  CHECK(run("--list-presets").status == 0);
}

TEST_CASE("JSON output is deterministic and well formed") {
  auto const cmd = std::string("check-wql sd:nonexample --radius 4 --json");
  auto const a   = run(cmd);
  auto const b   = run(cmd);
  CHECK(a.out == b.out);
  auto const doc = nlohmann::json::parse(a.out);
  CHECK(doc["verdict"] == "violation");
  CHECK(doc["verb"] == "check-wql");
  auto const& f = doc["findings"];
  REQUIRE(f.size() > 1);
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    auto key = [](nlohmann::json const& x) {
      return std::pair{x["kind"].get<std::string>(),
                       x["elements"].get<std::vector<std::string>>()};
    };
    CHECK(key(f[i]) <= key(f[i + 1]));
  }

  auto const lines = run("check-wql sd:nonexample --radius 4 --jsonl");
  std::size_t n    = 0;
  std::size_t pos  = 0;
  while ((pos = lines.out.find('\n', pos)) != std::string::npos) {
    ++n;
    ++pos;
  }
  CHECK(n == f.size());
  auto first = nlohmann::json::parse(lines.out.substr(0, lines.out.find('\n')));
  CHECK(first.contains("pair"));
  CHECK(first.contains("upper_bounds"));
  CHECK(first["classification"] == "no least upper bound");

  auto const s1 = run("nica-verify free:2 --radius 5 --safe 2 --pairs sample:5 --seed 3 --json");
  auto const s2 = run("nica-verify free:2 --radius 5 --safe 2 --pairs sample:5 --seed 3 --json");
  CHECK(s1.out == s2.out);
}

TEST_CASE("graph presets from a JSON file") {
  auto const path = std::string("test_cli_graph.json");
  {
    std::ofstream f(path);
    f << R"({"vertices": ["z:a", "z:b", "z:c"], "edges": [[0, 1]]})";
  }
  auto r = run_verb(opts("nf", "graph:" + path, {"[v1: b] [v0: a]"}));
  CHECK(r.result["canonical"] == "[v0: a] [v1: b]");
  CHECK(run("nf graph:" + path + " \"[v2: c]\"").status == 0);
  CHECK(run("nf graph:missing.json e").status == 64);
  std::remove(path.c_str());
}
