#include <iostream>

#include <CLI11.hpp>

#include "qlo/cli.hpp"
#include "qlo/error.hpp"
#include "qlo/presets.hpp"

namespace {

  constexpr int usage_error = 64;

}  // namespace

int main(int argc, char** argv) {
  qlo::CliOptions opt;
  bool            as_json  = false;
  bool            as_lines = false;
  bool            list     = false;

  CLI::App app{"Positive cones of ordered groups: normal forms, joins and checks"};
  app.add_flag("--list-presets", list, "Print the preset grammar and exit");
  app.add_option("verb", opt.verb, "nf | leq | join | pos | ball | check-wql | "
                                   "check-controlled | nica-verify | demo-chain");
  app.add_option("preset", opt.preset, "Preset name, e.g. bs:2,-3");
  // Element arguments are collected from the leftovers: graph syllables start
  // with '[', which CLI11 would split as a list.
  app.allow_extras();
  app.footer("Remaining arguments are element texts, e.g. \"b^2 a\" or \"[v0: a] [v1: b]\".");
  app.add_option("--radius", opt.radius, "Ball radius in positive letters")
      ->capture_default_str();
  app.add_option("--safe", opt.safe, "nica-verify: radius of the safe region")
      ->capture_default_str();
  app.add_option("--chain-depth", opt.chain_depth, "Chain terms checked per class")
      ->capture_default_str();
  app.add_option("--mode", opt.mode, "check-controlled: sigma or lambda")
      ->capture_default_str();
  app.add_option("--witness", opt.witness, "check-controlled: default or empty")
      ->capture_default_str();
  app.add_option("--pairs", opt.pairs, "nica-verify: all or sample:k")
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "Seed for sampled scans")->capture_default_str();
  app.add_option("--n", opt.n, "demo-chain: last chain index")->capture_default_str();
  app.add_option("--matrix", opt.matrix, "nica-verify: export T_x on the safe region");
  app.add_flag("--json", as_json, "Report as one JSON document");
  app.add_flag("--jsonl", as_lines, "One JSON line per finding");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return usage_error;
  }

  opt.args = app.remaining();
  for (auto const& a : opt.args) {
    if (a.rfind("--", 0) == 0) {
      std::cerr << "qlo: unknown option " << a << "\n";
      return usage_error;
    }
  }

  if (list) {
    for (auto const& p : qlo::preset_registry()) {
      std::cout << p.name << (p.summary.empty() ? "" : "\t" + p.summary) << "\n";
    }
    return 0;
  }
  if (opt.verb.empty() || opt.preset.empty()) {
    std::cerr << "usage: qlo VERB PRESET [ELEMENTS...] [options]; see --help\n";
    return usage_error;
  }

  try {
    auto const report = qlo::run_verb(opt);
    if (as_lines) {
      std::cout << qlo::to_json_lines(report);
    } else if (as_json) {
      std::cout << qlo::to_json(report).dump(2) << "\n";
    } else {
      std::cout << qlo::to_text(report);
    }
    return qlo::exit_code(report.verdict());
  } catch (qlo::Error const& e) {
    std::cerr << "qlo: " << e.what() << "\n";
    return usage_error;
  }
}
