#include "qlo/report.hpp"

#include <algorithm>
#include <sstream>

namespace qlo {

  char const* to_string(Verdict v) noexcept {
    switch (v) {
      case Verdict::pass:
        return "pass";
      case Verdict::violation:
        return "violation";
      default:
        return "inconclusive";
    }
  }

  int exit_code(Verdict v) noexcept {
    switch (v) {
      case Verdict::pass:
        return 0;
      case Verdict::violation:
        return 2;
      default:
        return 3;
    }
  }

  Verdict verdict_of(std::vector<Finding> const& findings) {
    if (findings.empty()) {
      return Verdict::pass;
    }
    bool decided = std::any_of(findings.begin(), findings.end(),
                               [](Finding const& f) { return !f.inconclusive; });
    return decided ? Verdict::violation : Verdict::inconclusive;
  }

  Verdict Report::verdict() const {
    return verdict_of(findings);
  }

  void Report::sort_findings() {
    std::sort(findings.begin(), findings.end());
  }

  nlohmann::ordered_json to_json(Report const& r) {
    nlohmann::ordered_json j;
    j["verb"]   = r.verb;
    j["preset"] = r.preset;
    j["parameters"] = nlohmann::ordered_json::object();
    for (auto const& [k, v] : r.parameters) {
      j["parameters"][k] = v;
    }
    j["verdict"]  = to_string(r.verdict());
    j["result"]   = r.result;
    j["findings"] = nlohmann::ordered_json::array();
    for (auto const& f : r.findings) {
      nlohmann::ordered_json fj;
      fj["kind"]     = f.kind;
      fj["elements"] = f.elements;
      if (!f.detail.empty()) {
        fj["detail"] = f.detail;
      }
      if (f.inconclusive) {
        fj["inconclusive"] = true;
      }
      j["findings"].push_back(std::move(fj));
    }
    return j;
  }

  std::string to_text(Report const& r) {
    std::ostringstream out;
    out << r.verb << " " << r.preset;
    for (auto const& [k, v] : r.parameters) {
      out << " " << k << "=" << v;
    }
    out << "\n";
    for (auto const& [k, v] : r.result.items()) {
      out << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
          << "\n";
    }
    for (auto const& f : r.findings) {
      out << "  " << (f.inconclusive ? "? " : "! ") << f.kind;
      for (auto const& e : f.elements) {
        out << " [" << e << "]";
      }
      if (!f.detail.empty()) {
        out << " " << f.detail;
      }
      out << "\n";
    }
    out << "verdict: " << to_string(r.verdict()) << "\n";
    return out.str();
  }

}  // namespace qlo
