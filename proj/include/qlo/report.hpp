#ifndef QLO_REPORT_HPP_
#define QLO_REPORT_HPP_

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace qlo {

  enum class Verdict { pass, violation, inconclusive };

  char const* to_string(Verdict v) noexcept;
  int         exit_code(Verdict v) noexcept;  // 0, 2, 3

  struct Finding {
    std::string              kind;
    std::vector<std::string> elements;
    std::string              detail;
    bool                     inconclusive = false;  // undecided within the ball

    friend bool operator==(Finding const&, Finding const&) = default;
    friend auto operator<=>(Finding const&, Finding const&) = default;
  };

  struct Report {
    std::string                        verb;
    std::string                        preset;
    std::map<std::string, std::string> parameters;
    std::vector<Finding>               findings;
    nlohmann::ordered_json             result = nlohmann::ordered_json::object();

    // pass iff no findings; violation if any finding is decided.
    Verdict verdict() const;
    void    sort_findings();
  };

  Verdict verdict_of(std::vector<Finding> const& findings);

  nlohmann::ordered_json to_json(Report const& r);
  std::string            to_text(Report const& r);

}  // namespace qlo

#endif  // QLO_REPORT_HPP_
