#ifndef QLO_CLI_HPP_
#define QLO_CLI_HPP_

// The verbs of the qlo tool as a library call, so tests can run them
// in-process. Argument parsing lives in tools/qlo_cli.cpp.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlo/report.hpp"

namespace qlo {

  struct CliOptions {
    std::string              verb;
    std::string              preset;
    std::vector<std::string> args;  // element texts
    std::size_t              radius      = 6;
    std::size_t              safe        = 3;  // nica-verify safe region
    std::size_t              chain_depth = 6;
    std::string              mode        = "sigma";    // sigma | lambda
    std::string              witness     = "default";  // default | empty
    std::string              pairs       = "all";      // all | sample:k
    std::uint64_t            seed        = 0;
    std::size_t              n           = 6;  // demo-chain length
    std::optional<std::string> matrix;          // nica-verify: export T_x
  };

  std::vector<std::string> const& verbs();

  // Throws ParseError (usage) or Error (precondition) on bad input.
  Report run_verb(CliOptions const& opt);

  // One JSON object per finding: {pair, upper_bounds, classification}.
  std::string to_json_lines(Report const& r);

}  // namespace qlo

#endif  // QLO_CLI_HPP_
