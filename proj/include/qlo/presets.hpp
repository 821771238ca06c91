#ifndef QLO_PRESETS_HPP_
#define QLO_PRESETS_HPP_

// The preset grammar shared by the CLI and the tests.
//
//   free:k            free group of rank k, cone F+
//   scarparo          F(a, b) with cone {e} u bF+
//   z:a,b             Z^k with cone N^k
//   bs:c,d            Baumslag-Solitar, d signed
//   hnn+:u,w@S        HNN extension over the alphabet S (one char per name)
//   hnn-:u,w@S
//   graph:path3 | graph:noedge2 | graph:complete2 | graph:FILE.json
//   sd:swap2 | sd:perm3 | sd:phi-ab | sd:nonexample

#include <string>
#include <string_view>
#include <vector>

#include "qlo/presentation.hpp"

namespace qlo {

  struct PresetSpec {
    std::string name;     // a concrete name, or a pattern such as "bs:c,d"
    std::string summary;
  };

  // Every fixed name plus one entry per parametric pattern.
  std::vector<PresetSpec> const& preset_registry();

  // Throws ParseError on an unknown or malformed name.
  PresentationPtr make_preset(std::string_view name);

  // A graph product from {"vertices": [preset, ...], "edges": [[i, j], ...]}.
  PresentationPtr graph_from_json(std::string const& text, std::string name);

}  // namespace qlo

#endif  // QLO_PRESETS_HPP_
