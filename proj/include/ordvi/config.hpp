#pragma once

#include <string>

#include "ordvi/extremal.hpp"

namespace ordvi {

struct RunSettings {
  OuterOptions outer;
  std::vector<double> oracle_levels;  // empty unless the instance declares them
};

struct LoadedProblem {
  GridProblem problem;
  RunSettings settings;
};

/// Builds a GridProblem from its JSON description. Field errors raise
/// config_error carrying the offending path. See README for the schema.
LoadedProblem problem_from_json(const std::string& json_text);
LoadedProblem load_problem(const std::string& path);

/// Sweep file: {"base": <config>, "sweep": [<override object>, ...]};
/// each override is shallow-merged into the base.
std::vector<std::string> expand_sweep(const std::string& json_text);

}  // namespace ordvi
