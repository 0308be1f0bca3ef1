#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fsp/planner.hpp"

namespace fsp {

class ParamsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads a parameters document. Sections (lattice, expansion, checker, cost,
/// wiggle, foot, goal_tolerance) and fields are optional and default to the
/// built-in values; unknown names are errors. Units are meters and radians.
PlannerParams LoadParams(std::string_view json_text);
PlannerParams LoadParamsFile(const std::filesystem::path& path);
/// Writes every field, so the output documents the full parameter set.
std::string SaveParams(const PlannerParams& params);

}  // namespace fsp
