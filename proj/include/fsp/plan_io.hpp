#pragma once

#include <string>

#include "fsp/planner.hpp"

namespace fsp {

struct PlanWriteOptions {
  /// Write a zero duration so that repeated runs are byte-identical.
  bool omit_timing = false;
};

/// Plan document: status, steps (side, translation, rotation, area_fraction,
/// foothold) and stats.
std::string SavePlan(const PlannerResult& result, const PlanWriteOptions& options = {});

}  // namespace fsp
