#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "fsp/planner.hpp"

namespace fsp::toolkit {

struct BenchmarkEntry {
  std::string name;
  Environment env;
  Pose2 start_left;
  Pose2 start_right;
  Pose2 goal;
  PlannerParams params;
  double timeout_s = 5.0;
  std::uint64_t max_expansions = 0;
};

struct BenchmarkSuite {
  std::vector<BenchmarkEntry> entries;
};

struct BenchmarkRow {
  std::string name;
  PlanStatus status = PlanStatus::kNoPathExists;
  std::size_t steps = 0;
  double distance_m = 0.0;
  double duration_s = 0.0;
  std::uint64_t nodes_expanded = 0;
  double percent_rejected = 0.0;
};

/// Suite document: {"entries": [{"name", "env" (path) or "generate"
/// ({"kind", "seed"}), "start_left", "start_right", "goal" ([x, y, yaw]),
/// "params" (path or inline object, optional), "timeout", "max_expansions"}]}.
/// Relative paths resolve against `base_dir`.
BenchmarkSuite LoadSuite(std::string_view json_text, const std::filesystem::path& base_dir);
BenchmarkSuite LoadSuiteFile(const std::filesystem::path& path);

/// Runs entries concurrently; rows come back in suite order.
std::vector<BenchmarkRow> RunBenchmark(const BenchmarkSuite& suite);

/// CSV with the columns Plan, Number of Steps, Plan Distance (m),
/// Planning Duration (s), Nodes Expanded, Percent Rejected.
std::string BenchmarkCsv(const std::vector<BenchmarkRow>& rows, bool omit_timing = false);

}  // namespace fsp::toolkit
