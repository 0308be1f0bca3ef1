// Command-line front end: plan, gen, bench, anytime.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "fsp/logging.hpp"
#include "fsp/params.hpp"
#include "fsp/plan_io.hpp"
#include "fsp/planner.hpp"
#include "fsp/toolkit/benchmark.hpp"
#include "fsp/toolkit/generators.hpp"
#include "fsp/toolkit/scenario.hpp"
#include "fsp/toolkit/svg.hpp"

namespace {

constexpr int kExitFound = 0;
constexpr int kExitBestEffort = 2;
constexpr int kExitNoPath = 3;
constexpr int kExitInputError = 4;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

fsp::Pose2 ParsePose(const std::string& text, const char* what) {
  std::stringstream ss(text);
  double v[3];
  char comma = 0;
  if (!(ss >> v[0] >> comma) || comma != ',' || !(ss >> v[1] >> comma) || comma != ',' || !(ss >> v[2])) {
    throw InputError(std::string(what) + " must look like \"x,y,yaw\"");
  }
  ss >> std::ws;
  if (!ss.eof()) throw InputError(std::string(what) + " has trailing characters");
  return {v[0], v[1], v[2]};
}

void WriteFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << content;
  if (!out) throw InputError("failed writing " + path);
}

struct PlanOptions {
  std::string env;
  std::string start;
  std::string goal;
  std::string params;
  double timeout = 5.0;
  std::uint64_t max_expansions = 0;
  std::string out;
  std::string svg;
  bool no_wiggle = false;
  bool omit_timing = false;
};

int RunPlan(const PlanOptions& o) {
  const fsp::Environment env = fsp::LoadEnvironmentFile(o.env);
  const fsp::PlannerParams params = o.params.empty() ? fsp::PlannerParams{} : fsp::LoadParamsFile(o.params);
  const fsp::Pose2 start = ParsePose(o.start, "--start");
  const double width = params.cost.nominal_stance_width;

  fsp::PlannerRequest request;
  request.env = &env;
  request.start_left = fsp::FootFromMidstance(start, fsp::Side::kLeft, width);
  request.start_right = fsp::FootFromMidstance(start, fsp::Side::kRight, width);
  request.goal_midstance = ParsePose(o.goal, "--goal");
  request.timeout_s = o.timeout;
  request.max_expansions = o.max_expansions;
  request.params = params;
  fsp::PlannerResult result = fsp::Plan(request);
  if (!o.no_wiggle) fsp::WigglePlan(result, env, params);

  WriteFile(o.out, fsp::SavePlan(result, {.omit_timing = o.omit_timing}));
  if (!o.svg.empty()) {
    fsp::toolkit::SvgAnnotations notes;
    notes.start = start;
    notes.goal = request.goal_midstance;
    WriteFile(o.svg, fsp::toolkit::RenderSvg(env, &result, params.foot, notes));
  }
  std::printf("%s: %zu steps\n", std::string(fsp::ToString(result.status)).c_str(), result.steps.size());
  switch (result.status) {
    case fsp::PlanStatus::kFoundSolution: return kExitFound;
    case fsp::PlanStatus::kTimedOutBestEffort: return kExitBestEffort;
    case fsp::PlanStatus::kNoPathExists: return kExitNoPath;
    case fsp::PlanStatus::kInvalidStart: return kExitInputError;
  }
  return kExitInputError;
}

int RunGen(const std::string& kind_name, std::uint64_t seed, const std::string& out) {
  const auto kind = fsp::toolkit::ParseEnvironmentKind(kind_name);
  if (!kind) throw InputError("unknown --kind \"" + kind_name + "\"");
  WriteFile(out, fsp::SaveEnvironment(fsp::toolkit::GenerateEnvironment(*kind, seed).env));
  return kExitFound;
}

int RunBench(const std::string& suite_path, const std::string& out, bool omit_timing) {
  const auto suite = fsp::toolkit::LoadSuiteFile(suite_path);
  WriteFile(out, fsp::toolkit::BenchmarkCsv(fsp::toolkit::RunBenchmark(suite), omit_timing));
  return kExitFound;
}

int RunAnytime(const std::string& scenario_path, const std::string& out, bool omit_timing) {
  const auto script = fsp::toolkit::LoadScenarioFile(scenario_path);
  WriteFile(out, fsp::toolkit::SaveTrace(fsp::toolkit::RunAnytimeScenario(script), omit_timing));
  return kExitFound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Footstep planner over planar-region worlds"};
  app.require_subcommand(1);

  PlanOptions plan;
  auto* plan_cmd = app.add_subcommand("plan", "Plan footsteps from a start midstance to a goal midstance");
  plan_cmd->add_option("--env", plan.env, "Environment JSON")->required()->check(CLI::ExistingFile);
  plan_cmd->add_option("--start", plan.start, "Start midstance \"x,y,yaw\"")->required();
  plan_cmd->add_option("--goal", plan.goal, "Goal midstance \"x,y,yaw\"")->required();
  plan_cmd->add_option("--params", plan.params, "Parameters JSON")->check(CLI::ExistingFile);
  plan_cmd->add_option("--timeout", plan.timeout, "Search timeout in seconds")->check(CLI::PositiveNumber);
  plan_cmd->add_option("--max-expansions", plan.max_expansions, "Expansion budget (0: unlimited)");
  plan_cmd->add_option("--out", plan.out, "Plan JSON output")->required();
  plan_cmd->add_option("--svg", plan.svg, "Optional SVG rendering");
  plan_cmd->add_flag("--no-wiggle", plan.no_wiggle, "Skip the foothold adjustment pass");
  plan_cmd->add_flag("--omit-timing", plan.omit_timing, "Write zero durations for reproducible output");

  std::string kind;
  std::uint64_t seed = 0;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an environment");
  gen_cmd->add_option("--kind", kind, "flat, beam, stepping-stones, cinder-field, narrow-gap or platform-gap")
      ->required();
  gen_cmd->add_option("--seed", seed, "Random seed");
  gen_cmd->add_option("--out", gen_out, "Environment JSON output")->required();

  std::string suite;
  std::string bench_out;
  bool bench_omit = false;
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark suite");
  bench_cmd->add_option("--suite", suite, "Suite JSON")->required()->check(CLI::ExistingFile);
  bench_cmd->add_option("--out", bench_out, "CSV output")->required();
  bench_cmd->add_flag("--omit-timing", bench_omit, "Write zero durations for reproducible output");

  std::string scenario;
  std::string anytime_out;
  bool anytime_omit = false;
  auto* anytime_cmd = app.add_subcommand("anytime", "Replay a dynamic scenario with replanning");
  anytime_cmd->add_option("--scenario", scenario, "Scenario JSON")->required()->check(CLI::ExistingFile);
  anytime_cmd->add_option("--out", anytime_out, "Trace JSON output")->required();
  anytime_cmd->add_flag("--omit-timing", anytime_omit, "Write zero durations for reproducible output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    fsp::InitLoggingFromEnv();
    if (*plan_cmd) return RunPlan(plan);
    if (*gen_cmd) return RunGen(kind, seed, gen_out);
    if (*bench_cmd) return RunBench(suite, bench_out, bench_omit);
    if (*anytime_cmd) return RunAnytime(scenario, anytime_out, anytime_omit);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInputError;
  }
  return kExitInputError;
}
