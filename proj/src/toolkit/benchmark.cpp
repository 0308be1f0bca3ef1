#include "fsp/toolkit/benchmark.hpp"

#include <cstdio>
#include <fstream>
#include <future>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "fsp/params.hpp"
#include "fsp/toolkit/generators.hpp"

namespace fsp::toolkit {
namespace {

using nlohmann::json;

Pose2 PoseFromJson(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument(where + " must be [x, y, yaw]");
  return Pose2(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

std::string Number(double v, int decimals = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

// Quotes a CSV field when it needs it.
std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

BenchmarkSuite LoadSuite(std::string_view json_text, const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("suite is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array()) {
    throw std::invalid_argument("suite must be an object with an \"entries\" array");
  }
  static const std::set<std::string> kKnown = {"name", "env",  "generate", "start_left",     "start_right",
                                               "goal", "params", "timeout", "max_expansions"};
  BenchmarkSuite suite;
  for (const json& je : doc["entries"]) {
    const std::string name = je.value("name", std::string("entry ") + std::to_string(suite.entries.size()));
    for (const auto& [key, value] : je.items()) {
      if (!kKnown.contains(key)) throw std::invalid_argument(name + ": unknown field \"" + key + "\"");
    }
    BenchmarkEntry entry;
    entry.name = name;
    std::optional<GeneratedScenario> generated;
    if (je.contains("env")) {
      entry.env = LoadEnvironmentFile(base_dir / je["env"].get<std::string>());
    } else if (je.contains("generate")) {
      const json& g = je["generate"];
      const auto kind = ParseEnvironmentKind(g.at("kind").get<std::string>());
      if (!kind) throw std::invalid_argument(name + ": unknown generator kind");
      generated = GenerateEnvironment(*kind, g.value("seed", std::uint64_t{0}));
      entry.env = generated->env;
    } else {
      throw std::invalid_argument(name + ": needs \"env\" or \"generate\"");
    }
    auto pose = [&](const char* key, const Pose2& fallback, bool have_fallback) {
      if (je.contains(key)) return PoseFromJson(je[key], name + "." + key);
      if (!have_fallback) throw std::invalid_argument(name + ": missing \"" + key + "\"");
      return fallback;
    };
    entry.start_left = pose("start_left", generated ? generated->start_left : Pose2{}, generated.has_value());
    entry.start_right = pose("start_right", generated ? generated->start_right : Pose2{}, generated.has_value());
    entry.goal = pose("goal", generated ? generated->goal : Pose2{}, generated.has_value());
    if (je.contains("params")) {
      const json& jp = je["params"];
      entry.params = jp.is_string() ? LoadParamsFile(base_dir / jp.get<std::string>()) : LoadParams(jp.dump());
    }
    entry.timeout_s = je.value("timeout", entry.timeout_s);
    entry.max_expansions = je.value("max_expansions", entry.max_expansions);
    suite.entries.push_back(std::move(entry));
  }
  return suite;
}

BenchmarkSuite LoadSuiteFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open suite file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return LoadSuite(buffer.str(), path.parent_path());
}

std::vector<BenchmarkRow> RunBenchmark(const BenchmarkSuite& suite) {
  std::vector<std::future<BenchmarkRow>> jobs;
  for (const BenchmarkEntry& entry : suite.entries) {
    jobs.push_back(std::async(std::launch::async, [&entry] {
      PlannerRequest request;
      request.env = &entry.env;
      request.start_left = entry.start_left;
      request.start_right = entry.start_right;
      request.goal_midstance = entry.goal;
      request.timeout_s = entry.timeout_s;
      request.max_expansions = entry.max_expansions;
      request.params = entry.params;
      const PlannerResult result = Plan(request);
      BenchmarkRow row;
      row.name = entry.name;
      row.status = result.status;
      row.steps = result.steps.size();
      row.distance_m = result.stats.path_distance_m;
      row.duration_s = result.stats.duration_s;
      row.nodes_expanded = result.stats.nodes_expanded;
      row.percent_rejected = result.stats.PercentRejected();
      return row;
    }));
  }
  std::vector<BenchmarkRow> rows;
  for (auto& job : jobs) rows.push_back(job.get());
  return rows;
}

std::string BenchmarkCsv(const std::vector<BenchmarkRow>& rows, bool omit_timing) {
  std::string out =
      "Plan,Number of Steps,Plan Distance (m),Planning Duration (s),Nodes Expanded,Percent Rejected\n";
  for (const BenchmarkRow& r : rows) {
    out += CsvField(r.name) + "," + std::to_string(r.steps) + "," + Number(r.distance_m) + "," +
           Number(omit_timing ? 0.0 : r.duration_s) + "," + std::to_string(r.nodes_expanded) + "," +
           Number(r.percent_rejected, 10) + "\n";
  }
  return out;
}

}  // namespace fsp::toolkit
