#include "fsp/params.hpp"

#include <fstream>
#include <functional>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

namespace fsp {
namespace {

using nlohmann::ordered_json;

struct Field {
  const char* name;
  std::function<void(const ordered_json&)> read;
  std::function<ordered_json()> write;
};

double ReadNumber(const ordered_json& j, const std::string& where) {
  if (!j.is_number()) throw ParamsError(where + " must be a number");
  return j.get<double>();
}

Field Number(const char* name, double* target, const std::string& section) {
  return {name, [=](const ordered_json& j) { *target = ReadNumber(j, section + "." + name); },
          [=] { return ordered_json(*target); }};
}

ConvexPolygon2 ReadPolygon(const ordered_json& j, const std::string& where) {
  if (!j.is_array()) throw ParamsError(where + " must be an array of [x, y] vertices");
  std::vector<Point2> vertices;
  for (const auto& v : j) {
    if (!v.is_array() || v.size() != 2) throw ParamsError(where + " has a vertex that is not [x, y]");
    vertices.push_back({ReadNumber(v[0], where), ReadNumber(v[1], where)});
  }
  try {
    return ConvexPolygon2::FromVertices(std::move(vertices));
  } catch (const GeometryError& e) {
    throw ParamsError(where + ": " + e.what());
  }
}

ordered_json WritePolygon(const ConvexPolygon2& poly) {
  ordered_json out = ordered_json::array();
  for (const Point2& v : poly.vertices()) out.push_back({v.x, v.y});
  return out;
}

Field Polygon(const char* name, ConvexPolygon2* target, const std::string& section) {
  return {name, [=](const ordered_json& j) { *target = ReadPolygon(j, section + "." + name); },
          [=] { return WritePolygon(*target); }};
}

struct Section {
  const char* name;
  std::vector<Field> fields;
};

std::vector<Section> Schema(PlannerParams& p) {
  std::vector<Section> s;
  s.push_back({"lattice",
               {Number("xy_resolution", &p.lattice.xy_resolution, "lattice"),
                Number("yaw_resolution", &p.lattice.yaw_resolution, "lattice")}});
  auto& e = p.expansion;
  s.push_back({"expansion",
               {Number("min_length", &e.min_length, "expansion"), Number("max_length", &e.max_length, "expansion"),
                Number("min_width", &e.min_width, "expansion"), Number("max_width", &e.max_width, "expansion"),
                Number("min_yaw_delta", &e.min_yaw_delta, "expansion"),
                Number("max_yaw_delta", &e.max_yaw_delta, "expansion"),
                Number("max_reach", &e.max_reach, "expansion")}});
  auto& c = p.checker;
  const std::string ck = "checker";
  s.push_back({"checker",
               {Number("max_incline", &c.max_incline, ck), Number("min_area_fraction", &c.min_area_fraction, ck),
                Polygon("stance_clearance", &c.stance_clearance, ck), Number("max_forward", &c.max_forward, ck),
                Number("max_backward", &c.max_backward, ck), Number("min_width", &c.min_width, ck),
                Number("max_width", &c.max_width, ck), Number("max_reach", &c.max_reach, ck),
                Number("max_step_up", &c.max_step_up, ck), Number("max_step_down", &c.max_step_down, ck),
                Number("tall_step_height", &c.tall_step_height, ck),
                Number("tall_step_max_length", &c.tall_step_max_length, ck),
                Number("tall_step_max_width", &c.tall_step_max_width, ck),
                Number("cliff_height", &c.cliff_height, ck), Number("cliff_clearance", &c.cliff_clearance, ck),
                Number("step_over_height", &c.step_over_height, ck),
                Number("body_box_width", &c.body_box_width, ck), Number("body_box_depth", &c.body_box_depth, ck),
                Number("body_box_bottom", &c.body_box_bottom, ck), Number("body_box_top", &c.body_box_top, ck)}});
  auto& k = p.cost;
  s.push_back({"cost",
               {Number("w_distance", &k.w_distance, "cost"), Number("w_height", &k.w_height, "cost"),
                Number("w_yaw", &k.w_yaw, "cost"), Number("w_area", &k.w_area, "cost"),
                Number("w_roll_pitch", &k.w_roll_pitch, "cost"), Number("cost_per_step", &k.cost_per_step, "cost"),
                Number("inflation", &k.inflation, "cost"), Number("final_turn_radius", &k.final_turn_radius, "cost"),
                Number("max_step_length_for_heuristic", &k.max_step_length_for_heuristic, "cost"),
                Number("nominal_stance_width", &k.nominal_stance_width, "cost")}});
  auto& w = p.wiggle;
  s.push_back({"wiggle",
               {Number("inset_distance", &w.inset_distance, "wiggle"),
                Number("max_translation", &w.max_translation, "wiggle"),
                Number("max_rotation", &w.max_rotation, "wiggle"),
                {"weights",
                 [&w](const ordered_json& j) {
                   if (!j.is_array() || j.size() != 3) throw ParamsError("wiggle.weights must be 3 numbers");
                   for (int i = 0; i < 3; ++i) w.weights[i] = ReadNumber(j[i], "wiggle.weights");
                 },
                 [&w] { return ordered_json{w.weights[0], w.weights[1], w.weights[2]}; }}}});
  s.push_back({"foot", {Polygon("sole", &p.foot.sole, "foot")}});
  s.push_back({"goal_tolerance",
               {Number("xy", &p.goal_tolerance.xy, "goal_tolerance"),
                Number("yaw", &p.goal_tolerance.yaw, "goal_tolerance")}});
  return s;
}

}  // namespace

PlannerParams LoadParams(std::string_view json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const ordered_json::parse_error& e) {
    throw ParamsError(std::string("parameters are not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParamsError("parameters must be a JSON object");
  PlannerParams params;
  const std::vector<Section> schema = Schema(params);
  for (const auto& [section_name, body] : doc.items()) {
    auto section = std::find_if(schema.begin(), schema.end(),
                                [&](const Section& s) { return section_name == s.name; });
    if (section == schema.end()) throw ParamsError("unknown parameter section \"" + section_name + "\"");
    if (!body.is_object()) throw ParamsError("section \"" + section_name + "\" must be an object");
    for (const auto& [key, value] : body.items()) {
      auto field = std::find_if(section->fields.begin(), section->fields.end(),
                                [&](const Field& f) { return key == f.name; });
      if (field == section->fields.end()) {
        throw ParamsError("unknown parameter \"" + section_name + "." + key + "\"");
      }
      field->read(value);
    }
  }
  try {
    params.Validate();
  } catch (const std::invalid_argument& e) {
    throw ParamsError(e.what());
  }
  return params;
}

PlannerParams LoadParamsFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParamsError("cannot open parameters file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return LoadParams(buffer.str());
}

std::string SaveParams(const PlannerParams& params) {
  PlannerParams copy = params;
  ordered_json doc = ordered_json::object();
  for (const Section& section : Schema(copy)) {
    ordered_json body = ordered_json::object();
    for (const Field& f : section.fields) body[f.name] = f.write();
    doc[section.name] = std::move(body);
  }
  return doc.dump(2) + "\n";
}

}  // namespace fsp
