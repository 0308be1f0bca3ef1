#include "fsp/toolkit/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

namespace fsp::toolkit {
namespace {

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  // Avoid "-0.0000" so identical geometry always prints identically.
  return std::string(buf) == "-0.0000" ? "0.0000" : buf;
}

// SVG y grows downward; world y grows upward.
std::string Pt(const Point2& p) { return Num(p.x) + "," + Num(-p.y); }

std::string HeightColor(double t) {
  t = std::clamp(t, 0.0, 1.0);
  const int r = static_cast<int>(std::lround(70 + 170 * t));
  const int g = static_cast<int>(std::lround(130 + 60 * (1.0 - t)));
  const int b = static_cast<int>(std::lround(200 - 150 * t));
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

std::string PolygonPoints(const ConvexPolygon2& poly) {
  std::string out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (i) out += ' ';
    out += Pt(poly[i]);
  }
  return out;
}

}  // namespace

std::string RenderSvg(const Environment& env, const PlannerResult* plan, const FootPolygon& foot,
                      const SvgAnnotations& annotations) {
  Point2 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  Point2 hi = -lo;
  double zlo = std::numeric_limits<double>::infinity();
  double zhi = -zlo;
  auto grow = [&](const Point2& p) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  };
  for (std::size_t i = 0; i < env.size(); ++i) {
    const Aabb3& b = env.bounds(i);
    grow({b.min.x(), b.min.y()});
    grow({b.max.x(), b.max.y()});
    zlo = std::min(zlo, b.min.z());
    zhi = std::max(zhi, b.max.z());
  }
  if (plan) {
    for (const PlannedStep& s : plan->steps) grow(s.snap.CenterXY());
  }
  if (annotations.start) grow(annotations.start->position());
  if (annotations.goal) grow(annotations.goal->position());
  if (!(lo.x <= hi.x)) {
    lo = {-1.0, -1.0};
    hi = {1.0, 1.0};
  }
  const double margin = 0.25;
  lo = lo - Point2{margin, margin};
  hi = hi + Point2{margin, margin};
  const double w = hi.x - lo.x;
  const double h = hi.y - lo.y;
  const double ppm = annotations.pixels_per_meter;

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + Num(lo.x) + " " + Num(-hi.y) + " " +
                    Num(w) + " " + Num(h) + "\" width=\"" + Num(w * ppm) + "\" height=\"" + Num(h * ppm) + "\">\n";
  svg += "<rect class=\"frame\" x=\"" + Num(lo.x) + "\" y=\"" + Num(-hi.y) + "\" width=\"" + Num(w) +
         "\" height=\"" + Num(h) + "\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"0.01\"/>\n";

  // Draw low regions first so higher ones stay visible.
  std::vector<std::size_t> order(env.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return env.bounds(a).max.z() < env.bounds(b).max.z(); });
  for (std::size_t i : order) {
    const PlanarRegion& region = env.regions()[i];
    std::string d;
    for (const auto& loop : env.projected_loops(i)) {
      for (std::size_t k = 0; k < loop.size(); ++k) d += (k ? " L" : "M") + Pt(loop[k]);
      d += " Z ";
    }
    if (!d.empty()) d.pop_back();
    const double t = zhi > zlo ? (env.bounds(i).max.z() - zlo) / (zhi - zlo) : 0.0;
    const bool vertical = !region.IsSnappable();
    svg += "<path class=\"region\" data-id=\"" + std::to_string(region.id()) + "\" d=\"" + d + "\" fill=\"" +
           (vertical ? std::string("none") : HeightColor(t)) + "\" stroke=\"" +
           (vertical ? std::string("#202020") : std::string("#404040")) + "\" stroke-width=\"" +
           (vertical ? "0.02" : "0.005") + "\"/>\n";
  }

  if (plan) {
    for (const PlannedStep& s : plan->steps) {
      const bool left = s.side == Side::kLeft;
      svg += std::string("<polygon class=\"foot ") + (left ? "left" : "right") + "\" points=\"" +
             PolygonPoints(ProjectedSole(s.snap, foot)) + "\" fill=\"none\" stroke=\"" +
             (left ? "#c02020" : "#208020") + "\" stroke-width=\"0.008\"/>\n";
    }
    for (const PlannedStep& s : plan->steps) {
      if (!s.snap.cropped_foothold) continue;
      std::vector<Point2> xy;
      for (const Point2& v : s.snap.cropped_foothold->vertices()) {
        const Eigen::Vector3d w3 = s.snap.foothold_pose.Apply(Eigen::Vector3d(v.x, v.y, 0.0));
        xy.push_back({w3.x(), w3.y()});
      }
      if (auto poly = ConvexPolygon2::TryFromVertices(std::move(xy))) {
        svg += "<polygon class=\"foothold\" points=\"" + PolygonPoints(*poly) +
               "\" fill=\"#f0c040\" fill-opacity=\"0.6\" stroke=\"none\"/>\n";
      }
    }
  }
  auto marker = [&](const char* cls, const Pose2& p, const char* color) {
    svg += std::string("<circle class=\"") + cls + "\" cx=\"" + Num(p.x) + "\" cy=\"" + Num(-p.y) +
           "\" r=\"0.05\" fill=\"" + color + "\"/>\n";
  };
  if (annotations.start) marker("start", *annotations.start, "#2040c0");
  if (annotations.goal) marker("goal", *annotations.goal, "#c02020");
  svg += "</svg>\n";
  return svg;
}

}  // namespace fsp::toolkit
