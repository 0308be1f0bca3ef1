#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "fsp/collision.hpp"
#include "fsp/toolkit/generators.hpp"
#include "fsp/world_model.hpp"

namespace fsp {
namespace {

using toolkit::HorizontalBox;

TEST(LoadEnvironment, SingleFlatRegion) {
  const Environment env = LoadEnvironment(R"({"regions": [{"id": 7, "translation": [0, 0, 0],
    "rotation": [1, 0, 0, 0, 1, 0, 0, 0, 1],
    "pieces": [[[-5, -5], [5, -5], [5, 5], [-5, 5]]]}]})");
  ASSERT_EQ(env.size(), 1u);
  EXPECT_EQ(env.regions()[0].id(), 7);
  EXPECT_TRUE(env.regions()[0].Normal().isApprox(Eigen::Vector3d::UnitZ()));
  EXPECT_NEAR(env.regions()[0].pieces()[0].Area(), 100.0, 1e-12);
}

TEST(LoadEnvironment, TwoVertexPieceRejected) {
  try {
    LoadEnvironment(R"({"regions": [{"id": 3, "translation": [0, 0, 0],
      "rotation": [1, 0, 0, 0, 1, 0, 0, 0, 1], "pieces": [[[0, 0], [1, 0]]]}]})");
    FAIL() << "expected a load error";
  } catch (const EnvironmentError& e) {
    EXPECT_NE(std::string(e.what()).find('3'), std::string::npos) << e.what();
  }
}

TEST(LoadEnvironment, NonOrthonormalRotationRejected) {
  EXPECT_THROW(LoadEnvironment(R"({"regions": [{"id": 1, "translation": [0, 0, 0],
      "rotation": [2, 0, 0, 0, 1, 0, 0, 0, 1], "pieces": [[[0, 0], [1, 0], [0, 1]]]}]})"),
               EnvironmentError);
}

TEST(LoadEnvironment, SchemaViolationsRejected) {
  EXPECT_THROW(LoadEnvironment("not json"), EnvironmentError);
  EXPECT_THROW(LoadEnvironment(R"({"regions": [{"translation": [0, 0, 0]}]})"), EnvironmentError);
  EXPECT_THROW(LoadEnvironment(R"({"regions": [{"id": 1, "translation": [0, 0],
      "rotation": [1, 0, 0, 0, 1, 0, 0, 0, 1], "pieces": [[[0, 0], [1, 0], [0, 1]]]}]})"),
               EnvironmentError);
}

TEST(Environment, DuplicateIdsRejected) {
  EXPECT_THROW(Environment({HorizontalBox(1, 0, 0, 1, 1, 0), HorizontalBox(1, 2, 2, 3, 3, 0)}), EnvironmentError);
}

TEST(PlanarRegion, OverlappingPiecesRejected) {
  EXPECT_THROW(PlanarRegion(0, RigidTransform3(),
                            {ConvexPolygon2::Box(0, 0, 1, 1), ConvexPolygon2::Box(0.5, 0, 1.5, 1)}),
               EnvironmentError);
}

TEST(SaveEnvironment, CinderFieldRoundTripsExactly) {
  const Environment env = toolkit::GenerateEnvironment(toolkit::EnvironmentKind::kCinderField, 4).env;
  const std::string text = SaveEnvironment(env);
  const Environment back = LoadEnvironment(text);
  ASSERT_EQ(back.size(), env.size());
  for (std::size_t i = 0; i < env.size(); ++i) {
    const PlanarRegion& a = env.regions()[i];
    const PlanarRegion& b = back.regions()[i];
    EXPECT_EQ(a.id(), b.id());
    EXPECT_EQ(a.transform_to_world().rotation(), b.transform_to_world().rotation());
    EXPECT_EQ(a.transform_to_world().translation(), b.transform_to_world().translation());
    ASSERT_EQ(a.pieces().size(), b.pieces().size());
    for (std::size_t k = 0; k < a.pieces().size(); ++k) EXPECT_EQ(a.pieces()[k], b.pieces()[k]);
  }
  EXPECT_EQ(SaveEnvironment(back), text);
}

TEST(Environment, BoundsContainEveryWorldVertex) {
  const Environment env = toolkit::GenerateEnvironment(toolkit::EnvironmentKind::kCinderField, 2).env;
  for (std::size_t i = 0; i < env.size(); ++i) {
    const auto& box = env.bounds(i);
    for (const ConvexPolygon2& piece : env.regions()[i].pieces()) {
      for (const Point2& v : piece.vertices()) {
        const Eigen::Vector3d w = env.regions()[i].ToWorld(v);
        EXPECT_TRUE((w.array() >= box.min.array() - 1e-12).all() && (w.array() <= box.max.array() + 1e-12).all());
      }
    }
  }
}

TEST(RegionsOverlappingDisc, FarDiscIsEmpty) {
  const Environment env({HorizontalBox(0, 0, 0, 1, 1, 0), HorizontalBox(1, 2, 0, 3, 1, 0.2)});
  EXPECT_TRUE(env.RegionsOverlappingDisc({10, 10}, 0.5).empty());
}

TEST(RegionsOverlappingDisc, DiscOnRegionFindsIt) {
  const Environment env({HorizontalBox(0, 0, 0, 1, 1, 0), HorizontalBox(1, 2, 0, 3, 1, 0.2)});
  const auto ids = env.RegionsOverlappingDisc({2.5, 0.5}, 0.1);
  EXPECT_EQ(ids, std::vector<int>{1});
}

TEST(RegionsOverlappingDisc, MatchesBruteForce) {
  const Environment env = toolkit::GenerateEnvironment(toolkit::EnvironmentKind::kCinderField, 9).env;
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> x(-0.5, 3.5);
  std::uniform_real_distribution<double> y(-1.2, 1.2);
  std::uniform_real_distribution<double> r(0.01, 0.4);
  for (int trial = 0; trial < 100; ++trial) {
    const Point2 c{x(rng), y(rng)};
    const double radius = r(rng);
    std::vector<int> expected;
    for (std::size_t i = 0; i < env.size(); ++i) {
      bool hit = false;
      for (const auto& loop : env.projected_loops(i)) hit = hit || DistanceToLoop(c, loop) <= radius;
      if (hit) expected.push_back(env.regions()[i].id());
    }
    auto got = env.RegionsOverlappingDisc(c, radius);
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(got, expected);
  }
}

TEST(PlaneHeightAt, FlatRegionConstant) {
  const PlanarRegion r = HorizontalBox(0, 0, 0, 1, 1, 0.3);
  EXPECT_NEAR(*r.PlaneHeightAt(0.2, 0.7), 0.3, 1e-12);
  EXPECT_NEAR(*r.PlaneHeightAt(-40, 12), 0.3, 1e-12);
}

TEST(PlaneHeightAt, VerticalWallUndefined) {
  const PlanarRegion wall = toolkit::VerticalFace(0, {0, 0}, {1, 0}, 0.0, 1.0);
  EXPECT_FALSE(wall.PlaneHeightAt(0.5, 0.0).has_value());
  EXPECT_FALSE(wall.IsSnappable());
}

TEST(PlaneHeightAt, PitchedPlaneMatchesPlaneEquation) {
  const double pitch = DegToRad(10.0);
  const Eigen::Vector3d origin(0.5, -0.2, 0.1);
  const PlanarRegion r(0, RigidTransform3(RotationY(pitch), origin), {ConvexPolygon2::Box(-1, -1, 1, 1)});
  const Eigen::Vector3d n = r.Normal();
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 100; ++i) {
    const double x = u(rng);
    const double y = u(rng);
    // n . (p - origin) = 0 solved for z.
    const double z = origin.z() - (n.x() * (x - origin.x()) + n.y() * (y - origin.y())) / n.z();
    EXPECT_NEAR(*r.PlaneHeightAt(x, y), z, 1e-12);
  }
}

TEST(PlaneHeightAt, IsAffine) {
  const PlanarRegion r(0, RigidTransform3(RotationZ(0.4) * RotationY(0.3) * RotationX(-0.2), {1, 2, 3}),
                       {ConvexPolygon2::Box(-1, -1, 1, 1)});
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  const double h0 = *r.PlaneHeightAt(0, 0);
  for (int i = 0; i < 100; ++i) {
    const Point2 a{u(rng), u(rng)};
    const Point2 b{u(rng), u(rng)};
    EXPECT_NEAR(*r.PlaneHeightAt(a.x, a.y) + *r.PlaneHeightAt(b.x, b.y), *r.PlaneHeightAt(a.x + b.x, a.y + b.y) + h0,
                1e-9);
  }
}

TEST(PlanarRegion, WorldRoundTripIsIdentity) {
  const PlanarRegion r(0, RigidTransform3(RotationZ(1.1) * RotationX(0.6), {-1, 0.5, 2}),
                       {ConvexPolygon2::Box(-0.5, -0.5, 0.5, 0.5)});
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  for (int i = 0; i < 100; ++i) {
    const Point2 p{u(rng), u(rng)};
    const Eigen::Vector3d back = r.ToLocal(r.ToWorld(p));
    EXPECT_NEAR(back.x(), p.x, 1e-9);
    EXPECT_NEAR(back.y(), p.y, 1e-9);
    EXPECT_NEAR(back.z(), 0.0, 1e-9);
  }
}

// Collision primitives live alongside the world model.
TEST(Collision, BoxThroughWallIntersects) {
  const PlanarRegion wall = toolkit::VerticalFace(0, {0, -1}, {0, 1}, 0.0, 2.0);
  Environment env({wall});
  OrientedBox3 box;
  box.center = {0.0, 0.0, 1.0};
  box.half_extents = {0.2, 0.3, 0.5};
  EXPECT_TRUE(Intersects(box, env.world_pieces(0)[0]));
  box.center.x() = 0.25;
  EXPECT_FALSE(Intersects(box, env.world_pieces(0)[0]));
  box.center.x() = 0.2;  // face touching the wall only
  EXPECT_FALSE(Intersects(box, env.world_pieces(0)[0]));
}

TEST(Collision, PolygonDistanceOfSeparatedSquares) {
  EXPECT_NEAR(PolygonDistance(ConvexPolygon2::Box(0, 0, 1, 1), ConvexPolygon2::Box(1.5, 0, 2, 1)), 0.5, 1e-12);
  EXPECT_NEAR(PolygonDistance(ConvexPolygon2::Box(0, 0, 1, 1), ConvexPolygon2::Box(0.5, 0.5, 2, 2)), 0.0, 1e-12);
  EXPECT_NEAR(PolygonDistance(ConvexPolygon2::Box(0, 0, 1, 1), ConvexPolygon2::Box(2, 2, 3, 3)), std::sqrt(2.0),
              1e-12);
}

}  // namespace
}  // namespace fsp
