#pragma once

namespace fsp::tol {

// Numerical tolerances shared by every module. Change them here only.

/// Slack for point-in-half-plane tests; boundary points count as inside.
inline constexpr double kBoundary = 1e-9;
/// Polygons (and clip results) with less area than this are degenerate.
inline constexpr double kMinArea = 1e-10;
/// Vertices closer than this to the line through their neighbours are dropped.
inline constexpr double kCollinear = 1e-9;
/// Orthonormality / determinant tolerance for rotation matrices.
inline constexpr double kOrthonormal = 1e-9;
/// Regions with |world normal z| at or below this cannot be stood on.
inline constexpr double kVerticalNormalZ = 1e-6;
/// Maximum interior overlap between two pieces of the same region.
inline constexpr double kPieceOverlapArea = 1e-8;
/// Highest-vertex snap candidates closer than this are ties.
inline constexpr double kSnapTie = 1e-6;
/// Separating-axis tests treat overlaps below this as touching, not colliding.
inline constexpr double kContact = 1e-9;

}  // namespace fsp::tol
