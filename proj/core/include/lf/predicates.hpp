#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lf/rational.hpp"

namespace lf {

int sign_dot(const Vec3& l, const Vec3& u);
int orient2d(const Vec2& a, const Vec2& b, const Vec2& c);
int orient3d(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

struct CrossingParams {
  Rational t1, t2;
};

/// Interior-interior transversal intersection of two planar segments.
/// Returns nullopt when they are disjoint or touch only at an endpoint.
/// Throws Error(DegenerateOverlap) when they are collinear and share more
/// than a point.
std::optional<CrossingParams> segment_crossing_2d(const Vec2& a0, const Vec2& a1, const Vec2& b0,
                                                  const Vec2& b1);

/// True iff the open triangle (a,b,c) meets the closed segment [p,q].
/// Throws Error(DegenerateTriangle) if a, b, c are collinear.
bool triangle_interior_meets_segment(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& p,
                                     const Vec3& q);

/// True iff point p lies in the open triangle (a,b,c).
bool triangle_interior_contains(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& p);

/// Counterclockwise hull vertex indices, starting at the lexicographically
/// smallest point. Points on hull edges are not reported.
std::vector<std::size_t> convex_hull_2d(const std::vector<Vec2>& points);

bool collinear3d(const Vec3& a, const Vec3& b, const Vec3& c);

/// True iff p lies strictly between a and b on the segment [a,b].
bool in_open_segment(const Vec3& a, const Vec3& b, const Vec3& p);

/// True iff the closed segments [a0,a1] and [b0,b1] share a point.
bool segments_intersect_3d(const Vec3& a0, const Vec3& a1, const Vec3& b0, const Vec3& b1);

}  // namespace lf
