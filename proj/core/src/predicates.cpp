#include "lf/predicates.hpp"

#include <algorithm>
#include <numeric>

#include "lf/error.hpp"

namespace lf {

int sign_dot(const Vec3& l, const Vec3& u) { return sgn(dot(l, u)); }

int orient2d(const Vec2& a, const Vec2& b, const Vec2& c) { return sgn(cross(b - a, c - a)); }

int orient3d(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  return sgn(determinant(b - a, c - a, d - a));
}

std::optional<CrossingParams> segment_crossing_2d(const Vec2& a0, const Vec2& a1, const Vec2& b0,
                                                  const Vec2& b1) {
  const Vec2 r = a1 - a0;
  const Vec2 s = b1 - b0;
  const Vec2 d = b0 - a0;
  const Rational denom = cross(r, s);
  if (sgn(denom) == 0) {
    if (sgn(cross(d, r)) != 0) return std::nullopt;  // parallel, distinct lines
    // Collinear: project onto r and compare intervals.
    const Rational rr = r.x * r.x + r.y * r.y;
    Rational s0 = (d.x * r.x + d.y * r.y) / rr;
    Rational s1 = ((b1 - a0).x * r.x + (b1 - a0).y * r.y) / rr;
    if (s0 > s1) std::swap(s0, s1);
    const Rational lo = std::max<Rational>(s0, Rational(0));
    const Rational hi = std::min<Rational>(s1, Rational(1));
    if (lo < hi) throw Error(ErrorCode::DegenerateOverlap, "collinear overlapping segments");
    return std::nullopt;
  }
  Rational t1 = cross(d, s) / denom;
  Rational t2 = cross(d, r) / denom;
  if (sgn(t1) <= 0 || t1 >= 1 || sgn(t2) <= 0 || t2 >= 1) return std::nullopt;
  return CrossingParams{std::move(t1), std::move(t2)};
}

bool collinear3d(const Vec3& a, const Vec3& b, const Vec3& c) {
  return cross(b - a, c - a).is_zero();
}

bool in_open_segment(const Vec3& a, const Vec3& b, const Vec3& p) {
  if (a == b || !collinear3d(a, b, p)) return false;
  const Vec3 ab = b - a;
  const Rational t = dot(p - a, ab) / dot(ab, ab);
  return sgn(t) > 0 && t < 1;
}

namespace {

bool in_closed_segment(const Vec3& a, const Vec3& b, const Vec3& p) {
  if (a == b) return p == a;
  if (!collinear3d(a, b, p)) return false;
  const Vec3 ab = b - a;
  const Rational t = dot(p - a, ab) / dot(ab, ab);
  return sgn(t) >= 0 && t <= 1;
}

}  // namespace

bool triangle_interior_contains(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& p) {
  const Vec3 nrm = cross(b - a, c - a);
  if (nrm.is_zero()) throw Error(ErrorCode::DegenerateTriangle, "collinear triangle");
  if (sgn(dot(nrm, p - a)) != 0) return false;
  // Coplanar: p is strictly inside iff each edge normal agrees with nrm.
  return sgn(dot(cross(b - a, p - a), nrm)) > 0 && sgn(dot(cross(c - b, p - b), nrm)) > 0 &&
         sgn(dot(cross(a - c, p - c), nrm)) > 0;
}

bool triangle_interior_meets_segment(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& p,
                                     const Vec3& q) {
  const Vec3 nrm = cross(b - a, c - a);
  if (nrm.is_zero()) throw Error(ErrorCode::DegenerateTriangle, "collinear triangle");
  const Rational hp = dot(nrm, p - a);
  const Rational hq = dot(nrm, q - a);
  const int sp = sgn(hp), sq = sgn(hq);
  if (sp != 0 || sq != 0) {
    if (sp == sq) return false;
    // Exactly one crossing point with the plane.
    const Rational t = hp / (hp - hq);
    const Vec3 x = p + t * (q - p);
    return triangle_interior_contains(a, b, c, x);
  }
  // Coplanar segment: clip the parameter range against the three open half-planes.
  Rational lo = 0, hi = 1;
  bool lo_open = false, hi_open = false;
  const Vec3 d = q - p;
  const std::pair<const Vec3*, const Vec3*> sides[3] = {{&a, &b}, {&b, &c}, {&c, &a}};
  for (const auto& [u, v] : sides) {
    // f(t) = dot(cross(v-u, p + t d - u), nrm) must be > 0
    const Rational f0 = dot(cross(*v - *u, p - *u), nrm);
    const Rational f1 = dot(cross(*v - *u, d), nrm);
    if (sgn(f1) == 0) {
      if (sgn(f0) <= 0) return false;
      continue;
    }
    const Rational root = -f0 / f1;
    if (sgn(f1) > 0) {
      if (root > lo || (root == lo && !lo_open)) {
        lo = root;
        lo_open = true;
      }
    } else {
      if (root < hi || (root == hi && !hi_open)) {
        hi = root;
        hi_open = true;
      }
    }
  }
  if (lo < hi) return true;
  return lo == hi && !lo_open && !hi_open;
}

std::vector<std::size_t> convex_hull_2d(const std::vector<Vec2>& points) {
  const std::size_t n = points.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
    const int c = cmp(points[i].x, points[j].x);
    if (c != 0) return c < 0;
    const int d = cmp(points[i].y, points[j].y);
    if (d != 0) return d < 0;
    return i < j;
  });
  // Drop exact duplicates, keeping the lowest index.
  idx.erase(std::unique(idx.begin(), idx.end(),
                        [&](std::size_t i, std::size_t j) { return points[i] == points[j]; }),
            idx.end());
  bool all_collinear = true;
  for (std::size_t k = 2; k < idx.size() && all_collinear; ++k) {
    if (orient2d(points[idx[0]], points[idx[1]], points[idx[k]]) != 0) all_collinear = false;
  }
  if (idx.size() < 3 || all_collinear) throw Error(ErrorCode::AllCollinear, "hull needs three non-collinear points");

  std::vector<std::size_t> hull(2 * idx.size());
  std::size_t k = 0;
  for (std::size_t i : idx) {
    while (k >= 2 && orient2d(points[hull[k - 2]], points[hull[k - 1]], points[i]) <= 0) --k;
    hull[k++] = i;
  }
  const std::size_t lower = k + 1;
  for (std::size_t j = idx.size() - 1; j-- > 0;) {
    const std::size_t i = idx[j];
    while (k >= lower && orient2d(points[hull[k - 2]], points[hull[k - 1]], points[i]) <= 0) --k;
    hull[k++] = i;
  }
  hull.resize(k - 1);
  return hull;
}

bool segments_intersect_3d(const Vec3& a0, const Vec3& a1, const Vec3& b0, const Vec3& b1) {
  const Vec3 r = a1 - a0;
  const Vec3 s = b1 - b0;
  const Vec3 d = b0 - a0;
  if (sgn(determinant(r, s, d)) != 0) return false;  // skew
  const Vec3 rs = cross(r, s);
  if (rs.is_zero()) {
    // Parallel: intersect only if collinear and overlapping.
    return in_closed_segment(a0, a1, b0) || in_closed_segment(a0, a1, b1) ||
           in_closed_segment(b0, b1, a0) || in_closed_segment(b0, b1, a1);
  }
  const Rational rr = dot(rs, rs);
  const Rational t = dot(cross(d, s), rs) / rr;
  const Rational u = dot(cross(d, r), rs) / rr;
  return sgn(t) >= 0 && t <= 1 && sgn(u) >= 0 && u <= 1;
}

}  // namespace lf
