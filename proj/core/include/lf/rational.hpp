#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace lf {

// Exact rational scalar. gmpxx keeps results canonical (gcd 1, positive
// denominator); values built from strings go through parse_rational.
using Rational = mpq_class;

/// Parses "p" or "p/q" (optional leading sign). Throws Error(ParseError).
Rational parse_rational(std::string_view text);

/// Canonical literal: "p" when the denominator is 1, "p/q" otherwise.
std::string to_literal(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

struct Vec2 {
  Rational x, y;

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(const Rational& s, const Vec2& a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
};

struct Vec3 {
  Rational x, y, z;

  friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
  friend Vec3 operator*(const Rational& s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
  friend bool operator==(const Vec3& a, const Vec3& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }

  bool is_zero() const { return sgn(x) == 0 && sgn(y) == 0 && sgn(z) == 0; }
};

inline Rational dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

inline Rational determinant(const Vec3& a, const Vec3& b, const Vec3& c) {
  return dot(a, cross(b, c));
}

/// Total order used wherever a deterministic ordering of vectors is needed.
std::strong_ordering lexicographic(const Vec3& a, const Vec3& b);

std::string to_string(const Vec2& v);
std::string to_string(const Vec3& v);

/// Parses "dx,dy,dz" with rational components.
Vec3 parse_vec3(std::string_view text);

}  // namespace lf
