#include "lf/rational.hpp"

#include <cctype>
#include <vector>

#include "lf/error.hpp"

namespace lf {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return std::string(s);
}

int compare(const Rational& a, const Rational& b) { return cmp(a, b); }

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorCode::ParseError, "bad rational literal '" + std::string(text) + "'");
  }
  mpz_class n(strip_plus(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_literal(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::strong_ordering lexicographic(const Vec3& a, const Vec3& b) {
  for (auto [p, q] : {std::pair{&a.x, &b.x}, std::pair{&a.y, &b.y}, std::pair{&a.z, &b.z}}) {
    const int c = compare(*p, *q);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const Vec2& v) { return "(" + to_literal(v.x) + "," + to_literal(v.y) + ")"; }

std::string to_string(const Vec3& v) {
  return "(" + to_literal(v.x) + "," + to_literal(v.y) + "," + to_literal(v.z) + ")";
}

Vec3 parse_vec3(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    parts.push_back(text.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 3) throw Error(ErrorCode::ParseError, "expected dx,dy,dz in '" + std::string(text) + "'");
  return {parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2])};
}

}  // namespace lf
