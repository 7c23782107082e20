#include "lf/direction.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <type_traits>
#include <set>

#include "lf/error.hpp"
#include "lf/predicates.hpp"

namespace lf {

std::vector<VertexId> descendant_set(const LinearEmbedding& e, const Vec3& l) {
  require_generic(e, l);
  std::vector<VertexId> out;
  for (int v = 1; v <= e.vertex_count(); ++v) {
    for (VertexId w : e.graph.neighbors(v)) {
      if (sign_dot(l, e.at(w) - e.at(v)) < 0) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

std::optional<DirectionCertificate> is_descending(const LinearEmbedding& e, const Vec3& l) {
  require_generic(e, l);
  const int n = e.vertex_count();
  DirectionCertificate cert{l, 0, std::vector<VertexId>(n + 1, 0)};
  int free_count = 0;
  VertexId lowest = 0;
  for (int v = 1; v <= n; ++v) {
    if (lowest == 0 || dot(l, e.at(v)) < dot(l, e.at(lowest))) lowest = v;
    for (VertexId w : e.graph.neighbors(v)) {
      if (sign_dot(l, e.at(w) - e.at(v)) < 0) {
        cert.witness[v] = w;
        break;
      }
    }
    if (cert.witness[v] == 0) {
      ++free_count;
      cert.non_descendant = v;
    }
  }
  if (n > 0 && cert.witness[lowest] != 0) {
    throw Error(ErrorCode::AssertionViolated, "lowest vertex along l is a descendant");
  }
  if (free_count != 1) return std::nullopt;
  return cert;
}

bool verify_certificate(const LinearEmbedding& e, const DirectionCertificate& cert) {
  const int n = e.vertex_count();
  if (static_cast<int>(cert.witness.size()) != n + 1) return false;
  for (auto [a, b] : e.graph.edges()) {
    if (sign_dot(cert.l, e.at(b) - e.at(a)) == 0) return false;
  }
  int free_count = 0;
  for (int v = 1; v <= n; ++v) {
    const VertexId w = cert.witness[v];
    if (w == 0) {
      if (v != cert.non_descendant) return false;
      for (VertexId u : e.graph.neighbors(v))
        if (sign_dot(cert.l, e.at(u) - e.at(v)) < 0) return false;
      ++free_count;
    } else if (!e.graph.has_edge(v, w) || sign_dot(cert.l, e.at(w) - e.at(v)) >= 0) {
      return false;
    }
  }
  return free_count == 1;
}

Vec3 primitive(const Vec3& v) {
  mpz_class l = 1;
  for (const Rational* c : {&v.x, &v.y, &v.z}) l = lcm(l, c->get_den());
  const mpz_class x = Rational(v.x * l).get_num();
  const mpz_class y = Rational(v.y * l).get_num();
  const mpz_class z = Rational(v.z * l).get_num();
  mpz_class g = gcd(gcd(x, y), z);
  if (g == 0) return v;
  return {Rational(mpz_class(x / g)), Rational(mpz_class(y / g)), Rational(mpz_class(z / g))};
}

namespace {

// The arrangement search runs on primitive integer vectors: first in
// overflow-checked 128-bit arithmetic, then in GMP if anything overflows.
struct Overflow {};

struct Wide {
  __int128 v = 0;
  Wide() = default;
  Wide(long long x) : v(x) {}
  static Wide raw(__int128 x) {
    Wide w;
    w.v = x;
    return w;
  }
  friend Wide operator+(Wide a, Wide b) {
    __int128 r;
    if (__builtin_add_overflow(a.v, b.v, &r)) throw Overflow{};
    return raw(r);
  }
  friend Wide operator-(Wide a, Wide b) {
    __int128 r;
    if (__builtin_sub_overflow(a.v, b.v, &r)) throw Overflow{};
    return raw(r);
  }
  friend Wide operator*(Wide a, Wide b) {
    __int128 r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflow{};
    return raw(r);
  }
  Wide operator-() const { return Wide(0) - *this; }
  friend bool operator==(Wide a, Wide b) { return a.v == b.v; }
  friend bool operator<(Wide a, Wide b) { return a.v < b.v; }
};

int zsign(const Wide& a) { return a.v > 0 ? 1 : (a.v < 0 ? -1 : 0); }
int zsign(const mpz_class& a) { return sgn(a); }

Wide zgcd(Wide a, Wide b) {
  __int128 x = a.v < 0 ? -a.v : a.v, y = b.v < 0 ? -b.v : b.v;
  while (y != 0) {
    const __int128 t = x % y;
    x = y;
    y = t;
  }
  return Wide::raw(x);
}
mpz_class zgcd(const mpz_class& a, const mpz_class& b) { return gcd(a, b); }

Wide zdiv(Wide a, Wide g) { return Wide::raw(a.v / g.v); }
mpz_class zdiv(const mpz_class& a, const mpz_class& g) {
  mpz_class r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
  return r;
}

template <class Z>
Z from_mpz(const mpz_class& x) {
  if constexpr (std::is_same_v<Z, mpz_class>) {
    return x;
  } else {
    if (mpz_sizeinbase(x.get_mpz_t(), 2) > 120) throw Overflow{};
    mpz_class a = abs(x);
    const mpz_class hi = a >> 64;
    const mpz_class lo = a - (hi << 64);
    __int128 v = (static_cast<__int128>(hi.get_ui()) << 64) | static_cast<__int128>(lo.get_ui());
    return Wide::raw(x < 0 ? -v : v);
  }
}

mpz_class to_mpz(const mpz_class& x) { return x; }
mpz_class to_mpz(const Wide& x) {
  const bool neg = x.v < 0;
  const unsigned __int128 a = neg ? -static_cast<unsigned __int128>(x.v) : static_cast<unsigned __int128>(x.v);
  mpz_class hi(static_cast<unsigned long>(a >> 64)), lo(static_cast<unsigned long>(a & ~0ULL));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

template <class Z>
using ZVec = std::array<Z, 3>;
using IVec = ZVec<mpz_class>;

IVec to_ivec(const Vec3& v) {
  const Vec3 p = primitive(v);
  return {p.x.get_num(), p.y.get_num(), p.z.get_num()};
}

template <class Z>
Vec3 to_vec3(const ZVec<Z>& v) {
  return {Rational(to_mpz(v[0])), Rational(to_mpz(v[1])), Rational(to_mpz(v[2]))};
}

template <class Z>
int idot(const ZVec<Z>& a, const ZVec<Z>& b) {
  return zsign(Z(a[0] * b[0] + a[1] * b[1] + a[2] * b[2]));
}

template <class Z>
ZVec<Z> icross(const ZVec<Z>& a, const ZVec<Z>& b) {
  return {Z(a[1] * b[2] - a[2] * b[1]), Z(a[2] * b[0] - a[0] * b[2]), Z(a[0] * b[1] - a[1] * b[0])};
}

template <class Z>
ZVec<Z> ineg(const ZVec<Z>& a) {
  return {Z(-a[0]), Z(-a[1]), Z(-a[2])};
}

template <class Z>
ZVec<Z> iadd(const ZVec<Z>& a, const ZVec<Z>& b) {
  return {Z(a[0] + b[0]), Z(a[1] + b[1]), Z(a[2] + b[2])};
}

template <class Z>
ZVec<Z> iprimitive(ZVec<Z> v) {
  const Z g = zgcd(zgcd(v[0], v[1]), v[2]);
  if (zsign(g) != 0 && !(g == Z(1))) {
    for (auto& c : v) c = zdiv(c, g);
  }
  return v;
}

// Representative of the line spanned by v: primitive, first nonzero entry positive.
template <class Z>
ZVec<Z> line_key(const ZVec<Z>& v) {
  ZVec<Z> p = iprimitive(v);
  for (const auto& c : p) {
    if (zsign(c) != 0) {
      if (zsign(c) < 0) p = ineg(p);
      break;
    }
  }
  return p;
}

template <class Z>
std::vector<signed char> sign_vector(const std::vector<ZVec<Z>>& lines, const ZVec<Z>& d) {
  std::vector<signed char> s;
  s.reserve(lines.size());
  for (const auto& u : lines) s.push_back(static_cast<signed char>(idot(d, u)));
  return s;
}

struct LineSet {
  std::vector<IVec> lines;
  // Per edge (in edges() order): index into lines and +1/-1 for orientation.
  std::vector<std::pair<std::size_t, int>> edge_line;
};

LineSet edge_lines(const LinearEmbedding& e) {
  LineSet ls;
  std::map<IVec, std::size_t> index;
  for (auto [a, b] : e.graph.edges()) {
    const IVec raw = to_ivec(e.at(b) - e.at(a));
    const IVec u = line_key(raw);
    auto [it, fresh] = index.emplace(u, ls.lines.size());
    if (fresh) ls.lines.push_back(u);
    ls.edge_line.emplace_back(it->second, raw == u ? 1 : -1);
  }
  return ls;
}

// Feeds each candidate with a new sign vector to visit; stops when visit returns true.
template <class Z, class Visit>
void scan_candidates_in(const std::vector<IVec>& mpz_lines, Visit& visit) {
  std::vector<ZVec<Z>> lines;
  for (const auto& u : mpz_lines) lines.push_back({from_mpz<Z>(u[0]), from_mpz<Z>(u[1]), from_mpz<Z>(u[2])});

  std::set<std::vector<signed char>> seen;
  auto offer = [&](const ZVec<Z>& c) {
    auto sv = sign_vector(lines, c);
    if (!seen.insert(sv).second) return false;
    return visit(to_vec3(c), sv);
  };

  if (lines.empty()) {
    offer({Z(1), Z(0), Z(0)});
    return;
  }
  if (lines.size() == 1) {
    if (offer(lines[0])) return;
    offer(ineg(lines[0]));
    return;
  }
  std::set<ZVec<Z>> vertices;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const ZVec<Z> p = line_key(icross(lines[i], lines[j]));
      if (!vertices.insert(p).second) continue;

      // Tangent rays at p of every plane through p; sums of rays from two
      // different planes reach every sector around p.
      std::vector<std::size_t> through;
      for (std::size_t k = 0; k < lines.size(); ++k)
        if (idot(p, lines[k]) == 0) through.push_back(k);
      std::vector<std::pair<std::size_t, ZVec<Z>>> rays;
      for (std::size_t k : through) {
        const ZVec<Z> t = icross(p, lines[k]);
        rays.emplace_back(k, t);
        rays.emplace_back(k, ineg(t));
      }
      std::vector<ZVec<Z>> offsets;
      for (std::size_t a = 0; a < rays.size(); ++a) {
        for (std::size_t b = a + 1; b < rays.size(); ++b) {
          if (rays[a].first == rays[b].first) continue;
          const ZVec<Z> d = iadd(rays[a].second, rays[b].second);
          bool on_plane = false;
          for (std::size_t k : through) on_plane = on_plane || idot(d, lines[k]) == 0;
          if (!on_plane) offsets.push_back(d);
        }
      }
      for (int sgn_d : {1, -1}) {
        const ZVec<Z> base = sgn_d > 0 ? p : ineg(p);
        const auto base_signs = sign_vector(lines, base);
        for (const auto& d : offsets) {
          // cand = 2^h * base + d, i.e. base + 2^-h * d up to scale.
          ZVec<Z> scaled = base;
          for (int halving = 0; halving < 256; ++halving) {
            const ZVec<Z> cand = iadd(scaled, d);
            bool ok = true;
            for (std::size_t k = 0; k < lines.size() && ok; ++k) {
              const int sk = idot(cand, lines[k]);
              ok = base_signs[k] == 0 ? sk != 0 : sk == base_signs[k];
            }
            if (ok) {
              if (offer(iprimitive(cand))) return;
              break;
            }
            scaled = iadd(scaled, scaled);
          }
        }
      }
    }
  }
}

// Visit gets (candidate, sign vector over lines) and may be called again from
// the start if the 128-bit pass overflows, so it must be restartable.
template <class Visit>
void scan_candidates(const std::vector<IVec>& lines, Visit&& visit, const std::function<void()>& restart) {
  try {
    scan_candidates_in<Wide>(lines, visit);
    return;
  } catch (const Overflow&) {
    restart();
  }
  scan_candidates_in<mpz_class>(lines, visit);
}

}  // namespace

std::vector<Vec3> direction_candidates(const LinearEmbedding& e) {
  std::vector<Vec3> out;
  scan_candidates(
      edge_lines(e).lines,
      [&](const Vec3& c, const std::vector<signed char>&) {
        out.push_back(c);
        return false;
      },
      [&] { out.clear(); });
  return out;
}

std::optional<DirectionCertificate> find_descending_direction(const LinearEmbedding& e) {
  const LineSet ls = edge_lines(e);
  const auto edges = e.graph.edges();
  const int n = e.vertex_count();
  std::optional<DirectionCertificate> found;
  std::vector<char> descends(n + 1);
  auto visit = [&](const Vec3& c, const std::vector<signed char>& sv) {
    // Combinatorial screen from edge signs; the exact check builds the certificate.
    std::fill(descends.begin(), descends.end(), 0);
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const auto [line, orient] = ls.edge_line[k];
      descends[sv[line] * orient > 0 ? edges[k].second : edges[k].first] = 1;
    }
    if (std::count(descends.begin() + 1, descends.end(), 0) != 1) return false;
    found = is_descending(e, c);
    return found.has_value();
  };
  scan_candidates(ls.lines, visit, [] {});
  return found;
}

Vec3 solve_three_inequalities(const Vec3& u1, const Vec3& u2, const Vec3& u3) {
  const Rational det = determinant(u1, u2, u3);
  if (sgn(det) == 0) throw Error(ErrorCode::DependentVectors, "vectors are linearly dependent");
  const Vec3 sum = cross(u2, u3) + cross(u3, u1) + cross(u1, u2);
  return Rational(-1) / det * sum;
}

}  // namespace lf
