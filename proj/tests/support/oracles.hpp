#pragma once
// Independent reference computations used by the unit and acceptance tests.
// None of these call into the library code they are used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "lf/diagram.hpp"
#include "lf/embedding.hpp"
#include "lf/wirtinger.hpp"

namespace oracle {

// Counts arc colourings by trying all 3^arcs assignments. A crossing needs
// 2*over = under_in + under_out mod 3; a graph node needs one colour on all
// of its arcs.
inline long brute_tricolorings(const lf::Diagram& d) {
  const int arcs = d.arc_count;
  std::vector<int> colour(arcs, 0);
  long total = 0;
  long states = 1;
  for (int i = 0; i < arcs; ++i) states *= 3;
  for (long s = 0; s < states; ++s) {
    long r = s;
    for (int i = 0; i < arcs; ++i) {
      colour[i] = static_cast<int>(r % 3);
      r /= 3;
    }
    bool ok = true;
    for (std::size_t k = 0; k < d.nodes.size() && ok; ++k) {
      const auto& node = d.nodes[k];
      if (node.kind == lf::NodeKind::Crossing) {
        const auto& c = node.crossing;
        const int over = colour[d.edges[c.over_in].arc];
        const int a = colour[d.edges[c.under_in].arc];
        const int b = colour[d.edges[c.under_out].arc];
        ok = (2 * over - a - b) % 3 == 0;
      } else {
        int first = -1;
        for (std::size_t e = 0; e < d.edges.size() && ok; ++e) {
          if (d.edges[e].tail != static_cast<int>(k) && d.edges[e].head != static_cast<int>(k)) continue;
          const int c = colour[d.edges[e].arc];
          if (first < 0) first = c;
          ok = c == first;
        }
      }
    }
    if (ok) ++total;
  }
  return total;
}

// Crossings of the projection (l.q, m.q), counted over pairs of edges without
// a common vertex by solving the 2x2 system directly.
inline int pairwise_crossings(const lf::LinearEmbedding& e, const lf::Vec3& l, const lf::Vec3& m) {
  const auto edges = e.graph.edges();
  auto img = [&](lf::VertexId v) { return std::pair<lf::Rational, lf::Rational>{dot(l, e.at(v)), dot(m, e.at(v))}; };
  int count = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto [a, b] = edges[i];
      const auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) continue;
      const auto [ax, ay] = img(a);
      const auto [bx, by] = img(b);
      const auto [cx, cy] = img(c);
      const auto [dx, dy] = img(d);
      // a + s(b-a) = c + t(d-c)
      const lf::Rational r1 = bx - ax, r2 = by - ay, q1 = dx - cx, q2 = dy - cy;
      const lf::Rational det = r1 * (-q2) - r2 * (-q1);
      if (det == 0) continue;
      const lf::Rational h1 = cx - ax, h2 = cy - ay;
      const lf::Rational s = (h1 * (-q2) - h2 * (-q1)) / det;
      const lf::Rational t = (r1 * h2 - r2 * h1) / det;
      if (s > 0 && s < 1 && t > 0 && t < 1) ++count;
    }
  }
  return count;
}

// Rank of an integer matrix over GF(p), p prime; p == 0 means over Q.
inline int rank_mod(std::vector<std::vector<mpz_class>> m, long p) {
  int rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::vector<mpq_class>> q(rows, std::vector<mpq_class>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      if (p == 0) {
        q[i][j] = m[i][j];
      } else {
        mpz_class r = m[i][j] % p;
        if (r < 0) r += p;
        q[i][j] = r;
      }
    }
  auto reduce = [&](mpq_class& x) {
    if (p == 0) return;
    // x is an integer mod p after every step because pivots are inverted mod p.
    mpz_class z = x.get_num() % p;
    if (z < 0) z += p;
    x = z;
  };
  for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows); ++col) {
    std::size_t piv = rank;
    while (piv < rows && q[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(q[piv], q[rank]);
    mpq_class inv;
    if (p == 0) {
      inv = 1 / q[rank][col];
    } else {
      mpz_class z;
      mpz_class a = q[rank][col].get_num();
      mpz_class mod = p;
      mpz_invert(z.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t());
      inv = z;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == static_cast<std::size_t>(rank) || q[r][col] == 0) continue;
      const mpq_class f = q[r][col] * inv;
      for (std::size_t c = col; c < cols; ++c) {
        q[r][c] -= f * q[rank][c];
        reduce(q[r][c]);
      }
    }
    ++rank;
  }
  return rank;
}

// Exponent-sum matrix of a presentation (relators x generators).
inline std::vector<std::vector<mpz_class>> exponent_matrix(const lf::Presentation& p) {
  std::vector<std::vector<mpz_class>> m(p.relators.size(), std::vector<mpz_class>(p.generator_count, 0));
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (const auto& letter : p.relators[r]) m[r][letter.gen] += letter.exp;
  return m;
}

// H1 is free of rank `expected` with no p-torsion for the small primes.
inline bool homology_is_free_of_rank(const lf::Presentation& p, int expected) {
  const auto m = exponent_matrix(p);
  const int r0 = rank_mod(m, 0);
  if (p.generator_count - r0 != expected) return false;
  for (long prime : {2L, 3L, 5L, 7L, 11L, 13L})
    if (rank_mod(m, prime) != r0) return false;
  return true;
}

// Number of labelled graphs on n vertices with the given minimum degree that
// are connected, by brute force over all edge subsets.
inline long long labelled_count(int n, int min_deg) {
  std::vector<std::pair<int, int>> slots;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  long long total = 0;
  const std::uint64_t end = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    std::vector<std::uint32_t> adj(n, 0);
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (mask >> k & 1) {
        adj[slots[k].first] |= 1u << slots[k].second;
        adj[slots[k].second] |= 1u << slots[k].first;
      }
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) ok = __builtin_popcount(adj[v]) >= min_deg;
    if (!ok) continue;
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint32_t next = 0;
      for (int v = 0; v < n; ++v)
        if (frontier >> v & 1) next |= adj[v];
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen == (1u << n) - 1) ++total;
  }
  return total;
}

// n! / |Aut(g)| by checking every permutation.
inline long long labelling_count(const lf::SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  long long automorphisms = 0, factorial = 1;
  for (int i = 2; i <= n; ++i) factorial *= i;
  const auto edges = g.edges();
  do {
    bool ok = true;
    for (auto [a, b] : edges) {
      if (!g.has_edge(perm[a - 1], perm[b - 1])) {
        ok = false;
        break;
      }
    }
    if (ok) ++automorphisms;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return factorial / automorphisms;
}

}  // namespace oracle
