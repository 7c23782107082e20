#pragma once
// Small hand-made embeddings shared by the diagram, Wirtinger and svg tests.

#include "lf/embedding.hpp"

namespace scenes {

inline lf::LinearEmbedding make(int n, std::vector<lf::Vec3> pts, const std::vector<lf::Edge>& edges) {
  lf::SimpleGraph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  pts.insert(pts.begin(), lf::Vec3{});
  return lf::LinearEmbedding(g, pts);
}

// Triangle with abscissae 0 < 1 < 2, no crossings.
inline lf::LinearEmbedding triangle() {
  return make(3, {{0, 0, 0}, {1, 1, 0}, {2, -1, 0}}, {{1, 2}, {2, 3}, {1, 3}});
}

// Segment 1-2 passes under segment 3-4 at (5/4, 5/4).
inline lf::LinearEmbedding two_segments() {
  return make(4, {{0, 0, 0}, {2, 2, 0}, {lf::Rational(1, 2), 2, 1}, {lf::Rational(5, 2), 0, 1}}, {{1, 2}, {3, 4}});
}

// The same two chords closed up into the 4-cycle 1-2-4-3; descending along x.
inline lf::LinearEmbedding chord_cycle() {
  auto e = two_segments();
  e.graph.add_edge(2, 4);
  e.graph.add_edge(1, 3);
  return e;
}

// 4-cycle 1-2-3-4 over the same points; vertex 3 has no lower neighbour along x.
inline lf::LinearEmbedding bad_cycle() {
  auto e = two_segments();
  e.graph.add_edge(2, 3);
  e.graph.add_edge(1, 4);
  return e;
}

inline const lf::Vec3 kX{1, 0, 0};
inline const lf::Vec3 kY{0, 1, 0};

}  // namespace scenes
