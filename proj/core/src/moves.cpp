#include "lf/moves.hpp"

#include "lf/error.hpp"
#include "lf/predicates.hpp"

namespace lf {

std::string describe(const MoveRecord& m) {
  auto edge = [](const Edge& e) { return std::to_string(e.first) + "-" + std::to_string(e.second); };
  std::string tri = std::to_string(m.triangle[0]) + "," + std::to_string(m.triangle[1]) + "," + std::to_string(m.triangle[2]);
  if (m.kind == MoveKind::Slide) return "slide " + edge(m.removed) + " -> " + edge(*m.added) + " across (" + tri + ")";
  return "detach " + edge(m.removed) + " across (" + tri + ")";
}

bool triangle_is_empty(const LinearEmbedding& e, VertexId a, VertexId b, VertexId c) {
  const Vec3 &pa = e.at(a), &pb = e.at(b), &pc = e.at(c);
  if (collinear3d(pa, pb, pc)) throw Error(ErrorCode::TriangleBlocked, "triangle is degenerate");
  for (int v = 1; v <= e.vertex_count(); ++v) {
    if (v == a || v == b || v == c) continue;
    if (triangle_interior_contains(pa, pb, pc, e.at(v))) return false;
  }
  for (auto [u, w] : e.graph.edges()) {
    if (triangle_interior_meets_segment(pa, pb, pc, e.at(u), e.at(w))) return false;
  }
  return true;
}

namespace {

void require_edge(const LinearEmbedding& e, VertexId a, VertexId b) {
  if (!e.graph.has_edge(a, b)) {
    throw Error(ErrorCode::MissingEdge, "edge " + std::to_string(a) + "-" + std::to_string(b) + " is not present");
  }
}

}  // namespace

std::pair<LinearEmbedding, MoveRecord> sliding_move(const LinearEmbedding& e, Edge moving, Edge along) {
  const auto [a, b] = moving;
  if (along.first != b) std::swap(along.first, along.second);
  if (along.first != b) throw Error(ErrorCode::MissingEdge, "sliding edge and guide edge do not share the moving end");
  const VertexId c = along.second;
  require_edge(e, a, b);
  require_edge(e, b, c);
  if (a == c || e.graph.has_edge(a, c)) {
    throw Error(ErrorCode::EdgeExists, "edge " + std::to_string(a) + "-" + std::to_string(c) + " already present");
  }
  if (!triangle_is_empty(e, a, b, c)) throw Error(ErrorCode::TriangleBlocked, "triangle meets the graph");
  LinearEmbedding out = e;
  out.graph.remove_edge(a, b);
  out.graph.add_edge(a, c);
  if (!validate_edge_position(out, make_edge(a, c)).ok()) {
    throw Error(ErrorCode::TriangleBlocked, "new edge is not in general position");
  }
  return {std::move(out), MoveRecord{MoveKind::Slide, {a, b, c}, make_edge(a, b), make_edge(a, c), 0}};
}

std::pair<LinearEmbedding, MoveRecord> detach_edge(const LinearEmbedding& e, Edge edge, VertexId apex) {
  const auto [a, b] = edge;
  require_edge(e, a, b);
  require_edge(e, a, apex);
  require_edge(e, b, apex);
  if (!triangle_is_empty(e, a, b, apex)) throw Error(ErrorCode::TriangleBlocked, "triangle meets the graph");
  LinearEmbedding out = e;
  out.graph.remove_edge(a, b);
  return {std::move(out), MoveRecord{MoveKind::Detach, {a, b, apex}, make_edge(a, b), std::nullopt, 1}};
}

}  // namespace lf
