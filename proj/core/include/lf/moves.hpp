#pragma once

#include <array>
#include <optional>
#include <string>

#include "lf/embedding.hpp"

namespace lf {

enum class MoveKind { Slide, Detach };

struct MoveRecord {
  MoveKind kind;
  std::array<VertexId, 3> triangle;  // witness triangle, verified empty
  Edge removed;
  std::optional<Edge> added;         // slides only
  int factor_increment = 0;          // 1 for a detach, 0 for a slide
};

std::string describe(const MoveRecord& m);

/// True iff the open triangle (a,b,c) meets no vertex and no edge of e.
/// Throws TriangleBlocked if a, b, c are collinear.
bool triangle_is_empty(const LinearEmbedding& e, VertexId a, VertexId b, VertexId c);

/// Replaces edge (a,b) by (a,c) across the triangle abc; (b,c) must be an edge.
/// Throws MissingEdge, EdgeExists or TriangleBlocked.
std::pair<LinearEmbedding, MoveRecord> sliding_move(const LinearEmbedding& e, Edge moving, Edge along);

/// Removes edge (a,b) when (a,c) and (b,c) are edges and the triangle abc is
/// empty, splitting off one free factor. Throws MissingEdge or TriangleBlocked.
std::pair<LinearEmbedding, MoveRecord> detach_edge(const LinearEmbedding& e, Edge edge, VertexId apex);

}  // namespace lf
