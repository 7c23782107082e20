#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lf/graph.hpp"
#include "lf/rational.hpp"

namespace lf {

struct LinearEmbedding {
  SimpleGraph graph;
  std::vector<Vec3> coords;  // coords[v] for v in 1..n; coords[0] unused

  LinearEmbedding() : coords(1) {}
  LinearEmbedding(SimpleGraph g, std::vector<Vec3> c);

  const Vec3& at(VertexId v) const { return coords[v]; }
  int vertex_count() const { return graph.vertex_count(); }

  friend bool operator==(const LinearEmbedding&, const LinearEmbedding&) = default;
};

struct GeneralPositionReport {
  std::vector<std::array<VertexId, 3>> collinear_triples;
  std::vector<std::pair<Edge, Edge>> crossing_edges;
  std::vector<std::pair<VertexId, Edge>> vertex_on_edge;
  std::vector<Edge> coincident;  // pairs of vertices at the same point

  bool ok() const {
    return collinear_triples.empty() && crossing_edges.empty() && vertex_on_edge.empty() && coincident.empty();
  }
  std::string describe() const;
};

GeneralPositionReport validate_general_position(const LinearEmbedding& e);
/// Checks a single edge against the vertices and the other edges of e; the
/// vertices themselves are assumed to be in general position already.
GeneralPositionReport validate_edge_position(const LinearEmbedding& e, Edge edge);

/// Moves every coordinate by less than `bound` until the result is in general
/// position. Deterministic in `seed`. bound == 0 returns `e` if it is already
/// valid. Throws Error(GiveUp) after `max_attempts` failed draws.
LinearEmbedding perturb(const LinearEmbedding& e, std::uint64_t seed, const Rational& bound,
                        int max_attempts = 64);

/// Integer coordinates drawn from a range that grows with n, perturbed if needed.
LinearEmbedding random_embedding(const SimpleGraph& g, std::uint64_t seed);

LinearEmbedding parse_embedding(std::string_view text);
std::string format_embedding(const LinearEmbedding& e);

/// Embedding of the subgraph spanned by `edges`, vertices relabelled 1..k in
/// increasing original order. `original` receives the old ids (index 0 unused).
LinearEmbedding edge_subembedding(const LinearEmbedding& e, const std::vector<Edge>& edges,
                                  std::vector<VertexId>* original = nullptr);

struct ProjectionFrame {
  Vec3 l, m, n;  // image (l.q, m.q), height n.q, n = l x m
};

struct SceneCrossing {
  int edge_a, edge_b;        // indices into PlanarScene::edges
  Rational t_a, t_b;         // parameters along the tail->head orientation
  Vec2 point;
  Rational height_a, height_b;
  int over;                  // edge_a or edge_b
  int under() const { return over == edge_a ? edge_b : edge_a; }
};

struct PlanarScene {
  ProjectionFrame frame;
  std::vector<VertexId> vertex_ids;  // original ids, index 0 unused
  std::vector<Vec2> positions;       // per vertex id
  std::vector<Edge> edges;           // oriented: first has the smaller abscissa
  std::vector<SceneCrossing> crossings;
  std::vector<std::vector<int>> edge_crossings;  // per edge, crossing indices by increasing t

  int vertex_count() const { return static_cast<int>(positions.size()) - 1; }
};

/// Throws Error(NotGeneric) unless l is orthogonal to no G-vector.
void require_generic(const LinearEmbedding& e, const Vec3& l);

/// Moves l inside its cell of the G-vector arrangement until no two vertices
/// share a height. Returns l unchanged when there is no tie. Throws
/// FrameSearchExhausted.
Vec3 separate_heights(const LinearEmbedding& e, const Vec3& l, std::uint64_t seed = 0);

/// Regular projection for direction l. When two non-adjacent vertices share
/// an abscissa, l is nudged inside its cell of the G-vector arrangement, so
/// the descendant pattern is unchanged. Throws NotGeneric or
/// FrameSearchExhausted.
PlanarScene project(const LinearEmbedding& e, const Vec3& l, std::uint64_t seed = 0,
                    int max_attempts = 256);

/// Projection for a fixed frame (n is recomputed as l x m). Throws
/// RegularityViolated if the frame is not regular for e. With strict off,
/// shared abscissae are tolerated; such scenes cannot be turned into diagrams.
PlanarScene project_with_frame(const LinearEmbedding& e, const Vec3& l, const Vec3& m, bool strict = true);

}  // namespace lf
