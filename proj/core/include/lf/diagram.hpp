#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lf/embedding.hpp"

namespace lf {

enum class NodeKind { Graph, Crossing };

// One end of a diagram edge: at_tail means the edge leaves the node here.
struct EdgeEnd {
  int edge;
  bool at_tail;
  friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
};

struct CrossingInfo {
  int over_in = -1, over_out = -1, under_in = -1, under_out = -1;
  int sign = 1;  // sign of cross(over direction, under direction)
};

struct DiagramNode {
  NodeKind kind = NodeKind::Graph;
  std::string name;
  VertexId vertex = 0;             // graph vertex id for graph nodes
  std::optional<Vec2> position;
  std::vector<EdgeEnd> rotation;   // counterclockwise, graph nodes only
  CrossingInfo crossing;           // crossing nodes only
};

struct DiagramEdge {
  std::string name;
  int tail = 0, head = 0;  // node indices
  int strand = -1;         // source edge of the scene, -1 for transcribed diagrams
  int arc = -1;
};

// Nodes are listed in increasing abscissa; edges of a scene-built diagram
// point left to right. Arcs are unions of edges joined through overpasses.
struct Diagram {
  std::vector<DiagramNode> nodes;
  std::vector<DiagramEdge> edges;
  int arc_count = 0;

  int node_count() const { return static_cast<int>(nodes.size()); }
  int crossing_count() const;
  int graph_node_count() const;
  /// Incident ends in counterclockwise order (crossings derive it from sign).
  std::vector<EdgeEnd> ends_at(int node) const;
  /// Recomputes arc ids; arcs are numbered by their first edge.
  void compute_arcs();
};

/// Throws Error(RegularityViolated) if the scene has shared abscissae or the
/// left-edge assertions fail.
Diagram build_diagram(const PlanarScene& scene);

/// Merges the endpoints of an edge joining two distinct graph nodes.
/// Throws EdgeHasCrossings if either end is a crossing node.
Diagram contract_flat_edge(const Diagram& d, int edge);

/// Parses the diagram text format:
///   vertex <name> [x y]
///   crossing <name> [x y] over <in> <out> under <in> <out> sign <+1|-1>
///   edge <name> <tail> <head>
///   rotation <vertex> <edge>:<out|in> ...
/// Node lines give the x-order. Without a rotation line a vertex lists its
/// edge ends in edge declaration order. Throws MalformedSpec or InvariantViolated.
Diagram diagram_from_spec(std::string_view text);
std::string diagram_to_spec(const Diagram& d);

/// Checks the structural invariants. Throws Error(InvariantViolated).
void validate_diagram(const Diagram& d);

int find_edge(const Diagram& d, std::string_view name);

}  // namespace lf
