#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lf {

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;  // stored with first < second

inline Edge make_edge(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Simple undirected graph on vertices 1..n, n <= 62.
class SimpleGraph {
 public:
  static constexpr int kMaxVertices = 62;

  SimpleGraph() = default;
  explicit SimpleGraph(int n);

  int vertex_count() const { return n_; }
  int edge_count() const;
  bool has_edge(VertexId a, VertexId b) const;
  void add_edge(VertexId a, VertexId b);
  void remove_edge(VertexId a, VertexId b);
  int degree(VertexId v) const;
  std::uint64_t neighbor_mask(VertexId v) const { return adj_[v]; }
  std::vector<VertexId> neighbors(VertexId v) const;
  /// Edges (u, w) with u < w in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  void check_vertex(VertexId v) const;

  int n_ = 0;
  std::vector<std::uint64_t> adj_{0};  // index 0 unused; bit w set in adj_[v] iff v~w
};

SimpleGraph decode_graph6(std::string_view text);
std::string encode_graph6(const SimpleGraph& g);

/// Reads graph6 lines, skipping blanks and '#' comments.
std::vector<SimpleGraph> read_graph6_lines(std::string_view text);

int min_degree(const SimpleGraph& g);
int clique_number(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);
/// |E| - |V| + 1. Throws Error(Disconnected).
int betti(const SimpleGraph& g);

using Cycle = std::vector<VertexId>;

/// Lexicographically least k-cycle (v1 the smallest vertex, v2 < vk).
std::optional<Cycle> find_cycle(const SimpleGraph& g, int k);
/// All k-cycles, each once, in lexicographic order.
std::vector<Cycle> all_cycles(const SimpleGraph& g, int k);

struct CyclePair {
  Cycle four;
  Cycle three;
};
std::optional<CyclePair> find_disjoint_4_3_cycles(const SimpleGraph& g);

SimpleGraph complete_graph(int n);
/// Colour classes are 1..a and a+1..a+b.
SimpleGraph complete_bipartite(int a, int b);
SimpleGraph cycle_graph(int n);
SimpleGraph path_graph(int n);

/// Accepts "K<n>", "K<a>,<b>" or a graph6 string.
SimpleGraph parse_graph_name(std::string_view text);

/// Relabelling by canonical adjacency code (degree-refined cells, maximal
/// column-major code). Two graphs are isomorphic iff their forms agree.
SimpleGraph canonical_form(const SimpleGraph& g);
bool is_canonical(const SimpleGraph& g);

struct EnumeratedGraph {
  SimpleGraph graph;
  bool canonical = true;  // false marks a duplicate of an earlier class
};

// Deterministic stream of labelled graphs on n vertices. With isomorph
// rejection on, exactly one representative per isomorphism class.
class GraphEnumerator {
 public:
  GraphEnumerator(int n, int min_deg, bool connected, bool reject_isomorphs = true);
  std::optional<EnumeratedGraph> next();

 private:
  int n_;
  int min_deg_;
  bool connected_;
  bool reject_;
  std::vector<Edge> slots_;
  std::uint64_t mask_ = 0;
  std::uint64_t end_;
};

std::vector<SimpleGraph> enumerate_graphs(int n, int min_deg, bool connected);

}  // namespace lf
