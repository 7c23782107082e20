#include "lf/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

#include "lf/error.hpp"

namespace lf {

SimpleGraph::SimpleGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n) + 1, 0) {
  if (n < 0 || n > kMaxVertices) throw Error(ErrorCode::InvalidEmbedding, "vertex count out of range");
}

void SimpleGraph::check_vertex(VertexId v) const {
  if (v < 1 || v > n_) throw Error(ErrorCode::InvalidEmbedding, "vertex id " + std::to_string(v) + " out of range");
}

int SimpleGraph::edge_count() const {
  int total = 0;
  for (int v = 1; v <= n_; ++v) total += std::popcount(adj_[v]);
  return total / 2;
}

bool SimpleGraph::has_edge(VertexId a, VertexId b) const {
  check_vertex(a);
  check_vertex(b);
  return (adj_[a] >> b) & 1U;
}

void SimpleGraph::add_edge(VertexId a, VertexId b) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw Error(ErrorCode::InvalidEmbedding, "loops are not allowed");
  adj_[a] |= std::uint64_t{1} << b;
  adj_[b] |= std::uint64_t{1} << a;
}

void SimpleGraph::remove_edge(VertexId a, VertexId b) {
  check_vertex(a);
  check_vertex(b);
  adj_[a] &= ~(std::uint64_t{1} << b);
  adj_[b] &= ~(std::uint64_t{1} << a);
}

int SimpleGraph::degree(VertexId v) const {
  check_vertex(v);
  return std::popcount(adj_[v]);
}

std::vector<VertexId> SimpleGraph::neighbors(VertexId v) const {
  check_vertex(v);
  std::vector<VertexId> out;
  for (std::uint64_t m = adj_[v]; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  for (int u = 1; u <= n_; ++u) {
    for (std::uint64_t m = adj_[u] >> (u + 1); m; m &= m - 1) {
      out.emplace_back(u, u + 1 + std::countr_zero(m));
    }
  }
  return out;
}

// --- graph6 -----------------------------------------------------------------

SimpleGraph decode_graph6(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::MalformedGraph6, "empty string");
  for (char c : text) {
    if (c < 63 || c > 126) throw Error(ErrorCode::MalformedGraph6, "character out of range");
  }
  const int n = text[0] - 63;
  if (n > SimpleGraph::kMaxVertices) throw Error(ErrorCode::MalformedGraph6, "only n <= 62 supported");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() != 1 + bytes) throw Error(ErrorCode::MalformedGraph6, "length does not match vertex count");
  SimpleGraph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i + 1, j + 1);
    }
  }
  // Padding bits must be zero.
  for (; k < bytes * 6; ++k) {
    const int byte = text[1 + k / 6] - 63;
    if ((byte >> (5 - k % 6)) & 1) throw Error(ErrorCode::MalformedGraph6, "nonzero padding bit");
  }
  return g;
}

std::string encode_graph6(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0, used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i + 1, j + 1) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>(63 + (acc << (6 - used))));
  return out;
}

std::vector<SimpleGraph> read_graph6_lines(std::string_view text) {
  std::vector<SimpleGraph> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    if (line.empty() || line[0] == '#') continue;
    out.push_back(decode_graph6(line));
  }
  return out;
}

// --- queries ------------------------------------------------------------------

int min_degree(const SimpleGraph& g) {
  if (g.vertex_count() == 0) return 0;
  int best = g.vertex_count();
  for (int v = 1; v <= g.vertex_count(); ++v) best = std::min(best, g.degree(v));
  return best;
}

namespace {

void clique_search(const SimpleGraph& g, std::uint64_t candidates, int size, int& best) {
  if (candidates == 0) {
    best = std::max(best, size);
    return;
  }
  if (size + std::popcount(candidates) <= best) return;
  while (candidates) {
    if (size + std::popcount(candidates) <= best) return;
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    clique_search(g, candidates & g.neighbor_mask(v), size + 1, best);
  }
}

std::uint64_t all_vertices(int n) { return n == 0 ? 0 : (((std::uint64_t{1} << n) - 1) << 1); }

}  // namespace

int clique_number(const SimpleGraph& g) {
  int best = 0;
  clique_search(g, all_vertices(g.vertex_count()), 0, best);
  return best;
}

bool is_connected(const SimpleGraph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  std::uint64_t seen = std::uint64_t{1} << 1, frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t m = frontier; m; m &= m - 1) next |= g.neighbor_mask(std::countr_zero(m));
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all_vertices(n);
}

int betti(const SimpleGraph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "betti number needs a connected graph");
  return g.edge_count() - g.vertex_count() + 1;
}

// --- cycles -------------------------------------------------------------------

namespace {

// Visits k-cycles with smallest vertex first and v2 < vk, lexicographically.
// The visitor returns false to stop.
void visit_cycles(const SimpleGraph& g, int k, std::uint64_t allowed,
                  const std::function<bool(const Cycle&)>& visit) {
  const int n = g.vertex_count();
  if (k < 3 || k > n) return;
  Cycle path;
  bool stop = false;
  std::function<void(std::uint64_t)> extend = [&](std::uint64_t used) {
    const VertexId last = path.back();
    if (static_cast<int>(path.size()) == k) {
      if (g.has_edge(last, path.front()) && path[1] < last) stop = !visit(path);
      return;
    }
    for (std::uint64_t m = g.neighbor_mask(last) & allowed & ~used; m && !stop; m &= m - 1) {
      const VertexId w = std::countr_zero(m);
      if (w <= path.front()) continue;
      path.push_back(w);
      extend(used | (std::uint64_t{1} << w));
      path.pop_back();
    }
  };
  for (VertexId s = 1; s <= n && !stop; ++s) {
    if (!((allowed >> s) & 1)) continue;
    path = {s};
    extend(std::uint64_t{1} << s);
  }
}

}  // namespace

std::optional<Cycle> find_cycle(const SimpleGraph& g, int k) {
  std::optional<Cycle> found;
  visit_cycles(g, k, all_vertices(g.vertex_count()), [&](const Cycle& c) {
    found = c;
    return false;
  });
  return found;
}

std::vector<Cycle> all_cycles(const SimpleGraph& g, int k) {
  std::vector<Cycle> out;
  visit_cycles(g, k, all_vertices(g.vertex_count()), [&](const Cycle& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

std::optional<CyclePair> find_disjoint_4_3_cycles(const SimpleGraph& g) {
  const std::uint64_t everything = all_vertices(g.vertex_count());
  std::optional<CyclePair> found;
  visit_cycles(g, 4, everything, [&](const Cycle& four) {
    std::uint64_t rest = everything;
    for (VertexId v : four) rest &= ~(std::uint64_t{1} << v);
    visit_cycles(g, 3, rest, [&](const Cycle& three) {
      found = CyclePair{four, three};
      return false;
    });
    return !found;
  });
  return found;
}

// --- builders -----------------------------------------------------------------

SimpleGraph complete_graph(int n) {
  SimpleGraph g(n);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) g.add_edge(a, b);
  return g;
}

SimpleGraph complete_bipartite(int a, int b) {
  SimpleGraph g(a + b);
  for (int u = 1; u <= a; ++u)
    for (int w = a + 1; w <= a + b; ++w) g.add_edge(u, w);
  return g;
}

SimpleGraph cycle_graph(int n) {
  SimpleGraph g(n);
  for (int v = 1; v <= n; ++v) g.add_edge(v, v % n + 1);
  return g;
}

SimpleGraph path_graph(int n) {
  SimpleGraph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
  return g;
}

SimpleGraph parse_graph_name(std::string_view text) {
  if (text.size() >= 2 && text[0] == 'K' && std::isdigit(static_cast<unsigned char>(text[1]))) {
    const auto comma = text.find(',');
    try {
      if (comma == std::string_view::npos) return complete_graph(std::stoi(std::string(text.substr(1))));
      return complete_bipartite(std::stoi(std::string(text.substr(1, comma - 1))),
                                std::stoi(std::string(text.substr(comma + 1))));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "bad graph name '" + std::string(text) + "'");
    }
  }
  return decode_graph6(text);
}

// --- canonical labelling ------------------------------------------------------

namespace {

// Equitable colour refinement starting from degrees. Colour 0 is the
// "largest" class; colour names depend only on the isomorphism type.
std::vector<int> refined_colours(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> colour(n + 1, 0);
  for (int v = 1; v <= n; ++v) colour[v] = g.degree(v);
  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> sig(n + 1);
    for (int v = 1; v <= n; ++v) {
      sig[v].push_back(colour[v]);
      std::vector<int> nb;
      for (VertexId w : g.neighbors(v)) nb.push_back(colour[w]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::map<std::vector<int>, int, std::greater<>> rank;
    for (int v = 1; v <= n; ++v) rank.emplace(sig[v], 0);
    int r = 0;
    for (auto& [key, value] : rank) value = r++;
    for (int v = 1; v <= n; ++v) colour[v] = rank[sig[v]];
    // Colours now run 0..r-1 with 0 the largest signature; reuse as the
    // next round's base. Signatures compare the previous colour first, so
    // refinement never merges classes.
    if (r == classes) break;
    classes = r;
  }
  return colour;
}

struct CanonSearch {
  const SimpleGraph& g;
  std::vector<int> colour;
  std::vector<int> sorted_colours;
  int n;
  std::vector<VertexId> order;  // order[k] = original vertex at position k
  std::vector<VertexId> best;
  bool have_best = false;
  bool test_only = false;  // stop as soon as anything beats `best`
  bool beaten = false;

  std::uint64_t column(const std::vector<VertexId>& ord, std::size_t k) const {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < k; ++i) bits = (bits << 1) | (g.has_edge(ord[i], ord[k]) ? 1U : 0U);
    return bits;
  }

  // Compares columns 0..k of the current order against best.
  int compare_prefix(std::size_t k) const {
    for (std::size_t j = 1; j <= k; ++j) {
      const std::uint64_t c = column(order, j), b = column(best, j);
      if (c != b) return c < b ? -1 : 1;
    }
    return 0;
  }

  void dfs(std::size_t k, std::uint64_t used) {
    if (k == static_cast<std::size_t>(n)) {
      if (!have_best || compare_prefix(k - 1) > 0) {
        if (test_only) beaten = true;
        best = order;
        have_best = true;
      }
      return;
    }
    const int want = sorted_colours[k];
    for (VertexId v = 1; v <= n && !beaten; ++v) {
      if (((used >> v) & 1) || colour[v] != want) continue;
      order[k] = v;
      if (have_best) {
        const int c = compare_prefix(k);
        if (c < 0) continue;
        if (c > 0 && test_only) {
          beaten = true;
          return;
        }
      }
      dfs(k + 1, used | (std::uint64_t{1} << v));
    }
  }
};

CanonSearch make_search(const SimpleGraph& g) {
  CanonSearch s{g, refined_colours(g), {}, g.vertex_count(), std::vector<VertexId>(g.vertex_count()), {}};
  for (int v = 1; v <= s.n; ++v) s.sorted_colours.push_back(s.colour[v]);
  std::sort(s.sorted_colours.begin(), s.sorted_colours.end());
  return s;
}

}  // namespace

SimpleGraph canonical_form(const SimpleGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return g;
  CanonSearch s = make_search(g);
  s.dfs(0, 0);
  SimpleGraph out(n);
  std::vector<int> pos(n + 1);
  for (int k = 0; k < n; ++k) pos[s.best[k]] = k + 1;
  for (auto [a, b] : g.edges()) out.add_edge(pos[a], pos[b]);
  return out;
}

bool is_canonical(const SimpleGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  CanonSearch s = make_search(g);
  for (int v = 2; v <= n; ++v) {
    if (s.colour[v] < s.colour[v - 1]) return false;
  }
  s.best.resize(n);
  for (int k = 0; k < n; ++k) s.best[k] = k + 1;
  s.have_best = true;
  s.test_only = true;
  s.dfs(0, 0);
  return !s.beaten;
}

// --- enumeration --------------------------------------------------------------

GraphEnumerator::GraphEnumerator(int n, int min_deg, bool connected, bool reject_isomorphs)
    : n_(n), min_deg_(min_deg), connected_(connected), reject_(reject_isomorphs) {
  if (n < 0 || n > 8) throw Error(ErrorCode::InvalidEmbedding, "enumeration supports n <= 8");
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) slots_.emplace_back(i, j);
  end_ = std::uint64_t{1} << slots_.size();
}

std::optional<EnumeratedGraph> GraphEnumerator::next() {
  while (mask_ < end_) {
    const std::uint64_t mask = mask_++;
    std::vector<int> deg(n_ + 1, 0);
    for (std::uint64_t m = mask; m; m &= m - 1) {
      const Edge& e = slots_[std::countr_zero(m)];
      ++deg[e.first];
      ++deg[e.second];
    }
    bool ok = true;
    for (int v = 1; v <= n_ && ok; ++v) ok = deg[v] >= min_deg_;
    if (!ok) continue;
    SimpleGraph g(n_);
    for (std::uint64_t m = mask; m; m &= m - 1) {
      const Edge& e = slots_[std::countr_zero(m)];
      g.add_edge(e.first, e.second);
    }
    if (connected_ && !is_connected(g)) continue;
    const bool canonical = is_canonical(g);
    if (reject_ && !canonical) continue;
    return EnumeratedGraph{std::move(g), canonical};
  }
  return std::nullopt;
}

std::vector<SimpleGraph> enumerate_graphs(int n, int min_deg, bool connected) {
  std::vector<SimpleGraph> out;
  GraphEnumerator it(n, min_deg, connected);
  while (auto g = it.next()) out.push_back(std::move(g->graph));
  return out;
}

}  // namespace lf
