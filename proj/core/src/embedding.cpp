#include "lf/embedding.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "lf/error.hpp"
#include "lf/predicates.hpp"

namespace lf {

LinearEmbedding::LinearEmbedding(SimpleGraph g, std::vector<Vec3> c) : graph(std::move(g)), coords(std::move(c)) {
  if (static_cast<int>(coords.size()) != graph.vertex_count() + 1) {
    throw Error(ErrorCode::InvalidEmbedding, "coordinate count does not match vertex count");
  }
}

std::string GeneralPositionReport::describe() const {
  std::ostringstream out;
  for (const auto& t : collinear_triples) out << "collinear " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  for (const auto& [a, b] : crossing_edges) {
    out << "edges " << a.first << a.second << " and " << b.first << b.second << " meet\n";
  }
  for (const auto& [v, e] : vertex_on_edge) out << "vertex " << v << " on edge " << e.first << e.second << '\n';
  for (const auto& [a, b] : coincident) out << "vertices " << a << " and " << b << " coincide\n";
  return out.str();
}

namespace {

bool edges_conflict(const LinearEmbedding& e, const Edge& p, const Edge& q) {
  const bool shared = p.first == q.first || p.first == q.second || p.second == q.first || p.second == q.second;
  if (shared) {
    // Adjacent edges meet beyond their common vertex only if they overlap.
    const VertexId common = (p.first == q.first || p.first == q.second) ? p.first : p.second;
    const VertexId a = p.first == common ? p.second : p.first;
    const VertexId b = q.first == common ? q.second : q.first;
    const Vec3 u = e.at(a) - e.at(common), w = e.at(b) - e.at(common);
    return cross(u, w).is_zero() && sgn(dot(u, w)) > 0;
  }
  return segments_intersect_3d(e.at(p.first), e.at(p.second), e.at(q.first), e.at(q.second));
}

void check_vertices_on(const LinearEmbedding& e, const Edge& ed, GeneralPositionReport& report) {
  for (int v = 1; v <= e.vertex_count(); ++v) {
    if (v == ed.first || v == ed.second) continue;
    if (in_open_segment(e.at(ed.first), e.at(ed.second), e.at(v))) report.vertex_on_edge.emplace_back(v, ed);
  }
}

}  // namespace

GeneralPositionReport validate_general_position(const LinearEmbedding& e) {
  GeneralPositionReport report;
  const int n = e.vertex_count();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (e.at(a) == e.at(b)) report.coincident.emplace_back(a, b);
  // Zero-length edges would make the remaining predicates degenerate.
  if (!report.coincident.empty()) return report;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        if (collinear3d(e.at(a), e.at(b), e.at(c))) report.collinear_triples.push_back({a, b, c});

  const auto edges = e.graph.edges();
  for (const auto& ed : edges) check_vertices_on(e, ed, report);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges_conflict(e, edges[i], edges[j])) report.crossing_edges.emplace_back(edges[i], edges[j]);
    }
  }
  return report;
}

GeneralPositionReport validate_edge_position(const LinearEmbedding& e, Edge edge) {
  GeneralPositionReport report;
  edge = make_edge(edge.first, edge.second);
  check_vertices_on(e, edge, report);
  for (const auto& other : e.graph.edges()) {
    if (other == edge) continue;
    if (edges_conflict(e, edge, other)) report.crossing_edges.emplace_back(edge, other);
  }
  return report;
}

namespace {

constexpr std::int64_t kPerturbSteps = (std::int64_t{1} << 20) - 1;

// Integer in [-steps, steps] from the raw engine output; spelled out so the
// mapping is the same on every standard library.
std::int64_t draw(std::mt19937_64& rng, std::int64_t steps) {
  const std::uint64_t span = static_cast<std::uint64_t>(2 * steps + 1);
  return static_cast<std::int64_t>(rng() % span) - steps;
}

}  // namespace

LinearEmbedding perturb(const LinearEmbedding& e, std::uint64_t seed, const Rational& bound, int max_attempts) {
  if (sgn(bound) == 0) {
    if (validate_general_position(e).ok()) return e;
    throw Error(ErrorCode::GiveUp, "zero perturbation bound on an embedding that is not in general position");
  }
  std::mt19937_64 rng(seed);
  const Rational unit = bound / Rational(kPerturbSteps + 1);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    LinearEmbedding out = e;
    for (int v = 1; v <= e.vertex_count(); ++v) {
      out.coords[v].x += unit * Rational(static_cast<long>(draw(rng, kPerturbSteps)));
      out.coords[v].y += unit * Rational(static_cast<long>(draw(rng, kPerturbSteps)));
      out.coords[v].z += unit * Rational(static_cast<long>(draw(rng, kPerturbSteps)));
    }
    if (validate_general_position(out).ok()) return out;
  }
  throw Error(ErrorCode::GiveUp, "perturbation did not reach general position");
}

LinearEmbedding random_embedding(const SimpleGraph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::int64_t range = 4 * std::max(g.vertex_count(), 2);
  std::vector<Vec3> coords(g.vertex_count() + 1);
  for (int v = 1; v <= g.vertex_count(); ++v) {
    coords[v] = {Rational(static_cast<long>(draw(rng, range))), Rational(static_cast<long>(draw(rng, range))),
                 Rational(static_cast<long>(draw(rng, range)))};
  }
  LinearEmbedding e(g, std::move(coords));
  if (validate_general_position(e).ok()) return e;
  return perturb(e, seed ^ 0x9e3779b97f4a7c15ULL, Rational(1, 2));
}

// --- text format --------------------------------------------------------------

LinearEmbedding parse_embedding(std::string_view text) {
  std::map<int, Vec3> verts;
  std::vector<std::pair<int, int>> edges;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "v") {
      int id;
      std::string x, y, z, extra;
      if (!(ls >> id >> x >> y >> z) || (ls >> extra)) fail("expected 'v <id> <x> <y> <z>'");
      if (id < 1 || id > SimpleGraph::kMaxVertices) fail("vertex id out of range");
      if (!verts.emplace(id, Vec3{parse_rational(x), parse_rational(y), parse_rational(z)}).second) {
        fail("duplicate vertex " + std::to_string(id));
      }
    } else if (tag == "e") {
      int a, b;
      std::string extra;
      if (!(ls >> a >> b) || (ls >> extra)) fail("expected 'e <u> <w>'");
      edges.emplace_back(a, b);
    } else {
      fail("unknown record '" + tag + "'");
    }
  }
  const int n = static_cast<int>(verts.size());
  if (n > 0 && verts.rbegin()->first != n) throw Error(ErrorCode::ParseError, "vertex ids must be 1..n");
  SimpleGraph g(n);
  std::vector<Vec3> coords(n + 1);
  for (auto& [id, p] : verts) coords[id] = p;
  for (auto [a, b] : edges) {
    if (a < 1 || a > n || b < 1 || b > n) throw Error(ErrorCode::ParseError, "edge references unknown vertex");
    if (a == b) throw Error(ErrorCode::ParseError, "loop edge");
    if (g.has_edge(a, b)) throw Error(ErrorCode::ParseError, "duplicate edge");
    g.add_edge(a, b);
  }
  return LinearEmbedding(std::move(g), std::move(coords));
}

std::string format_embedding(const LinearEmbedding& e) {
  std::ostringstream out;
  for (int v = 1; v <= e.vertex_count(); ++v) {
    out << "v " << v << ' ' << to_literal(e.at(v).x) << ' ' << to_literal(e.at(v).y) << ' '
        << to_literal(e.at(v).z) << '\n';
  }
  for (auto [a, b] : e.graph.edges()) out << "e " << a << ' ' << b << '\n';
  return out.str();
}

LinearEmbedding edge_subembedding(const LinearEmbedding& e, const std::vector<Edge>& edges,
                                  std::vector<VertexId>* original) {
  std::set<VertexId> used;
  for (auto [a, b] : edges) {
    used.insert(a);
    used.insert(b);
  }
  std::vector<VertexId> ids(1, 0);
  std::map<VertexId, VertexId> relabel;
  for (VertexId v : used) {
    relabel[v] = static_cast<VertexId>(ids.size());
    ids.push_back(v);
  }
  SimpleGraph g(static_cast<int>(used.size()));
  std::vector<Vec3> coords(ids.size());
  for (std::size_t k = 1; k < ids.size(); ++k) coords[k] = e.at(ids[k]);
  for (auto [a, b] : edges) {
    if (!e.graph.has_edge(a, b)) throw Error(ErrorCode::MissingEdge, "subembedding edge not in graph");
    g.add_edge(relabel[a], relabel[b]);
  }
  if (original) *original = ids;
  return LinearEmbedding(std::move(g), std::move(coords));
}

// --- projection -----------------------------------------------------------------

void require_generic(const LinearEmbedding& e, const Vec3& l) {
  if (l.is_zero()) throw Error(ErrorCode::NotGeneric, "zero direction");
  for (auto [a, b] : e.graph.edges()) {
    if (sign_dot(l, e.at(b) - e.at(a)) == 0) {
      throw Error(ErrorCode::NotGeneric, "direction orthogonal to edge " + std::to_string(a) + "-" + std::to_string(b));
    }
  }
}

namespace {

bool has_abscissa_tie(const LinearEmbedding& e, const Vec3& l) {
  std::vector<Rational> xs;
  for (int v = 1; v <= e.vertex_count(); ++v) xs.push_back(dot(l, e.at(v)));
  std::sort(xs.begin(), xs.end());
  return std::adjacent_find(xs.begin(), xs.end()) != xs.end();
}

std::vector<int> edge_signs(const LinearEmbedding& e, const Vec3& l) {
  std::vector<int> s;
  for (auto [a, b] : e.graph.edges()) s.push_back(sign_dot(l, e.at(b) - e.at(a)));
  return s;
}

Vec3 break_ties(const LinearEmbedding& e, const Vec3& l, std::mt19937_64& rng) {
  if (!has_abscissa_tie(e, l)) return l;
  const auto signs = edge_signs(e, l);
  for (int round = 0; round < 64; ++round) {
    Vec3 r{Rational(static_cast<long>(draw(rng, 7))), Rational(static_cast<long>(draw(rng, 7))),
           Rational(static_cast<long>(draw(rng, 7)))};
    if (r.is_zero()) continue;
    Rational delta = 1;
    for (int halving = 0; halving < 64; ++halving, delta /= 2) {
      const Vec3 cand = l + delta * r;
      if (edge_signs(e, cand) == signs && !has_abscissa_tie(e, cand)) return cand;
    }
  }
  throw Error(ErrorCode::FrameSearchExhausted, "could not separate vertex abscissae");
}

// Builds the scene or returns an explanation of the regularity failure.
std::optional<std::string> build_scene(const LinearEmbedding& e, const Vec3& l, const Vec3& m, bool strict,
                                       PlanarScene& out) {
  const Vec3 nvec = cross(l, m);
  if (nvec.is_zero()) return "frame covectors are parallel";
  const int n = e.vertex_count();
  PlanarScene s;
  s.frame = {l, m, nvec};
  s.vertex_ids.resize(n + 1);
  s.positions.resize(n + 1);
  for (int v = 1; v <= n; ++v) {
    s.vertex_ids[v] = v;
    s.positions[v] = {dot(l, e.at(v)), dot(m, e.at(v))};
  }
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      if (strict && s.positions[a].x == s.positions[b].x) return "two vertices share an abscissa";
      for (int c = b + 1; c <= n; ++c)
        if (orient2d(s.positions[a], s.positions[b], s.positions[c]) == 0) return "three projected vertices collinear";
    }
  for (auto [a, b] : e.graph.edges()) {
    s.edges.push_back(s.positions[a].x < s.positions[b].x ? Edge{a, b} : Edge{b, a});
  }
  s.edge_crossings.resize(s.edges.size());
  for (std::size_t i = 0; i < s.edges.size(); ++i) {
    for (std::size_t j = i + 1; j < s.edges.size(); ++j) {
      const Edge& p = s.edges[i];
      const Edge& q = s.edges[j];
      if (p.first == q.first || p.first == q.second || p.second == q.first || p.second == q.second) continue;
      std::optional<CrossingParams> hit;
      try {
        hit = segment_crossing_2d(s.positions[p.first], s.positions[p.second], s.positions[q.first],
                                  s.positions[q.second]);
      } catch (const Error&) {
        return "projected edges overlap";
      }
      if (!hit) continue;
      SceneCrossing c;
      c.edge_a = static_cast<int>(i);
      c.edge_b = static_cast<int>(j);
      c.t_a = hit->t1;
      c.t_b = hit->t2;
      c.point = s.positions[p.first] + c.t_a * (s.positions[p.second] - s.positions[p.first]);
      c.height_a = dot(nvec, e.at(p.first) + c.t_a * (e.at(p.second) - e.at(p.first)));
      c.height_b = dot(nvec, e.at(q.first) + c.t_b * (e.at(q.second) - e.at(q.first)));
      if (c.height_a == c.height_b) {
        throw Error(ErrorCode::RegularityViolated, "edges meet in space; embedding is not valid");
      }
      c.over = c.height_a > c.height_b ? c.edge_a : c.edge_b;
      s.crossings.push_back(std::move(c));
    }
  }
  for (std::size_t a = 0; a < s.crossings.size(); ++a)
    for (std::size_t b = a + 1; b < s.crossings.size(); ++b)
      if (s.crossings[a].point == s.crossings[b].point) return "triple point";
  if (strict) {
    std::vector<Rational> xs;
    for (int v = 1; v <= n; ++v) xs.push_back(s.positions[v].x);
    for (const auto& c : s.crossings) xs.push_back(c.point.x);
    std::sort(xs.begin(), xs.end());
    if (std::adjacent_find(xs.begin(), xs.end()) != xs.end()) return "abscissae of vertices and crossings not distinct";
  }
  for (std::size_t k = 0; k < s.crossings.size(); ++k) {
    s.edge_crossings[s.crossings[k].edge_a].push_back(static_cast<int>(k));
    s.edge_crossings[s.crossings[k].edge_b].push_back(static_cast<int>(k));
  }
  for (std::size_t i = 0; i < s.edges.size(); ++i) {
    auto& list = s.edge_crossings[i];
    auto param = [&](int k) -> const Rational& {
      return s.crossings[k].edge_a == static_cast<int>(i) ? s.crossings[k].t_a : s.crossings[k].t_b;
    };
    std::sort(list.begin(), list.end(), [&](int a, int b) { return param(a) < param(b); });
  }
  out = std::move(s);
  return std::nullopt;
}

}  // namespace

Vec3 separate_heights(const LinearEmbedding& e, const Vec3& l, std::uint64_t seed) {
  require_generic(e, l);
  std::mt19937_64 rng(seed);
  return break_ties(e, l, rng);
}

PlanarScene project(const LinearEmbedding& e, const Vec3& l, std::uint64_t seed, int max_attempts) {
  require_generic(e, l);
  std::mt19937_64 rng(seed);
  const Vec3 lx = break_ties(e, l, rng);
  PlanarScene scene;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Vec3 m{Rational(static_cast<long>(draw(rng, 16))), Rational(static_cast<long>(draw(rng, 16))),
           Rational(static_cast<long>(draw(rng, 16)))};
    if (cross(lx, m).is_zero()) continue;
    if (!build_scene(e, lx, m, true, scene)) return scene;
  }
  throw Error(ErrorCode::FrameSearchExhausted, "no regular projection frame found");
}

PlanarScene project_with_frame(const LinearEmbedding& e, const Vec3& l, const Vec3& m, bool strict) {
  PlanarScene scene;
  if (auto why = build_scene(e, l, m, strict, scene)) throw Error(ErrorCode::RegularityViolated, *why);
  return scene;
}

}  // namespace lf
