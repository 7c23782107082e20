#include "lf/analyzer.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "lf/error.hpp"

namespace lf {

std::string to_string(Status s) {
  switch (s) {
    case Status::Free: return "FREE";
    case Status::NonfreeEvidence: return "NONFREE_EVIDENCE";
    case Status::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

CertifiedScene certify_direction(const LinearEmbedding& e, const DirectionCertificate& cert, std::uint64_t seed) {
  CertifiedScene cs;
  cs.scene = project(e, cert.l, seed);
  cs.diagram = build_diagram(cs.scene);
  cs.presentation = build_presentation(cs.diagram);
  cs.tree = build_spanning_tree(cs.diagram);
  cs.certificate = eliminate(cs.presentation, cs.diagram, cs.tree);
  cs.abelian = abelianization(cs.presentation);
  const int b = betti(e.graph);
  if (cs.abelian.free_rank != b || !cs.abelian.torsion.empty()) {
    throw Error(ErrorCode::AssertionViolated, "abelianization does not match the betti number");
  }
  if (cs.certificate.rank != b) throw Error(ErrorCode::AssertionViolated, "reduction rank does not match the betti number");
  return cs;
}

namespace {

std::string vec(const Vec3& v) { return to_string(v); }

void fill_basics(AnalysisReport& rep, const LinearEmbedding& e) {
  rep.graph6 = encode_graph6(e.graph);
  rep.vertices = e.vertex_count();
  rep.edges = e.graph.edge_count();
  rep.betti = betti(e.graph);
}

void record_free(AnalysisReport& rep, const LinearEmbedding& e, const DirectionCertificate& cert) {
  CertifiedScene cs = certify_direction(e, cert, rep.options.seed);
  rep.status = Status::Free;
  rep.direction = cert;
  rep.frame = cs.scene.frame;
  rep.crossings = static_cast<int>(cs.scene.crossings.size());
  rep.diagram_nodes = cs.diagram.node_count();
  rep.generators = cs.presentation.generator_count;
  rep.certificate = std::move(cs.certificate);
  rep.abelian = std::move(cs.abelian);
  rep.argument.push_back("descending direction " + vec(cert.l) + ", lowest vertex " + std::to_string(cert.non_descendant));
  rep.argument.push_back("reduction of " + std::to_string(rep.generators) + " generators over " +
                         std::to_string(rep.diagram_nodes) + " nodes leaves a free group of rank " +
                         std::to_string(rep.certificate->rank));
  if (rep.free_factors > 0) {
    rep.argument.push_back("with " + std::to_string(rep.free_factors) + " detached factors the total rank is " +
                           std::to_string(rep.certificate->rank + rep.free_factors));
  }
}

LinearEmbedding prepare(const LinearEmbedding& e, const AnalyzeOptions& opt, AnalysisReport& rep) {
  if (!is_connected(e.graph)) throw Error(ErrorCode::InvalidEmbedding, "graph is disconnected");
  if (validate_general_position(e).ok()) return e;
  try {
    rep.perturbed = true;
    return perturb(e, opt.seed, Rational(1, 100));
  } catch (const Error&) {
    throw Error(ErrorCode::InvalidEmbedding, "embedding could not be put in general position");
  }
}

struct SearchState {
  LinearEmbedding e;
  std::vector<MoveRecord> moves;
};

// Every slide and detach applicable to e, in a fixed order.
std::vector<std::pair<LinearEmbedding, MoveRecord>> applicable_moves(const LinearEmbedding& e) {
  std::vector<std::pair<LinearEmbedding, MoveRecord>> out;
  const auto edges = e.graph.edges();
  for (auto [u, w] : edges) {
    for (auto [a, b] : {Edge{u, w}, Edge{w, u}}) {
      for (VertexId c : e.graph.neighbors(b)) {
        if (c == a || e.graph.has_edge(a, c)) continue;
        try {
          out.push_back(sliding_move(e, {a, b}, {b, c}));
        } catch (const Error&) {
        }
      }
    }
  }
  for (auto [a, b] : edges) {
    for (VertexId c = 1; c <= e.vertex_count(); ++c) {
      if (c == a || c == b || !e.graph.has_edge(a, c) || !e.graph.has_edge(b, c)) continue;
      try {
        out.push_back(detach_edge(e, {a, b}, c));
      } catch (const Error&) {
      }
    }
  }
  return out;
}

int count_detaches(const std::vector<MoveRecord>& moves) {
  return static_cast<int>(std::count_if(moves.begin(), moves.end(), [](const MoveRecord& m) { return m.kind == MoveKind::Detach; }));
}

bool move_search(const LinearEmbedding& e, const AnalyzeOptions& opt, AnalysisReport& rep) {
  std::deque<SearchState> queue{{e, {}}};
  std::set<std::string> seen{encode_graph6(e.graph)};
  int visited = 0;
  while (!queue.empty() && visited < opt.max_states) {
    SearchState s = std::move(queue.front());
    queue.pop_front();
    if (static_cast<int>(s.moves.size()) >= opt.max_slides) continue;
    for (auto& [next, rec] : applicable_moves(s.e)) {
      if (!seen.insert(encode_graph6(next.graph)).second) continue;
      if (++visited > opt.max_states) return false;
      std::vector<MoveRecord> moves = s.moves;
      moves.push_back(rec);
      if (auto cert = find_descending_direction(next)) {
        rep.moves = moves;
        rep.free_factors = count_detaches(moves);
        for (const auto& m : moves) rep.argument.push_back(describe(m));
        record_free(rep, next, *cert);
        return true;
      }
      queue.push_back({std::move(next), std::move(moves)});
    }
  }
  return false;
}

ColoringEvidence colour(const Diagram& d, std::string kind) {
  ColoringEvidence ev;
  ev.kind = std::move(kind);
  const ColoringSpace space = count_tricolorings(d);
  ev.arcs = d.arc_count;
  ev.crossings = d.crossing_count();
  ev.graph_nodes = d.graph_node_count();
  ev.dimension = space.dimension;
  ev.count = space.count;
  return ev;
}

void collect_evidence(const LinearEmbedding& start, const AnalyzeOptions& opt, AnalysisReport& rep) {
  // Split off every free factor that an empty triangle allows.
  LinearEmbedding e = start;
  bool progress = true;
  while (progress) {
    progress = false;
    for (auto [a, b] : e.graph.edges()) {
      for (VertexId c = 1; c <= e.vertex_count() && !progress; ++c) {
        if (c == a || c == b || !e.graph.has_edge(a, c) || !e.graph.has_edge(b, c)) continue;
        try {
          auto [next, rec] = detach_edge(e, {a, b}, c);
          e = std::move(next);
          rep.moves.push_back(rec);
          rep.argument.push_back(describe(rec));
          progress = true;
        } catch (const Error&) {
        }
      }
      if (progress) break;
    }
  }
  rep.free_factors = count_detaches(rep.moves);
  if (auto cert = find_descending_direction(e)) {
    record_free(rep, e, *cert);
    return;
  }
  rep.argument.push_back("no descending direction in any cell of the G-vector arrangement");

  const auto candidates = direction_candidates(e);
  const PlanarScene scene = project(e, candidates.front(), opt.seed);
  rep.frame = scene.frame;
  rep.crossings = static_cast<int>(scene.crossings.size());
  const Diagram full = build_diagram(scene);
  rep.diagram_nodes = full.node_count();
  rep.colorings.push_back(colour(full, "diagram"));

  Diagram d = full;
  std::vector<std::string> contracted;
  for (bool again = true; again;) {
    again = false;
    for (int k = 0; k < static_cast<int>(d.edges.size()); ++k) {
      const DiagramEdge& ed = d.edges[k];
      if (ed.tail == ed.head || d.nodes[ed.tail].kind != NodeKind::Graph || d.nodes[ed.head].kind != NodeKind::Graph) continue;
      contracted.push_back(ed.name + " (" + d.nodes[ed.head].name + " -> " + d.nodes[ed.tail].name + ")");
      d = contract_flat_edge(d, k);
      again = true;
      break;
    }
  }
  if (!contracted.empty()) {
    ColoringEvidence ev = colour(d, d.graph_node_count() == 1 ? "bouquet" : "contracted");
    ev.contractions = contracted;
    rep.colorings.push_back(std::move(ev));
  }

  // Knotted polygons need at least six sticks.
  int examined = 0;
  bool found_cycle = false;
  for (int k = 6; k <= e.vertex_count() && !found_cycle && examined < opt.max_cycles; ++k) {
    for (const auto& cyc : all_cycles(e.graph, k)) {
      if (examined++ >= opt.max_cycles) break;
      std::vector<Edge> cyc_edges;
      for (std::size_t i = 0; i < cyc.size(); ++i) cyc_edges.push_back(make_edge(cyc[i], cyc[(i + 1) % cyc.size()]));
      std::vector<VertexId> ids;
      const LinearEmbedding sub = edge_subembedding(e, cyc_edges, &ids);
      const Diagram cd = build_diagram(project_with_frame(sub, scene.frame.l, scene.frame.m));
      ColoringEvidence ev = colour(cd, "cycle");
      if (!(ev.count > 3)) continue;
      ev.cycle = cyc;
      rep.colorings.push_back(std::move(ev));
      found_cycle = true;
      break;
    }
  }

  bool colourable = false;
  for (const auto& ev : rep.colorings) {
    if (ev.count > 3) {
      colourable = true;
      std::string what = ev.kind;
      if (ev.kind == "cycle") {
        what += " (";
        for (std::size_t i = 0; i < ev.cycle.size(); ++i) what += (i ? " " : "") + std::to_string(ev.cycle[i]);
        what += ")";
      }
      rep.argument.push_back(what + " has " + ev.count.get_str() + " tricolorings, more than the 3 constant ones");
    }
  }
  rep.status = colourable ? Status::NonfreeEvidence : Status::Unknown;
}

}  // namespace

AnalysisReport analyze(const LinearEmbedding& input, const AnalyzeOptions& opt) {
  AnalysisReport rep;
  rep.options = opt;
  const LinearEmbedding e = prepare(input, opt, rep);
  fill_basics(rep, e);
  if (auto cert = find_descending_direction(e)) {
    record_free(rep, e, *cert);
    return rep;
  }
  if (move_search(e, opt, rep)) return rep;
  collect_evidence(e, opt, rep);
  return rep;
}

std::vector<int> bipartite_colours(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> colour(n + 1, -1);
  if (n == 0) return colour;
  colour[1] = 0;
  std::deque<VertexId> queue{1};
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(v)) {
      if (colour[w] < 0) {
        colour[w] = 1 - colour[v];
        queue.push_back(w);
      }
    }
  }
  for (int a = 1; a <= n; ++a) {
    if (colour[a] < 0) throw Error(ErrorCode::NotBipartite, "graph is disconnected");
    for (int b = a + 1; b <= n; ++b) {
      if (g.has_edge(a, b) != (colour[a] != colour[b])) throw Error(ErrorCode::NotBipartite, "graph is not complete bipartite");
    }
  }
  return colour;
}

AnalysisReport analyze_bipartite(const LinearEmbedding& input, const AnalyzeOptions& opt) {
  const std::vector<int> colour = bipartite_colours(input.graph);
  AnalysisReport rep;
  rep.options = opt;
  const LinearEmbedding e = prepare(input, opt, rep);
  fill_basics(rep, e);
  const int n = e.vertex_count();
  for (const Vec3& cell : direction_candidates(e)) {
    // Distinct heights keep the new edge of a case-2 slide generic too.
    const Vec3 l = separate_heights(e, cell, opt.seed);
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return dot(l, e.at(a)) < dot(l, e.at(b)); });
    if (n < 2) break;
    const VertexId v1 = order[0], v2 = order[1];
    if (colour[v1] != colour[v2]) {
      if (auto cert = is_descending(e, l)) {
        rep.bipartite_case = 1;
        record_free(rep, e, *cert);
        return rep;
      }
      continue;
    }
    if (n < 3 || colour[order[2]] == colour[v1]) continue;
    const VertexId v3 = order[2];
    try {
      auto [slid, rec] = sliding_move(e, {v1, v3}, {v3, v2});
      if (auto cert = is_descending(slid, l)) {
        rep.bipartite_case = 2;
        rep.moves.push_back(rec);
        rep.argument.push_back(describe(rec));
        record_free(rep, slid, *cert);
        return rep;
      }
    } catch (const Error& err) {
      if (err.code() != ErrorCode::TriangleBlocked) throw;
    }
  }
  AnalysisReport fallback = analyze(input, opt);
  return fallback;
}

// --- enumeration checks --------------------------------------------------------

EnumerationReport four_cycle_sweep(int n, int min_deg) {
  EnumerationReport rep;
  rep.n = n;
  rep.min_degree = min_deg;
  GraphEnumerator it(n, min_deg, true);
  while (auto g = it.next()) {
    ++rep.graphs;
    if (!find_cycle(g->graph, 4)) {
      ++rep.without_four_cycle;
      rep.counterexamples.push_back(encode_graph6(g->graph));
    }
    if (find_disjoint_4_3_cycles(g->graph)) ++rep.lemma3_applicable;
  }
  return rep;
}

namespace {

std::string cycle_text(const Cycle& c) {
  std::string s = "(";
  for (VertexId v : c) s += std::to_string(v);
  return s + ")";
}

}  // namespace

std::vector<SubcaseResult> subcase_checks() {
  const std::vector<Edge> square = {{1, 2}, {2, 3}, {3, 4}, {1, 4}};
  const std::vector<Edge> open_pairs = {{1, 3}, {1, 5}, {2, 4}, {2, 6}, {2, 7}, {3, 5}, {4, 5}, {5, 6}, {5, 7}};
  const std::vector<std::pair<std::string, std::vector<Edge>>> cases = {
      {"S1", {{1, 6}, {4, 6}, {3, 7}}},
      {"S2", {{1, 6}, {3, 6}, {4, 7}}},
      {"S3", {{1, 6}, {4, 7}}},
      {"S4", {{1, 6}, {3, 7}}},
  };
  std::vector<SubcaseResult> out;
  for (const auto& [name, cross] : cases) {
    SubcaseResult res;
    res.name = name;
    res.cross_edges = cross;
    for (unsigned mask = 0; mask < (1U << open_pairs.size()); ++mask) {
      SimpleGraph g(7);
      for (auto [a, b] : square) g.add_edge(a, b);
      for (auto [a, b] : cross) g.add_edge(a, b);
      for (std::size_t k = 0; k < open_pairs.size(); ++k)
        if (mask >> k & 1U) g.add_edge(open_pairs[k].first, open_pairs[k].second);
      if (min_degree(g) < 3 || !is_connected(g)) continue;
      bool attached = true;
      for (VertexId v : {5, 6, 7}) attached = attached && (g.has_edge(v, 1) || g.has_edge(v, 3) || g.has_edge(v, 4));
      if (!attached) continue;
      ++res.completions;
      if (!(g.has_edge(7, 2) && g.has_edge(7, 5) && !g.has_edge(7, 6))) res.seven_attached_to_2_and_5 = false;
      if (auto pair = find_disjoint_4_3_cycles(g)) {
        ++res.with_pair;
        res.pairs.push_back(encode_graph6(g) + " " + cycle_text(pair->four) + " " + cycle_text(pair->three));
      } else {
        res.pairs.push_back(encode_graph6(g) + " none");
      }
    }
    out.push_back(std::move(res));
  }
  return out;
}

void pipeline_trials(EnumerationReport& rep, int trials, std::uint64_t seed) {
  rep.trials = trials;
  if (trials <= 0) return;
  GraphEnumerator it(rep.n, rep.min_degree, true);
  std::uint64_t index = 0;
  while (auto g = it.next()) {
    ++index;
    for (int t = 0; t < trials; ++t) {
      const std::uint64_t s = seed * 1000003ULL + index * 1000ULL + static_cast<std::uint64_t>(t);
      ++rep.trial_runs;
      AnalyzeOptions opt;
      opt.seed = s;
      const AnalysisReport r = analyze(random_embedding(g->graph, s), opt);
      if (r.status == Status::Free) {
        ++rep.trial_free;
      } else {
        rep.trial_failures.push_back(encode_graph6(g->graph) + " seed " + std::to_string(s) + " " + to_string(r.status));
      }
    }
  }
}

EnumerationReport run_enumeration_checks(int n, int trials, std::uint64_t seed) {
  EnumerationReport rep = four_cycle_sweep(n, 3);
  rep.subcases = subcase_checks();
  pipeline_trials(rep, trials, seed);
  return rep;
}

}  // namespace lf
