#include "lf/report.hpp"

#include <cstdio>

#include "json.hpp"

namespace lf {

using nlohmann::json;

namespace {

json vec_json(const Vec3& v) { return json::array({to_literal(v.x), to_literal(v.y), to_literal(v.z)}); }

json edge_json(const Edge& e) { return json::array({e.first, e.second}); }

std::string move_kind(MoveKind k) { return k == MoveKind::Slide ? "slide" : "detach"; }

}  // namespace

std::string trace_digest(const FreeCertificate& cert) {
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  };
  for (const auto& step : cert.trace) {
    feed(step.node_name + ":x" + std::to_string(step.generator) + "=" + word_to_string(step.value) + ";" +
         std::to_string(step.w1_length) + "\n");
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string report_to_json(const AnalysisReport& r) {
  json j;
  j["status"] = to_string(r.status);
  j["graph"] = {{"graph6", r.graph6}, {"vertices", r.vertices}, {"edges", r.edges}, {"betti", r.betti}};
  j["options"] = {{"seed", r.options.seed},
                  {"max_slides", r.options.max_slides},
                  {"max_states", r.options.max_states},
                  {"max_cycles", r.options.max_cycles}};
  j["perturbed"] = r.perturbed;
  if (r.bipartite_case) j["bipartite_case"] = *r.bipartite_case;
  if (r.direction) {
    json witness = json::object();
    for (std::size_t v = 1; v < r.direction->witness.size(); ++v) {
      if (r.direction->witness[v] != 0) witness[std::to_string(v)] = r.direction->witness[v];
    }
    j["direction"] = {{"l", vec_json(r.direction->l)}, {"non_descendant", r.direction->non_descendant}, {"witness", witness}};
  }
  if (r.frame) j["frame"] = {{"l", vec_json(r.frame->l)}, {"m", vec_json(r.frame->m)}, {"n", vec_json(r.frame->n)}};
  j["diagram"] = {{"crossings", r.crossings}, {"nodes", r.diagram_nodes}, {"generators", r.generators}};
  if (r.certificate) {
    j["certificate"] = {{"rank", r.certificate->rank},
                        {"surviving_generators", r.certificate->surviving},
                        {"steps", r.certificate->trace.size()},
                        {"trace_digest", trace_digest(*r.certificate)}};
  }
  if (r.abelian) {
    json torsion = json::array();
    for (const auto& t : r.abelian->torsion) torsion.push_back(t.get_str());
    j["abelianization"] = {{"free_rank", r.abelian->free_rank}, {"torsion", torsion}};
  }
  json moves = json::array();
  for (const auto& m : r.moves) {
    json mj = {{"kind", move_kind(m.kind)},
               {"triangle", json::array({m.triangle[0], m.triangle[1], m.triangle[2]})},
               {"removed", edge_json(m.removed)},
               {"factor", m.factor_increment}};
    if (m.added) mj["added"] = edge_json(*m.added);
    moves.push_back(mj);
  }
  j["moves"] = moves;
  j["free_factors"] = r.free_factors;
  json colorings = json::array();
  for (const auto& c : r.colorings) {
    json cj = {{"kind", c.kind},
               {"arcs", c.arcs},
               {"crossings", c.crossings},
               {"graph_nodes", c.graph_nodes},
               {"dimension", c.dimension},
               {"count", c.count.get_str()}};
    if (!c.cycle.empty()) cj["cycle"] = c.cycle;
    if (!c.contractions.empty()) cj["contractions"] = c.contractions;
    colorings.push_back(cj);
  }
  j["colorings"] = colorings;
  j["argument"] = r.argument;
  return j.dump(2) + "\n";
}

std::string report_to_json(const EnumerationReport& r) {
  json j;
  j["n"] = r.n;
  j["min_degree"] = r.min_degree;
  j["graphs"] = r.graphs;
  j["without_four_cycle"] = r.without_four_cycle;
  j["counterexamples"] = r.counterexamples;
  j["disjoint_four_three"] = r.lemma3_applicable;
  json subs = json::array();
  for (const auto& s : r.subcases) {
    json cross = json::array();
    for (const auto& e : s.cross_edges) cross.push_back(edge_json(e));
    subs.push_back({{"name", s.name},
                    {"cross_edges", cross},
                    {"completions", s.completions},
                    {"with_pair", s.with_pair},
                    {"seven_attached_to_2_and_5", s.seven_attached_to_2_and_5},
                    {"pairs", s.pairs}});
  }
  j["subcases"] = subs;
  if (r.trials > 0) {
    j["trials"] = {{"per_graph", r.trials}, {"runs", r.trial_runs}, {"free", r.trial_free}, {"failures", r.trial_failures}};
  }
  return j.dump(2) + "\n";
}

}  // namespace lf
