#include "lf/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "lf/error.hpp"

namespace lf {

int Diagram::crossing_count() const {
  return static_cast<int>(std::count_if(nodes.begin(), nodes.end(),
                                        [](const DiagramNode& n) { return n.kind == NodeKind::Crossing; }));
}

int Diagram::graph_node_count() const { return node_count() - crossing_count(); }

std::vector<EdgeEnd> Diagram::ends_at(int node) const {
  const DiagramNode& n = nodes[node];
  if (n.kind == NodeKind::Graph) return n.rotation;
  const CrossingInfo& c = n.crossing;
  if (c.sign > 0) return {{c.under_out, true}, {c.over_in, false}, {c.under_in, false}, {c.over_out, true}};
  return {{c.under_out, true}, {c.over_out, true}, {c.under_in, false}, {c.over_in, false}};
}

void Diagram::compute_arcs() {
  std::vector<int> parent(edges.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& n : nodes) {
    if (n.kind != NodeKind::Crossing) continue;
    const int a = find(n.crossing.over_in), b = find(n.crossing.over_out);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<int, int> ids;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const int root = find(static_cast<int>(e));
    auto it = ids.try_emplace(root, static_cast<int>(ids.size())).first;
    edges[e].arc = it->second;
  }
  arc_count = static_cast<int>(ids.size());
}

namespace {

// Counterclockwise angular order starting from the positive x-axis.
bool angle_less(const Vec2& a, const Vec2& b) {
  auto half = [](const Vec2& v) { return (sgn(v.y) > 0 || (sgn(v.y) == 0 && sgn(v.x) > 0)) ? 0 : 1; };
  const int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return sgn(cross(a, b)) > 0;
}

[[noreturn]] void violated(const std::string& why) { throw Error(ErrorCode::InvariantViolated, why); }

}  // namespace

Diagram build_diagram(const PlanarScene& scene) {
  struct Entry {
    Rational x;
    bool crossing;
    int id;
  };
  std::vector<Entry> entries;
  for (int v = 1; v <= scene.vertex_count(); ++v) entries.push_back({scene.positions[v].x, false, v});
  for (std::size_t k = 0; k < scene.crossings.size(); ++k) {
    entries.push_back({scene.crossings[k].point.x, true, static_cast<int>(k)});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.x < b.x; });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].x == entries[i - 1].x) throw Error(ErrorCode::RegularityViolated, "shared abscissa in scene");
  }

  Diagram d;
  std::vector<int> vertex_node(scene.vertex_count() + 1, -1);
  std::vector<int> crossing_node(scene.crossings.size(), -1);
  int crossing_seq = 0;
  for (const auto& en : entries) {
    DiagramNode n;
    if (en.crossing) {
      n.kind = NodeKind::Crossing;
      n.name = "c" + std::to_string(++crossing_seq);
      n.position = scene.crossings[en.id].point;
      crossing_node[en.id] = d.node_count();
    } else {
      n.kind = NodeKind::Graph;
      n.vertex = scene.vertex_ids[en.id];
      n.name = "v" + std::to_string(n.vertex);
      n.position = scene.positions[en.id];
      vertex_node[en.id] = d.node_count();
    }
    d.nodes.push_back(std::move(n));
  }

  for (std::size_t s = 0; s < scene.edges.size(); ++s) {
    std::vector<int> chain{vertex_node[scene.edges[s].first]};
    for (int k : scene.edge_crossings[s]) chain.push_back(crossing_node[k]);
    chain.push_back(vertex_node[scene.edges[s].second]);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      const int e = static_cast<int>(d.edges.size());
      d.edges.push_back({"e" + std::to_string(e + 1), chain[i], chain[i + 1], static_cast<int>(s), -1});
      auto attach = [&](int node, bool incoming) {
        DiagramNode& n = d.nodes[node];
        if (n.kind != NodeKind::Crossing) return;
        const int k = static_cast<int>(std::find(crossing_node.begin(), crossing_node.end(), node) - crossing_node.begin());
        const bool over = scene.crossings[k].over == static_cast<int>(s);
        (over ? (incoming ? n.crossing.over_in : n.crossing.over_out)
              : (incoming ? n.crossing.under_in : n.crossing.under_out)) = e;
      };
      attach(chain[i], false);
      attach(chain[i + 1], true);
    }
  }

  auto direction = [&](int s) {
    return scene.positions[scene.edges[s].second] - scene.positions[scene.edges[s].first];
  };
  for (std::size_t k = 0; k < scene.crossings.size(); ++k) {
    DiagramNode& n = d.nodes[crossing_node[k]];
    n.crossing.sign = sgn(cross(direction(scene.crossings[k].over), direction(scene.crossings[k].under())));
  }

  for (int v = 1; v <= scene.vertex_count(); ++v) {
    const int node = vertex_node[v];
    std::vector<std::pair<Vec2, EdgeEnd>> ends;
    for (std::size_t e = 0; e < d.edges.size(); ++e) {
      const DiagramEdge& ed = d.edges[e];
      if (ed.tail == node) ends.push_back({*d.nodes[ed.head].position - *d.nodes[node].position, {static_cast<int>(e), true}});
      if (ed.head == node) ends.push_back({*d.nodes[ed.tail].position - *d.nodes[node].position, {static_cast<int>(e), false}});
    }
    std::sort(ends.begin(), ends.end(), [](const auto& a, const auto& b) { return angle_less(a.first, b.first); });
    for (auto& [dir, end] : ends) d.nodes[node].rotation.push_back(end);
  }

  d.compute_arcs();
  if (!d.nodes.empty() && d.nodes[0].kind != NodeKind::Graph) {
    throw Error(ErrorCode::RegularityViolated, "leftmost node is a crossing");
  }
  if (d.nodes.size() > 1 && d.nodes[1].kind != NodeKind::Graph) {
    throw Error(ErrorCode::RegularityViolated, "second node is a crossing");
  }
  for (int i = 0; i < d.node_count(); ++i) {
    if (d.nodes[i].kind != NodeKind::Crossing) continue;
    int left = 0;
    for (const auto& ed : d.edges) left += (ed.head == i && ed.tail < i) ? 1 : 0;
    if (left != 2) throw Error(ErrorCode::RegularityViolated, "crossing without two left edges");
  }
  return d;
}

void validate_diagram(const Diagram& d) {
  const int n = d.node_count();
  std::map<std::string, int> names;
  for (int i = 0; i < n; ++i) {
    if (!names.emplace(d.nodes[i].name, i).second) violated("duplicate node name " + d.nodes[i].name);
  }
  for (const auto& ed : d.edges) {
    if (ed.tail < 0 || ed.tail >= n || ed.head < 0 || ed.head >= n) violated("edge " + ed.name + " has a bad endpoint");
  }
  for (int i = 0; i < n; ++i) {
    std::vector<EdgeEnd> incident;
    for (std::size_t e = 0; e < d.edges.size(); ++e) {
      if (d.edges[e].tail == i) incident.push_back({static_cast<int>(e), true});
      if (d.edges[e].head == i) incident.push_back({static_cast<int>(e), false});
    }
    const DiagramNode& node = d.nodes[i];
    if (node.kind == NodeKind::Crossing) {
      const CrossingInfo& c = node.crossing;
      if (incident.size() != 4) violated("crossing " + node.name + " has degree " + std::to_string(incident.size()));
      const int ids[4] = {c.over_in, c.over_out, c.under_in, c.under_out};
      for (int a = 0; a < 4; ++a) {
        if (ids[a] < 0 || ids[a] >= static_cast<int>(d.edges.size())) violated("crossing " + node.name + " is incomplete");
        for (int b = a + 1; b < 4; ++b)
          if (ids[a] == ids[b]) violated("crossing " + node.name + " repeats an edge");
      }
      if (d.edges[c.over_in].head != i || d.edges[c.under_in].head != i || d.edges[c.over_out].tail != i ||
          d.edges[c.under_out].tail != i) {
        violated("crossing " + node.name + " edge directions do not match");
      }
      if (c.sign != 1 && c.sign != -1) violated("crossing " + node.name + " sign must be +1 or -1");
    } else {
      auto sorted = [](std::vector<EdgeEnd> v) {
        std::sort(v.begin(), v.end(), [](const EdgeEnd& a, const EdgeEnd& b) {
          return a.edge != b.edge ? a.edge < b.edge : a.at_tail < b.at_tail;
        });
        return v;
      };
      if (sorted(node.rotation) != sorted(incident)) violated("rotation at " + node.name + " does not match its edges");
    }
  }
  Diagram copy = d;
  copy.compute_arcs();
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    if (copy.edges[e].arc != d.edges[e].arc) violated("arc labels are stale");
  }
}

int find_edge(const Diagram& d, std::string_view name) {
  for (std::size_t e = 0; e < d.edges.size(); ++e)
    if (d.edges[e].name == name) return static_cast<int>(e);
  return -1;
}

Diagram contract_flat_edge(const Diagram& d, int edge) {
  if (edge < 0 || edge >= static_cast<int>(d.edges.size())) throw Error(ErrorCode::MissingEdge, "no such diagram edge");
  const DiagramEdge& ed = d.edges[edge];
  if (d.nodes[ed.tail].kind != NodeKind::Graph || d.nodes[ed.head].kind != NodeKind::Graph) {
    throw Error(ErrorCode::EdgeHasCrossings, "edge " + ed.name + " meets a crossing");
  }
  if (ed.tail == ed.head) throw Error(ErrorCode::InvariantViolated, "cannot contract a loop");

  auto rest_after = [&](int node, EdgeEnd self) {
    const auto& rot = d.nodes[node].rotation;
    const auto it = std::find(rot.begin(), rot.end(), self);
    std::vector<EdgeEnd> out(it + 1, rot.end());
    out.insert(out.end(), rot.begin(), it);
    return out;
  };
  std::vector<EdgeEnd> merged = rest_after(ed.tail, {edge, true});
  const auto from_head = rest_after(ed.head, {edge, false});
  merged.insert(merged.end(), from_head.begin(), from_head.end());

  const int keep = std::min(ed.tail, ed.head);
  const int drop = std::max(ed.tail, ed.head);
  auto node_map = [&](int v) { return v == drop ? keep : (v > drop ? v - 1 : v); };
  auto edge_map = [&](int e) { return e > edge ? e - 1 : e; };

  Diagram out;
  for (int i = 0; i < d.node_count(); ++i) {
    if (i == drop) continue;
    DiagramNode n = d.nodes[i];
    if (i == keep) n.rotation = merged;
    for (auto& end : n.rotation) end.edge = edge_map(end.edge);
    if (n.kind == NodeKind::Crossing) {
      for (int* f : {&n.crossing.over_in, &n.crossing.over_out, &n.crossing.under_in, &n.crossing.under_out}) {
        *f = edge_map(*f);
      }
    }
    out.nodes.push_back(std::move(n));
  }
  for (int e = 0; e < static_cast<int>(d.edges.size()); ++e) {
    if (e == edge) continue;
    DiagramEdge copy = d.edges[e];
    copy.tail = node_map(copy.tail);
    copy.head = node_map(copy.head);
    out.edges.push_back(std::move(copy));
  }
  out.compute_arcs();
  return out;
}

// --- text format --------------------------------------------------------------

Diagram diagram_from_spec(std::string_view text) {
  struct NodeLine {
    DiagramNode node;
    std::vector<std::string> crossing_edges;  // over in, over out, under in, under out
    int line;
  };
  struct EdgeLine {
    std::string name, tail, head;
  };
  std::vector<NodeLine> node_lines;
  std::vector<EdgeLine> edge_lines;
  std::map<std::string, std::vector<std::string>> rotations;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  auto malformed = [&](const std::string& why) -> void {
    throw Error(ErrorCode::MalformedSpec, "line " + std::to_string(line_no) + ": " + why);
  };
  auto parse_pos = [&](const std::vector<std::string>& tok, std::size_t at) -> std::optional<Vec2> {
    try {
      return Vec2{parse_rational(tok[at]), parse_rational(tok[at + 1])};
    } catch (const Error&) {
      malformed("bad coordinate");
      return std::nullopt;
    }
  };
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string& kind = tok[0];
    if (kind == "vertex") {
      if (tok.size() != 2 && tok.size() != 4) malformed("expected 'vertex <name> [x y]'");
      NodeLine nl{{}, {}, line_no};
      nl.node.kind = NodeKind::Graph;
      nl.node.name = tok[1];
      if (tok.size() == 4) nl.node.position = parse_pos(tok, 2);
      node_lines.push_back(std::move(nl));
    } else if (kind == "crossing") {
      if (tok.size() != 10 && tok.size() != 12) malformed("bad crossing line");
      NodeLine nl{{}, {}, line_no};
      nl.node.kind = NodeKind::Crossing;
      nl.node.name = tok[1];
      std::size_t at = 2;
      if (tok.size() == 12) {
        nl.node.position = parse_pos(tok, 2);
        at = 4;
      }
      if (tok[at] != "over" || tok[at + 3] != "under" || tok[at + 6] != "sign") malformed("bad crossing line");
      nl.crossing_edges = {tok[at + 1], tok[at + 2], tok[at + 4], tok[at + 5]};
      const std::string& s = tok[at + 7];
      if (s == "+1" || s == "1") {
        nl.node.crossing.sign = 1;
      } else if (s == "-1") {
        nl.node.crossing.sign = -1;
      } else {
        malformed("sign must be +1 or -1");
      }
      node_lines.push_back(std::move(nl));
    } else if (kind == "edge") {
      if (tok.size() != 4) malformed("expected 'edge <name> <tail> <head>'");
      edge_lines.push_back({tok[1], tok[2], tok[3]});
    } else if (kind == "rotation") {
      if (tok.size() < 2) malformed("expected 'rotation <vertex> <edge>:<out|in> ...'");
      if (!rotations.emplace(tok[1], std::vector<std::string>(tok.begin() + 2, tok.end())).second) {
        malformed("duplicate rotation for " + tok[1]);
      }
    } else {
      malformed("unknown record '" + kind + "'");
    }
  }

  Diagram d;
  std::map<std::string, int> node_index, edge_index;
  int vertex_seq = 0;
  for (auto& nl : node_lines) {
    if (nl.node.kind == NodeKind::Graph) nl.node.vertex = ++vertex_seq;
    if (!node_index.emplace(nl.node.name, d.node_count()).second) {
      throw Error(ErrorCode::MalformedSpec, "duplicate node " + nl.node.name);
    }
    d.nodes.push_back(nl.node);
  }
  for (const auto& el : edge_lines) {
    const auto t = node_index.find(el.tail), h = node_index.find(el.head);
    if (t == node_index.end() || h == node_index.end()) {
      throw Error(ErrorCode::MalformedSpec, "edge " + el.name + " references an unknown node");
    }
    if (!edge_index.emplace(el.name, static_cast<int>(d.edges.size())).second) {
      throw Error(ErrorCode::MalformedSpec, "duplicate edge " + el.name);
    }
    d.edges.push_back({el.name, t->second, h->second, -1, -1});
  }
  auto edge_ref = [&](const std::string& name) {
    const auto it = edge_index.find(name);
    if (it == edge_index.end()) throw Error(ErrorCode::MalformedSpec, "unknown edge " + name);
    return it->second;
  };
  for (std::size_t i = 0; i < node_lines.size(); ++i) {
    DiagramNode& n = d.nodes[i];
    if (n.kind == NodeKind::Crossing) {
      n.crossing.over_in = edge_ref(node_lines[i].crossing_edges[0]);
      n.crossing.over_out = edge_ref(node_lines[i].crossing_edges[1]);
      n.crossing.under_in = edge_ref(node_lines[i].crossing_edges[2]);
      n.crossing.under_out = edge_ref(node_lines[i].crossing_edges[3]);
      if (rotations.count(n.name)) throw Error(ErrorCode::MalformedSpec, "rotation given for crossing " + n.name);
      continue;
    }
    const auto rot = rotations.find(n.name);
    if (rot == rotations.end()) {
      for (std::size_t e = 0; e < d.edges.size(); ++e) {
        if (d.edges[e].tail == static_cast<int>(i)) n.rotation.push_back({static_cast<int>(e), true});
        if (d.edges[e].head == static_cast<int>(i)) n.rotation.push_back({static_cast<int>(e), false});
      }
      continue;
    }
    for (const auto& item : rot->second) {
      const auto colon = item.rfind(':');
      if (colon == std::string::npos) throw Error(ErrorCode::MalformedSpec, "rotation entry needs ':out' or ':in'");
      const std::string dir = item.substr(colon + 1);
      if (dir != "out" && dir != "in") throw Error(ErrorCode::MalformedSpec, "rotation entry needs ':out' or ':in'");
      n.rotation.push_back({edge_ref(item.substr(0, colon)), dir == "out"});
    }
  }
  for (const auto& [name, items] : rotations) {
    if (!node_index.count(name)) throw Error(ErrorCode::MalformedSpec, "rotation for unknown node " + name);
  }
  d.compute_arcs();
  validate_diagram(d);
  return d;
}

std::string diagram_to_spec(const Diagram& d) {
  std::ostringstream out;
  auto pos = [](const DiagramNode& n) {
    return n.position ? " " + to_literal(n.position->x) + " " + to_literal(n.position->y) : std::string();
  };
  for (const auto& n : d.nodes) {
    if (n.kind == NodeKind::Graph) {
      out << "vertex " << n.name << pos(n) << '\n';
    } else {
      const CrossingInfo& c = n.crossing;
      out << "crossing " << n.name << pos(n) << " over " << d.edges[c.over_in].name << ' '
          << d.edges[c.over_out].name << " under " << d.edges[c.under_in].name << ' ' << d.edges[c.under_out].name
          << " sign " << (c.sign > 0 ? "+1" : "-1") << '\n';
    }
  }
  for (const auto& e : d.edges) out << "edge " << e.name << ' ' << d.nodes[e.tail].name << ' ' << d.nodes[e.head].name << '\n';
  for (const auto& n : d.nodes) {
    if (n.kind != NodeKind::Graph) continue;
    out << "rotation " << n.name;
    for (const auto& end : n.rotation) out << ' ' << d.edges[end.edge].name << (end.at_tail ? ":out" : ":in");
    out << '\n';
  }
  return out.str();
}

}  // namespace lf
