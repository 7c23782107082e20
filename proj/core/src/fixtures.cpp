#include "lf/fixtures.hpp"

#include <array>

#include "lf/error.hpp"
#include "lf/moves.hpp"
#include "lf/predicates.hpp"

namespace lf {

const char* const kTrefoilSpec = R"(# trefoil closed up at a single vertex v
vertex v
crossing c1 over e1 e2 under e4 e5 sign +1
crossing c2 over e5 e6 under e2 e3 sign +1
crossing c3 over e3 e4 under e6 e7 sign +1
edge e1 v c1
edge e2 c1 c2
edge e3 c2 c3
edge e4 c3 c1
edge e5 c1 c2
edge e6 c2 c3
edge e7 c3 v
rotation v e1:out e7:in
)";

// A trefoil loop with one point of its strand pulled back to the vertex
// along a doubled path that runs over everything else.
const char* const kThetaSpec = R"(# bouquet of two loops at v
vertex v
crossing c1 over a1 a2 under b4 b5 sign +1
crossing c2 over a2 a3 under b5 b6 sign -1
crossing c3 over b1 b2 under b6 b7 sign +1
crossing c4 over b7 b8 under b2 b3 sign +1
crossing c5 over b3 b4 under b8 b9 sign +1
edge a1 v c1
edge a2 c1 c2
edge a3 c2 v
edge b1 v c3
edge b2 c3 c4
edge b3 c4 c5
edge b4 c5 c1
edge b5 c1 c2
edge b6 c2 c3
edge b7 c3 c4
edge b8 c4 c5
edge b9 c5 v
rotation v a1:out a3:in b1:out b9:in
)";

std::vector<Vec3> knotted_hexagon() {
  return {{-2, 3, -3}, {1, 0, 4}, {3, -1, 1}, {-1, -4, -1}, {1, 3, 4}, {4, -4, 3}};
}

namespace {

LinearEmbedding build(int n, const std::vector<Vec3>& pts, const std::vector<Edge>& edges) {
  SimpleGraph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  std::vector<Vec3> coords(1);
  coords.insert(coords.end(), pts.begin(), pts.end());
  return LinearEmbedding(std::move(g), std::move(coords));
}

void require_valid(const LinearEmbedding& e, const std::string& name) {
  const auto report = validate_general_position(e);
  if (!report.ok()) throw Error(ErrorCode::InvalidEmbedding, name + " fixture is not in general position: " + report.describe());
}

}  // namespace

LinearEmbedding tetrahedron_fixture() {
  return build(4, {{0, 0, 0}, {3, 0, 0}, {0, 3, 0}, {0, 0, 3}}, complete_graph(4).edges());
}

LinearEmbedding fig4_fixture() {
  const auto h = knotted_hexagon();
  // Corners 1 and 3 are hexagon corners; 2 and 4 are chosen so that the
  // tetrahedron 1234 contains the other four hexagon corners.
  std::vector<Vec3> pts = {h[4], {-7, -38, 8}, h[5], {-6, 37, -30}, h[0], h[1], h[2], h[3]};
  std::vector<Edge> edges = complete_graph(4).edges();
  for (Edge e : {Edge{3, 5}, Edge{5, 6}, Edge{6, 7}, Edge{7, 8}, Edge{1, 8}}) edges.push_back(e);
  LinearEmbedding e = build(8, pts, edges);
  require_valid(e, "fig4");
  for (int v = 5; v <= 8; ++v) {
    // Strictly inside: v is on the same side of each face as the opposite corner.
    const int faces[4][4] = {{1, 2, 3, 4}, {1, 2, 4, 3}, {1, 3, 4, 2}, {2, 3, 4, 1}};
    for (const auto& f : faces) {
      if (orient3d(e.at(f[0]), e.at(f[1]), e.at(f[2]), e.at(v)) !=
          orient3d(e.at(f[0]), e.at(f[1]), e.at(f[2]), e.at(f[3]))) {
        throw Error(ErrorCode::InvalidEmbedding, "fig4 inner vertex outside the tetrahedron");
      }
    }
  }
  return e;
}

LinearEmbedding fig5_fixture() {
  std::vector<Vec3> pts;
  for (const auto& p : knotted_hexagon()) pts.push_back(Rational(3) * p);
  // 7 hugs corner 3 and 8 hugs corner 6, so each cone only adds thin empty triangles.
  pts.push_back(pts[2] + Vec3{Rational(1, 5), Rational(-1, 7), Rational(1, 9)});
  pts.push_back(pts[5] + Vec3{Rational(-1, 6), Rational(1, 8), Rational(1, 5)});
  std::vector<Edge> edges = cycle_graph(6).edges();
  for (Edge e : {Edge{1, 8}, Edge{2, 7}, Edge{3, 7}, Edge{4, 7}, Edge{5, 8}, Edge{6, 8}}) edges.push_back(e);
  LinearEmbedding e = build(8, pts, edges);
  require_valid(e, "fig5");
  for (auto [a, b, c] : {std::array{2, 3, 7}, std::array{3, 4, 7}, std::array{5, 6, 8}, std::array{6, 1, 8}}) {
    if (!triangle_is_empty(e, a, b, c)) throw Error(ErrorCode::AssertionViolated, "fig5: cone triangle not empty");
  }
  return e;
}

LinearEmbedding fig3_fixture(int n) {
  if (n < 3 || n > 12) throw Error(ErrorCode::UnknownFixture, "fig3 needs 3 <= n <= 12");
  std::vector<Vec3> hex;
  for (const auto& p : knotted_hexagon()) hex.push_back(Rational(4) * p);
  const Vec3 apex = hex[0];
  // A plane through the shared corner with the rest of the hexagon on its positive side.
  const Vec3 candidates[] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1},
                             {1, -1, 1}, {1, 1, -1}, {-1, 1, 1}, {1, -1, -1}};
  Vec3 w;
  bool found = false;
  for (const auto& c : candidates) {
    bool ok = true;
    for (std::size_t k = 1; k < hex.size() && ok; ++k) ok = sgn(dot(c, hex[k] - apex)) > 0;
    if (ok) {
      w = c;
      found = true;
      break;
    }
  }
  if (!found) throw Error(ErrorCode::AssertionViolated, "no separating plane for fig3");

  // K_n vertices 2..n sit on the negative side, close to the shared corner.
  std::vector<Vec3> pts = {apex};
  const Rational ww = dot(w, w);
  for (int j = 2; j <= n; ++j) {
    const Vec3 offset{Rational(j % 3 - 1) + Rational(j) / 7, Rational((j * j) % 5 - 2), Rational((j * j * j) % 7 - 3) / 2};
    // Keep the offset small against w so the point stays on the negative side.
    const Rational scale = ww / (4 * (abs(offset.x) + abs(offset.y) + abs(offset.z) + 1) * (abs(w.x) + abs(w.y) + abs(w.z)));
    pts.push_back(apex + Rational(1, 2) * (Rational(-1) * w + scale * offset));
  }
  for (std::size_t k = 1; k < hex.size(); ++k) pts.push_back(hex[k]);

  const int total = n + 5;
  std::vector<Edge> edges = complete_graph(n).edges();
  // Hexagon: 1 -> n+1 -> ... -> n+5 -> 1.
  edges.push_back({1, n + 1});
  for (int k = 1; k < 5; ++k) edges.push_back({n + k, n + k + 1});
  edges.push_back({1, n + 5});
  LinearEmbedding e = build(total, pts, edges);
  if (!validate_general_position(e).ok()) e = perturb(e, 7, Rational(1, 1000));
  for (int j = 2; j <= n; ++j) {
    if (sgn(dot(w, e.at(j) - apex)) >= 0) throw Error(ErrorCode::AssertionViolated, "fig3 cluster crossed the plane");
  }
  return e;
}

Diagram theta_fixture() { return diagram_from_spec(kThetaSpec); }
Diagram trefoil_fixture() { return diagram_from_spec(kTrefoilSpec); }

std::vector<std::string> fixture_names() { return {"tetrahedron", "fig3:<n>", "fig4", "fig5", "theta", "trefoil"}; }

Fixture fixture(std::string_view name) {
  if (name == "tetrahedron") return tetrahedron_fixture();
  if (name == "fig4") return fig4_fixture();
  if (name == "fig5") return fig5_fixture();
  if (name == "theta") return theta_fixture();
  if (name == "trefoil") return trefoil_fixture();
  std::string_view arg;
  if (name.starts_with("fig3:")) {
    arg = name.substr(5);
  } else if (name.starts_with("fig3(") && name.ends_with(")")) {
    arg = name.substr(5, name.size() - 6);
  }
  if (!arg.empty()) {
    try {
      std::size_t used = 0;
      const int n = std::stoi(std::string(arg), &used);
      if (used == arg.size()) return fig3_fixture(n);
    } catch (const std::logic_error&) {
    }
  }
  throw Error(ErrorCode::UnknownFixture, "unknown fixture '" + std::string(name) + "'");
}

}  // namespace lf
