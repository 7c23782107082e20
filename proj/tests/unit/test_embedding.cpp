#include "../support/oracles.hpp"
#include "doctest.h"
#include "lf/direction.hpp"
#include "lf/embedding.hpp"
#include "lf/error.hpp"
#include "lf/fixtures.hpp"

using namespace lf;

namespace {

LinearEmbedding make(int n, std::vector<Vec3> pts, const std::vector<Edge>& edges) {
  SimpleGraph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  pts.insert(pts.begin(), Vec3{});
  return LinearEmbedding(g, pts);
}

Rational max_displacement(const LinearEmbedding& a, const LinearEmbedding& b) {
  Rational worst = 0;
  for (int v = 1; v <= a.vertex_count(); ++v) {
    const Vec3 d = a.at(v) - b.at(v);
    for (const Rational* c : {&d.x, &d.y, &d.z}) worst = std::max<Rational>(worst, abs(*c));
  }
  return worst;
}

}  // namespace

TEST_CASE("general position validation") {
  CHECK(validate_general_position(tetrahedron_fixture()).ok());
  const auto collinear = make(3, {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}}, {{1, 2}, {2, 3}});
  CHECK_FALSE(collinear.graph.edge_count() == 0);
  const auto report = validate_general_position(collinear);
  CHECK(report.collinear_triples.size() == 1);
  CHECK_FALSE(report.ok());

  // Edges 1-2 and 3-4 meet at (1,1,0).
  const auto crossing = make(4, {{0, 0, 0}, {2, 2, 0}, {0, 2, 0}, {2, 0, 0}}, {{1, 2}, {3, 4}});
  CHECK(validate_general_position(crossing).crossing_edges.size() == 1);
  CHECK(validate_edge_position(crossing, {1, 2}).crossing_edges.size() == 1);
}

TEST_CASE("perturbation") {
  const auto collinear = make(3, {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}}, {{1, 2}, {2, 3}});
  const auto fixed = perturb(collinear, 1, Rational(1, 100));
  CHECK(validate_general_position(fixed).ok());
  CHECK(max_displacement(fixed, collinear) < Rational(1, 100));
  CHECK(perturb(collinear, 1, Rational(1, 100)) == fixed);
  CHECK(perturb(tetrahedron_fixture(), 1, 0) == tetrahedron_fixture());
  CHECK_THROWS_AS(perturb(collinear, 1, 0), Error);
}

TEST_CASE("text format") {
  const auto e = tetrahedron_fixture();
  CHECK(parse_embedding(format_embedding(e)) == e);
  const auto f = parse_embedding("# comment\nv 1 0 0 0\nv 2 1/2 0 0\ne 1 2\n");
  CHECK(f.at(2).x == Rational(1, 2));
  CHECK_THROWS_AS(parse_embedding("v 1 0 0\n"), Error);
  CHECK_THROWS_AS(parse_embedding("v 1 0 0 0\ne 1 2\n"), Error);
}

TEST_CASE("random embeddings are deterministic and valid") {
  const auto a = random_embedding(complete_graph(6), 42);
  CHECK(validate_general_position(a).ok());
  CHECK(random_embedding(complete_graph(6), 42) == a);
  CHECK_FALSE(random_embedding(complete_graph(6), 43) == a);
}

TEST_CASE("projection of two crossing segments") {
  const auto e = make(4, {{0, 0, 0}, {2, 2, 0}, {0, 2, 1}, {2, 0, 1}}, {{1, 2}, {3, 4}});
  const auto scene = project_with_frame(e, {1, 0, 0}, {0, 1, 0}, false);
  REQUIRE(scene.crossings.size() == 1);
  const auto& c = scene.crossings[0];
  CHECK(c.point.x == 1);
  CHECK(c.point.y == 1);
  // The second segment sits at height 1.
  CHECK(scene.edges[c.over] == Edge{3, 4});
  CHECK_THROWS_AS(project_with_frame(e, {1, 0, 0}, {0, 1, 0}, true), Error);
}

TEST_CASE("projection crossing count matches the pairwise oracle") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto e = random_embedding(complete_graph(5), seed);
    const auto scene = project(e, {-2, -3, -5}, seed);
    CHECK(static_cast<int>(scene.crossings.size()) ==
          oracle::pairwise_crossings(e, scene.frame.l, scene.frame.m));
    CHECK(scene.edges.size() == 10);
    for (auto [a, b] : scene.edges) CHECK(scene.positions[a].x < scene.positions[b].x);
  }
  const auto t = tetrahedron_fixture();
  const auto scene = project(t, {-2, -3, -5}, 0);
  CHECK(scene.edges.size() == 6);
  CHECK(static_cast<int>(scene.crossings.size()) == oracle::pairwise_crossings(t, scene.frame.l, scene.frame.m));
}

TEST_CASE("projection needs a generic direction") {
  CHECK_THROWS_AS(project(tetrahedron_fixture(), {0, 0, 1}), Error);
}

TEST_CASE("subembedding relabels in order") {
  std::vector<VertexId> original;
  const auto sub = edge_subembedding(tetrahedron_fixture(), {{2, 4}, {3, 4}}, &original);
  CHECK(sub.vertex_count() == 3);
  CHECK(original == std::vector<VertexId>{0, 2, 3, 4});
  CHECK(sub.graph.has_edge(1, 3));
  CHECK(sub.at(1) == tetrahedron_fixture().at(2));
}

TEST_CASE("separating vertex heights keeps the edge signs") {
  // Vertices 1 and 3 share the height 0 along (0,0,1); they are not adjacent.
  SimpleGraph g(3);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  const LinearEmbedding e(g, {{}, {0, 0, 0}, {1, 1, 2}, {2, -1, 0}});
  const Vec3 l{0, 0, 1};
  const Vec3 s = separate_heights(e, l, 4);
  CHECK(dot(s, e.at(1)) != dot(s, e.at(3)));
  for (auto [a, b] : g.edges()) CHECK(sgn(dot(s, e.at(b) - e.at(a))) == sgn(dot(l, e.at(b) - e.at(a))));
  CHECK(separate_heights(tetrahedron_fixture(), {-2, -3, -5}) == Vec3{-2, -3, -5});
}

TEST_CASE("coincident vertices are reported and perturbed apart") {
  SimpleGraph g(3);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  const LinearEmbedding e(g, {{}, {1, 2, 3}, {1, 2, 3}, {0, 5, 1}});
  const auto report = validate_general_position(e);
  CHECK(report.coincident.size() == 1);
  CHECK_FALSE(report.ok());
  CHECK(validate_general_position(perturb(e, 3, Rational(1, 10))).ok());
}
