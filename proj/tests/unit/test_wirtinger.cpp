#include "../support/oracles.hpp"
#include "../support/scenes.hpp"
#include "doctest.h"
#include "lf/diagram.hpp"
#include "lf/direction.hpp"
#include "lf/error.hpp"
#include "lf/fixtures.hpp"
#include "lf/wirtinger.hpp"

using namespace lf;

namespace {

Word w(std::initializer_list<std::pair<int, int>> letters) {
  Word out;
  for (auto [g, e] : letters) out.push_back({g, e});
  return out;
}

Diagram diagram_of(const LinearEmbedding& e) { return build_diagram(project_with_frame(e, scenes::kX, scenes::kY)); }

}  // namespace

TEST_CASE("free reduction") {
  const int a = 0, b = 1, c = 2;
  CHECK(free_reduce(w({{a, 1}, {b, 1}, {b, -1}, {a, -1}})).empty());
  CHECK(free_reduce(w({{a, 1}, {b, 1}, {a, -1}})) == w({{a, 1}, {b, 1}, {a, -1}}));
  const Word ab = w({{a, 1}, {b, 1}}), bc = w({{b, -1}, {c, 1}}), ca = w({{c, -1}, {a, -1}});
  CHECK(free_reduce(concat(concat(ab, bc), ca)).empty());
  CHECK(inverse(ab) == w({{b, -1}, {a, -1}}));
  CHECK(word_to_string({}) == "1");
  CHECK(word_to_string(w({{2, 1}, {0, -1}})) == "x2 x0^-1");
}

TEST_CASE("triangle presentation") {
  const Diagram d = diagram_of(scenes::triangle());
  const Presentation p = build_presentation(d);
  CHECK(p.generator_count == 3);
  REQUIRE(p.relators.size() == 3);
  // Leftmost vertex: two outgoing ends; middle: one of each; rightmost: two incoming.
  const int expected_sum[] = {2, 0, -2};
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(p.relators[i].size() == 2);
    int sum = 0;
    for (auto l : p.relators[i]) sum += l.exp;
    CHECK(sum == expected_sum[i]);
  }
}

TEST_CASE("crossing relator shape") {
  const Diagram d = diagram_of(scenes::two_segments());
  const Presentation p = build_presentation(d);
  const auto& c = d.nodes[2].crossing;
  const int x = d.edges[c.under_out].arc, z = d.edges[c.under_in].arc, y = d.edges[c.over_in].arc;
  const int s = c.sign;
  CHECK(p.relators[2] == w({{x, -1}, {y, -s}, {z, 1}, {y, s}}));
}

TEST_CASE("spanning tree rules") {
  const Diagram tri = diagram_of(scenes::triangle());
  const SpanningTree t = build_spanning_tree(tri);
  REQUIRE(t.tree_edge.size() == 3);
  CHECK(t.tree_edge[0] == -1);
  // Node 2 (third vertex) uses its edge to node 1, the larger lower index.
  const auto& e2 = tri.edges[t.tree_edge[2]];
  CHECK(std::min(e2.tail, e2.head) == 1);
  const auto& e1 = tri.edges[t.tree_edge[1]];
  CHECK(std::min(e1.tail, e1.head) == 0);

  const Diagram x = diagram_of(scenes::chord_cycle());
  const SpanningTree tx = build_spanning_tree(x);
  for (int i = 0; i < x.node_count(); ++i) {
    if (x.nodes[i].kind == NodeKind::Crossing) CHECK(tx.tree_edge[i] == x.nodes[i].crossing.under_in);
  }
  try {
    build_spanning_tree(diagram_of(scenes::bad_cycle()));
    FAIL("expected NotDescendingScene");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NotDescendingScene);
  }
}

TEST_CASE("elimination leaves a free group of rank betti") {
  const Diagram tri = diagram_of(scenes::triangle());
  const auto p = build_presentation(tri);
  const auto cert = eliminate(p, tri, build_spanning_tree(tri));
  CHECK(cert.rank == 1);
  CHECK(replay_elimination(p, cert));

  const Diagram x = diagram_of(scenes::chord_cycle());
  const auto px = build_presentation(x);
  const auto cx = eliminate(px, x, build_spanning_tree(x));
  CHECK(cx.rank == 1);
  CHECK(replay_elimination(px, cx));

  for (auto [n, seed] : std::vector<std::pair<int, std::uint64_t>>{{4, 1}, {5, 2}, {5, 9}, {6, 4}}) {
    const auto e = random_embedding(complete_graph(n), seed);
    auto l = find_descending_direction(e);
    REQUIRE(l);
    const Diagram d = build_diagram(project(e, l->l, seed));
    const auto pd = build_presentation(d);
    const auto cd = eliminate(pd, d, build_spanning_tree(d));
    CHECK(cd.rank == betti(e.graph));
    CHECK(static_cast<int>(cd.surviving.size()) == cd.rank);
    CHECK(replay_elimination(pd, cd));
  }
}

TEST_CASE("abelianization") {
  CHECK(abelianization(Presentation{4, {}}).free_rank == 4);
  CHECK(abelianization(Presentation{4, {}}).torsion.empty());
  const auto diag = smith_diagonal({{2, 0}, {0, 3}});
  CHECK(diag == std::vector<mpz_class>{1, 6});
  const auto z2 = abelianization(Presentation{1, {w({{0, 1}, {0, 1}})}});
  CHECK(z2.free_rank == 0);
  CHECK(z2.torsion == std::vector<mpz_class>{2});

  const auto t = tetrahedron_fixture();
  const Diagram d = build_diagram(project(t, find_descending_direction(t)->l, 0));
  const auto pt = build_presentation(d);
  CHECK(abelianization(pt).free_rank == 3);
  CHECK(abelianization(pt).torsion.empty());
  CHECK(oracle::homology_is_free_of_rank(pt, 3));

  const auto trefoil = build_presentation(trefoil_fixture());
  CHECK(trefoil.generator_count == 4);
  CHECK(trefoil.relators.size() == 4);
  CHECK(abelianization(trefoil).free_rank == 1);
  CHECK(abelianization(trefoil).torsion.empty());
  CHECK(oracle::homology_is_free_of_rank(trefoil, 1));

  const auto theta = build_presentation(theta_fixture());
  CHECK(abelianization(theta).free_rank == 2);
  CHECK(oracle::homology_is_free_of_rank(theta, 2));
}
