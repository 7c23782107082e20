#include <set>

#include "../support/oracles.hpp"
#include "../support/scenes.hpp"
#include "doctest.h"
#include "lf/analyzer.hpp"
#include "lf/error.hpp"
#include "lf/fixtures.hpp"
#include "lf/predicates.hpp"
#include "lf/report.hpp"
#include "lf/svg.hpp"

using namespace lf;

TEST_CASE("complete graphs are certified free") {
  const auto r = analyze(random_embedding(complete_graph(5), 17));
  CHECK(r.status == Status::Free);
  REQUIRE(r.certificate);
  CHECK(r.certificate->rank == 6);
  REQUIRE(r.abelian);
  CHECK(r.abelian->free_rank == 6);
  CHECK(r.moves.empty());
}

TEST_CASE("knotted fixtures give colouring evidence") {
  for (const char* name : {"fig4", "fig5"}) {
    CAPTURE(name);
    const auto e = std::get<LinearEmbedding>(fixture(name));
    CHECK_FALSE(find_descending_direction(e));
    const auto r = analyze(e);
    CHECK(r.status == Status::NonfreeEvidence);
    CHECK_FALSE(r.certificate);
    bool colourable = false;
    for (const auto& c : r.colorings) colourable = colourable || c.count > 3;
    CHECK(colourable);
  }
}

TEST_CASE("fixture validation") {
  const auto t = tetrahedron_fixture();
  CHECK(t.at(2) == Vec3{3, 0, 0});
  CHECK(validate_general_position(t).ok());

  const auto g = fig4_fixture();
  CHECK(g.vertex_count() == 8);
  for (VertexId v = 5; v <= 8; ++v) {
    // Same side of each face as the opposite corner.
    const int faces[4][4] = {{1, 2, 3, 4}, {1, 2, 4, 3}, {1, 3, 4, 2}, {2, 3, 4, 1}};
    for (const auto& f : faces) {
      CHECK(orient3d(g.at(f[0]), g.at(f[1]), g.at(f[2]), g.at(v)) ==
            orient3d(g.at(f[0]), g.at(f[1]), g.at(f[2]), g.at(f[3])));
    }
  }

  const auto f5 = fig5_fixture();
  CHECK(f5.vertex_count() == 8);
  CHECK(min_degree(f5.graph) == 3);
  CHECK(betti(f5.graph) == 5);

  for (int n : {4, 6}) {
    const auto f3 = fig3_fixture(n);
    CHECK(f3.vertex_count() == n + 5);
    CHECK(clique_number(f3.graph) == n);
    CHECK(validate_general_position(f3).ok());
    // The hexagon through the shared corner projects to a colourable diagram.
    std::vector<Edge> hex{{1, n + 1}, {n + 5, 1}};
    for (int v = n + 1; v < n + 5; ++v) hex.push_back({v, v + 1});
    const auto sub = edge_subembedding(f3, hex);
    const Diagram d = build_diagram(project(sub, {3, -1, 2}, 1));
    CHECK(count_tricolorings(d).colorable());
  }
  CHECK_THROWS_AS(fixture("nope"), Error);
}

TEST_CASE("complete bipartite graphs") {
  CHECK(bipartite_colours(complete_bipartite(3, 3)) == std::vector<int>{-1, 0, 0, 0, 1, 1, 1});
  CHECK_THROWS_AS(bipartite_colours(complete_graph(4)), Error);
  for (auto [a, b, rank] : std::vector<std::tuple<int, int, int>>{{3, 3, 4}, {4, 4, 9}}) {
    const auto r = analyze_bipartite(random_embedding(complete_bipartite(a, b), 5));
    CHECK(r.status == Status::Free);
    REQUIRE(r.certificate);
    CHECK(r.certificate->rank == rank);
  }
}

TEST_CASE("bipartite second case slides once") {
  // Look for an embedding where the two lowest vertices share a colour.
  bool seen = false;
  for (std::uint64_t seed = 1; seed <= 400 && !seen; ++seed) {
    const auto r = analyze_bipartite(random_embedding(complete_bipartite(3, 3), seed));
    if (r.bipartite_case != 2) continue;
    seen = true;
    CHECK(r.status == Status::Free);
    REQUIRE(r.moves.size() == 1);
    CHECK(r.moves[0].kind == MoveKind::Slide);
    CHECK(r.certificate->rank == 4);
  }
  CHECK(seen);
}

TEST_CASE("disconnected input is rejected") {
  SimpleGraph g(4);
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  const LinearEmbedding e(g, {{}, {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  try {
    analyze(e);
    FAIL("expected InvalidEmbedding");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::InvalidEmbedding);
  }
}

TEST_CASE("small graph sweep") {
  const auto r = four_cycle_sweep(7, 3);
  CHECK(r.without_four_cycle == 0);
  CHECK(r.counterexamples.empty());
  long long labelled = 0;
  for (const auto& g : enumerate_graphs(7, 3, true)) labelled += oracle::labelling_count(g);
  CHECK(labelled == oracle::labelled_count(7, 3));
  CHECK(r.graphs == static_cast<int>(enumerate_graphs(7, 3, true).size()));
}

TEST_CASE("subcase completions") {
  const auto subs = subcase_checks();
  REQUIRE(subs.size() == 4);
  for (const auto& s : subs) {
    CAPTURE(s.name);
    CHECK(s.completions > 0);
    CHECK(s.with_pair == s.completions);
    CHECK(s.seven_attached_to_2_and_5);
  }
  // S1 with 6~5 contains the pair (1465)(237) among its completions.
  bool found = false;
  for (const auto& line : subs[0].pairs) found = found || line.find("(1465) (237)") != std::string::npos;
  CHECK(found);
}

TEST_CASE("reports are deterministic") {
  const auto e = random_embedding(complete_graph(5), 3);
  const std::string a = report_to_json(analyze(e)), b = report_to_json(analyze(e));
  CHECK(a == b);
  CHECK(a.find("\"status\": \"FREE\"") != std::string::npos);
  const auto cert = *analyze(e).certificate;
  CHECK(trace_digest(cert).size() == 16);
}

TEST_CASE("svg output") {
  auto count = [](const std::string& s, const std::string& what) {
    int n = 0;
    for (std::size_t at = s.find(what); at != std::string::npos; at = s.find(what, at + 1)) ++n;
    return n;
  };
  const Diagram tri = build_diagram(project_with_frame(scenes::triangle(), scenes::kX, scenes::kY));
  const std::string t = render_svg(tri);
  CHECK(count(t, "<path") == 3);
  CHECK(count(t, "<circle") == 3);
  const Diagram x = build_diagram(project_with_frame(scenes::two_segments(), scenes::kX, scenes::kY));
  const std::string s = render_svg(x);
  CHECK(count(s, "<path") == 4);
  CHECK(count(s, "<circle") == 4);
  CHECK(render_svg(x) == s);
}
