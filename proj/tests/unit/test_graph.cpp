#include <set>

#include "../support/oracles.hpp"
#include "doctest.h"
#include "lf/error.hpp"
#include "lf/graph.hpp"

using namespace lf;

TEST_CASE("graph6 codec") {
  // K4 is "C~" and the 5-cycle 1-2-3-4-5 is "Dhc".
  CHECK(encode_graph6(complete_graph(4)) == "C~");
  CHECK(decode_graph6("C~") == complete_graph(4));
  CHECK(encode_graph6(cycle_graph(5)) == "Dhc");
  const SimpleGraph c5 = decode_graph6("Dhc");
  CHECK(c5 == cycle_graph(5));
  for (int n = 1; n <= 8; ++n) {
    const SimpleGraph g = complete_graph(n);
    CHECK(decode_graph6(encode_graph6(g)) == g);
  }
  CHECK_THROWS_AS(decode_graph6("C"), Error);
  CHECK_THROWS_AS(decode_graph6("C~~~"), Error);
  const auto many = read_graph6_lines("C~\n\n>>graph6<<Dhc\n");
  REQUIRE(many.size() == 2);
  CHECK(many[1] == cycle_graph(5));
}

TEST_CASE("graph names") {
  CHECK(parse_graph_name("K5") == complete_graph(5));
  CHECK(parse_graph_name("K3,3") == complete_bipartite(3, 3));
  CHECK(parse_graph_name("C~") == complete_graph(4));
}

TEST_CASE("degree, clique number and betti number") {
  const SimpleGraph k4 = complete_graph(4);
  CHECK(min_degree(k4) == 3);
  CHECK(clique_number(k4) == 4);
  CHECK(betti(k4) == 3);
  CHECK(betti(path_graph(6)) == 0);
  const SimpleGraph k33 = complete_bipartite(3, 3);
  CHECK(min_degree(k33) == 3);
  CHECK(clique_number(k33) == 2);
  CHECK(betti(k33) == 4);
  SimpleGraph two(4);
  two.add_edge(1, 2);
  two.add_edge(3, 4);
  CHECK_FALSE(is_connected(two));
  CHECK_THROWS_AS(betti(two), Error);
}

TEST_CASE("cycles of a given length") {
  auto c = find_cycle(complete_graph(4), 4);
  REQUIRE(c);
  CHECK(c->size() == 4);
  CHECK_FALSE(find_cycle(path_graph(5), 3));
  CHECK_FALSE(find_cycle(cycle_graph(7), 4));
  CHECK(find_cycle(cycle_graph(7), 7));
  // Exhaustive oracle: 4-cycles of K5 are 5 * 3 = 15.
  CHECK(all_cycles(complete_graph(5), 4).size() == 15);
  for (const auto& cyc : all_cycles(complete_graph(5), 4)) {
    for (std::size_t i = 0; i < cyc.size(); ++i) CHECK(complete_graph(5).has_edge(cyc[i], cyc[(i + 1) % cyc.size()]));
  }
}

TEST_CASE("disjoint 4- and 3-cycles") {
  auto p = find_disjoint_4_3_cycles(complete_graph(7));
  REQUIRE(p);
  std::set<VertexId> used(p->four.begin(), p->four.end());
  used.insert(p->three.begin(), p->three.end());
  CHECK(used.size() == 7);
  CHECK_FALSE(find_disjoint_4_3_cycles(cycle_graph(7)));

  // A subcase graph: 12 23 34 14, cross edges 16 46 37, and 65 57 25 35 27.
  SimpleGraph g(7);
  for (auto [a, b] : std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 6}, {4, 6}, {3, 7},
                                       {5, 6}, {5, 7}, {2, 5}, {2, 7}, {1, 5}})
    g.add_edge(a, b);
  auto q = find_disjoint_4_3_cycles(g);
  REQUIRE(q);
  for (std::size_t i = 0; i < 4; ++i) CHECK(g.has_edge(q->four[i], q->four[(i + 1) % 4]));
  for (std::size_t i = 0; i < 3; ++i) CHECK(g.has_edge(q->three[i], q->three[(i + 1) % 3]));
}

TEST_CASE("canonical forms identify isomorphic graphs") {
  SimpleGraph a(5), b(5);
  for (auto [x, y] : std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 3}}) a.add_edge(x, y);
  for (auto [x, y] : std::vector<Edge>{{2, 4}, {4, 1}, {1, 5}, {5, 3}, {3, 2}, {2, 1}}) b.add_edge(x, y);
  CHECK(canonical_form(a) == canonical_form(b));
  CHECK(is_canonical(canonical_form(a)));
  CHECK(canonical_form(a) != canonical_form(cycle_graph(5)));
}

TEST_CASE("enumeration of small graphs") {
  CHECK(enumerate_graphs(3, 3, true).empty());
  const auto four = enumerate_graphs(4, 3, true);
  REQUIRE(four.size() == 1);
  CHECK(canonical_form(four[0]) == canonical_form(complete_graph(4)));
  const auto five = enumerate_graphs(5, 4, true);
  REQUIRE(five.size() == 1);
  CHECK(canonical_form(five[0]) == canonical_form(complete_graph(5)));
}

TEST_CASE("enumeration agrees with the labelled count") {
  // Sum of n!/|Aut| over the classes equals the number of labelled graphs.
  for (auto [n, d] : std::vector<std::pair<int, int>>{{5, 2}, {6, 3}, {6, 2}}) {
    long long sum = 0;
    for (const auto& g : enumerate_graphs(n, d, true)) sum += oracle::labelling_count(g);
    CHECK(sum == oracle::labelled_count(n, d));
  }
}
