#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "lf/diagram.hpp"

namespace lf {

struct Letter {
  int gen;
  int exp;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

Word free_reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
/// "x3 x1^-1 ..." style text; the empty word is "1".
std::string word_to_string(const Word& w);

struct Presentation {
  int generator_count = 0;     // generator i is arc i
  std::vector<Word> relators;  // one per diagram node, in node order
};

Presentation build_presentation(const Diagram& d);

struct SpanningTree {
  // tree_edge[i] for node i >= 1; tree_edge[0] = -1.
  std::vector<int> tree_edge;
};

/// Tree edges of the left-to-right reduction. Throws NotDescendingScene
/// if some node other than the first has no edge to its left.
SpanningTree build_spanning_tree(const Diagram& d);

struct EliminationStep {
  int node;
  std::string node_name;
  int generator;
  Word value;  // the word substituted for the generator
  std::size_t w1_length;
};

struct FreeCertificate {
  int rank = 0;
  std::vector<int> surviving;  // generators left after elimination
  std::vector<EliminationStep> trace;
};

/// Solves each relator W_i (i >= 2) for the generator of its tree edge and
/// substitutes into W_1. Throws AssertionViolated if the generator occurs
/// elsewhere or if W_1 does not reduce to the empty word.
FreeCertificate eliminate(const Presentation& p, const Diagram& d, const SpanningTree& t,
                          bool reduce_each_step = true);

struct Abelianization {
  int free_rank = 0;
  std::vector<mpz_class> torsion;
};

/// Smith normal form of the exponent-sum matrix.
Abelianization abelianization(const Presentation& p);

/// Invariant factors of an integer matrix (all nonzero diagonal entries).
std::vector<mpz_class> smith_diagonal(std::vector<std::vector<mpz_class>> m);

/// Re-expands every eliminated generator through the trace and checks that
/// the relators then hold in the free group on the survivors.
bool replay_elimination(const Presentation& p, const FreeCertificate& cert);

}  // namespace lf
