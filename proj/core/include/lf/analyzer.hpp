#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lf/diagram.hpp"
#include "lf/direction.hpp"
#include "lf/embedding.hpp"
#include "lf/moves.hpp"
#include "lf/tricolor.hpp"
#include "lf/wirtinger.hpp"

namespace lf {

enum class Status { Free, NonfreeEvidence, Unknown };
std::string to_string(Status s);

struct AnalyzeOptions {
  std::uint64_t seed = 1;
  int max_slides = 2;     // depth of the move search
  int max_states = 256;   // embeddings visited by the move search
  int max_cycles = 256;   // cycle subdiagrams coloured in the evidence step
};

// Everything derived from one descending direction.
struct CertifiedScene {
  PlanarScene scene;
  Diagram diagram;
  Presentation presentation;
  SpanningTree tree;
  FreeCertificate certificate;
  Abelianization abelian;
};

/// Projects along cert.l and runs the reduction. Throws AssertionViolated if
/// the abelianization disagrees with the betti number.
CertifiedScene certify_direction(const LinearEmbedding& e, const DirectionCertificate& cert, std::uint64_t seed);

struct ColoringEvidence {
  std::string kind;              // diagram, contracted, bouquet, cycle
  std::vector<VertexId> cycle;   // for kind == cycle
  int arcs = 0;
  int crossings = 0;
  int graph_nodes = 0;
  int dimension = 0;
  mpz_class count = 0;
  std::vector<std::string> contractions;
};

struct AnalysisReport {
  Status status = Status::Unknown;
  std::string graph6;
  int vertices = 0, edges = 0, betti = 0;
  AnalyzeOptions options;
  bool perturbed = false;
  std::optional<int> bipartite_case;
  std::optional<DirectionCertificate> direction;
  std::optional<ProjectionFrame> frame;
  int crossings = 0;
  int diagram_nodes = 0;
  int generators = 0;
  std::optional<FreeCertificate> certificate;
  std::optional<Abelianization> abelian;
  std::vector<MoveRecord> moves;
  int free_factors = 0;
  std::vector<ColoringEvidence> colorings;
  std::vector<std::string> argument;
};

/// Certify, else search moves and certify, else collect colouring evidence.
/// Throws InvalidEmbedding if the graph is disconnected or cannot be put in
/// general position.
AnalysisReport analyze(const LinearEmbedding& e, const AnalyzeOptions& options = {});

/// Two-colour strategy for complete bipartite graphs: certify in a cell whose
/// two lowest vertices differ in colour, or slide once when the two lowest
/// agree and the third differs. Falls back to analyze. Throws NotBipartite.
AnalysisReport analyze_bipartite(const LinearEmbedding& e, const AnalyzeOptions& options = {});

/// Colour classes of a complete bipartite graph, or Error(NotBipartite).
std::vector<int> bipartite_colours(const SimpleGraph& g);

struct SubcaseResult {
  std::string name;
  std::vector<Edge> cross_edges;  // edges between {6,7} and {1,3,4}
  int completions = 0;            // admissible completions examined
  int with_pair = 0;              // completions with disjoint 4- and 3-cycles
  bool seven_attached_to_2_and_5 = true;
  std::vector<std::string> pairs; // one line per completion
};

struct EnumerationReport {
  int n = 7;
  int min_degree = 3;
  int graphs = 0;
  int without_four_cycle = 0;
  int lemma3_applicable = 0;
  std::vector<std::string> counterexamples;
  std::vector<SubcaseResult> subcases;
  int trials = 0;
  int trial_runs = 0;
  int trial_free = 0;
  std::vector<std::string> trial_failures;
};

EnumerationReport four_cycle_sweep(int n = 7, int min_deg = 3);
std::vector<SubcaseResult> subcase_checks();
void pipeline_trials(EnumerationReport& report, int trials, std::uint64_t seed);
EnumerationReport run_enumeration_checks(int n = 7, int trials = 0, std::uint64_t seed = 1);

}  // namespace lf
