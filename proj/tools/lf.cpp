// Command-line front end: analyze, random, enumerate, diagram, fixtures.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lf/analyzer.hpp"
#include "lf/error.hpp"
#include "lf/fixtures.hpp"
#include "lf/report.hpp"
#include "lf/svg.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw lf::Error(lf::ErrorCode::IOError, "cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
  } else {
    lf::write_text_file(out, text);
  }
}

// "fixture:<name>" or a path to an embedding file.
lf::LinearEmbedding load_embedding(const std::string& source) {
  if (source.rfind("fixture:", 0) == 0) {
    auto f = lf::fixture(source.substr(8));
    if (auto* e = std::get_if<lf::LinearEmbedding>(&f)) return *e;
    throw lf::Error(lf::ErrorCode::UnknownFixture, source + " is a diagram, not an embedding");
  }
  return lf::parse_embedding(read_file(source));
}

bool looks_like_diagram_spec(const std::string& text) {
  std::istringstream in(text);
  std::string word;
  while (in >> word) {
    if (word[0] == '#') {
      std::getline(in, word);
      continue;
    }
    return word == "vertex" || word == "crossing" || word == "edge" || word == "rotation";
  }
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Freeness analysis for straight-line spatial graphs"};
  app.require_subcommand(1);

  std::string input, out;
  std::uint64_t seed = 1;
  int max_slides = 2;
  bool bipartite = false;
  auto* analyze = app.add_subcommand("analyze", "certify freeness or gather tricoloring evidence");
  analyze->add_option("file", input, "embedding file, or fixture:<name>")->required();
  analyze->add_option("--seed", seed, "seed for perturbation and projection frames");
  analyze->add_option("--max-slides", max_slides, "depth of the move search");
  analyze->add_option("--out", out, "write the JSON report here");
  analyze->add_flag("--bipartite", bipartite, "use the two-colour strategy for K_{n,m}");

  std::string graph_name;
  auto* random = app.add_subcommand("random", "random straight-line embedding");
  random->add_option("--graph", graph_name, "graph6, K<n> or K<a>,<b>")->required();
  random->add_option("--seed", seed, "seed");
  random->add_option("--out", out, "write the embedding here");

  int n = 7, min_deg = 3, trials = 0;
  std::string check = "four-cycle";
  auto* enumerate = app.add_subcommand("enumerate", "exhaustive small-graph checks");
  enumerate->add_option("--n", n, "vertex count")->check(CLI::Range(1, 8));
  enumerate->add_option("--min-deg", min_deg, "minimum degree");
  enumerate->add_option("--check", check, "four-cycle, subcases or pipeline")
      ->check(CLI::IsMember({"four-cycle", "subcases", "pipeline"}));
  enumerate->add_option("--trials", trials, "random embeddings per graph (pipeline)");
  enumerate->add_option("--seed", seed, "seed for pipeline trials");
  enumerate->add_option("--out", out, "write the JSON report here");

  std::string direction, svg, spec_out;
  auto* diagram = app.add_subcommand("diagram", "project an embedding (or read a diagram spec) and draw it");
  diagram->add_option("file", input, "embedding file, diagram spec, or fixture:<name>")->required();
  diagram->add_option("--direction", direction, "projection direction dx,dy,dz");
  diagram->add_option("--seed", seed, "seed for the projection frame");
  diagram->add_option("--svg", svg, "SVG output path")->required();
  diagram->add_option("--spec", spec_out, "also write the diagram in spec form");

  std::string fixture_name;
  auto* fixtures = app.add_subcommand("fixtures", "print a built-in fixture");
  fixtures->add_option("--name", fixture_name, "tetrahedron, fig3:<n>, fig4, fig5, theta or trefoil")->required();
  fixtures->add_option("--out", out, "write the fixture here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      lf::AnalyzeOptions opt;
      opt.seed = seed;
      opt.max_slides = max_slides;
      const lf::LinearEmbedding e = load_embedding(input);
      const lf::AnalysisReport r = bipartite ? lf::analyze_bipartite(e, opt) : lf::analyze(e, opt);
      emit(lf::report_to_json(r), out);
      return r.status == lf::Status::Unknown ? 2 : 0;
    }
    if (*random) {
      emit(lf::format_embedding(lf::random_embedding(lf::parse_graph_name(graph_name), seed)), out);
      return 0;
    }
    if (*enumerate) {
      lf::EnumerationReport r;
      if (check == "subcases") {
        r.n = 7;
        r.subcases = lf::subcase_checks();
      } else {
        r = lf::four_cycle_sweep(n, min_deg);
        if (check == "pipeline") lf::pipeline_trials(r, trials > 0 ? trials : 1, seed);
      }
      emit(lf::report_to_json(r), out);
      return 0;
    }
    if (*diagram) {
      lf::Diagram d;
      std::string text = input.rfind("fixture:", 0) == 0 ? std::string() : read_file(input);
      if (input.rfind("fixture:", 0) == 0) {
        auto f = lf::fixture(input.substr(8));
        if (auto* dd = std::get_if<lf::Diagram>(&f)) {
          d = *dd;
        } else {
          text = lf::format_embedding(std::get<lf::LinearEmbedding>(f));
        }
      }
      if (!text.empty() && looks_like_diagram_spec(text)) {
        d = lf::diagram_from_spec(text);
      } else if (!text.empty()) {
        const lf::LinearEmbedding e = lf::parse_embedding(text);
        lf::Vec3 l;
        if (!direction.empty()) {
          l = lf::parse_vec3(direction);
        } else if (auto cert = lf::find_descending_direction(e)) {
          l = cert->l;
        } else {
          l = lf::direction_candidates(e).front();
        }
        d = lf::build_diagram(lf::project(e, l, seed));
      }
      lf::write_svg(d, svg);
      if (!spec_out.empty()) lf::write_text_file(spec_out, lf::diagram_to_spec(d));
      const auto colours = lf::count_tricolorings(d);
      std::cout << "nodes " << d.node_count() << " crossings " << d.crossing_count() << " arcs " << d.arc_count
                << " tricolorings " << colours.count.get_str() << '\n';
      return 0;
    }
    if (*fixtures) {
      const auto f = lf::fixture(fixture_name);
      if (const auto* e = std::get_if<lf::LinearEmbedding>(&f)) {
        emit(lf::format_embedding(*e), out);
      } else {
        emit(lf::diagram_to_spec(std::get<lf::Diagram>(f)), out);
      }
      return 0;
    }
  } catch (const lf::Error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
  return 1;
}
