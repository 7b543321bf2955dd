#include "trifree/coloring.hpp"
#include "trifree/dimacs.hpp"
#include "trifree/document.hpp"
#include "trifree/graph.hpp"
#include "trifree/json_io.hpp"
#include "trifree/online_game.hpp"
#include "trifree/svg.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace trifree;

enum Exit : int { ok = 0, io = 1, flags = 2, invariant = 3, timeout = 4, bad_input = 5 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write '" + path + "'");
}

FamilyDocument load_family(const std::string& path) { return family_from_json(read_file(path)); }

double default_timeout() {
  if (const char* env = std::getenv("TRIFREE_TIMEOUT")) {
    try {
      return std::stod(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("TRIFREE_TIMEOUT", std::string("not a number: ") + env);
    }
  }
  return 0;
}

struct Config {
  unsigned jobs = 1;
  double timeout_s = 0;

  // build / encode
  std::string mode = "independent";
  std::string shape = "frame";
  int k = 1;
  std::string epsilon;
  bool no_augment = false;
  int budget = 0;
  int tree_limit = kDefaultTreeLimit;
  std::string output;
  std::string svg_output;

  // verify / chi / render / export-dimacs
  std::string input;
  bool no_rebuild = false;
  bool dimacs_input = false;
  std::string witness_output;
  bool json = false;
  double svg_width = 800;
  bool no_probes = false;

  // game
  std::string painter = "firstfit";
  int verify_budget = -1;
};

int run_build(const Config& cfg) {
  BuildRequest request;
  request.mode = parse_mode(cfg.mode);
  request.shape = cfg.shape;
  request.k = cfg.k;
  if (!cfg.epsilon.empty()) request.epsilon = Rat::parse(cfg.epsilon);
  request.augment = !cfg.no_augment;
  request.budget = cfg.budget;
  request.tree_limit = cfg.tree_limit;
  const FamilyDocument doc = build_document(request);
  write_file(cfg.output, family_to_json(doc));
  if (!cfg.svg_output.empty()) write_file(cfg.svg_output, render_svg(doc));
  std::cerr << doc.copies.size() << " copies, " << doc.probes.size() << " probes\n";
  return ok;
}

int run_verify(const Config& cfg) {
  const FamilyDocument doc = load_family(cfg.input);
  const VerifyReport report = verify_document(doc, {cfg.jobs, !cfg.no_rebuild});
  for (const auto& c : report.checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) std::cout << ": " << c.detail;
    std::cout << '\n';
  }
  return report.ok() ? ok : invariant;
}

int run_chi(const Config& cfg) {
  Graph g;
  if (cfg.dimacs_input) {
    g = parse_dimacs(read_file(cfg.input));
  } else {
    g = intersection_graph(load_family(cfg.input).copies, cfg.jobs);
  }
  SolverOptions options;
  options.timeout = std::chrono::milliseconds(static_cast<long long>(cfg.timeout_s * 1000));
  const ChromaticResult r = chromatic_number(g, options);
  if (cfg.json) {
    std::cout << chromatic_to_json(r, g);
  } else {
    std::cout << "vertices " << g.size() << ", edges " << g.edge_count() << '\n';
    if (r.exact()) {
      std::cout << "chi = " << r.lower << '\n';
    } else {
      std::cout << "chi in [" << r.lower << ", " << r.upper << "] (timed out)\n";
    }
    if (r.certificate.kind == LowerBoundCertificate::Kind::clique) {
      std::cout << "lower bound: clique of size " << r.certificate.clique.size() << '\n';
    } else {
      std::cout << "lower bound: no proper coloring with " << r.certificate.refuted_colors
                << " colors (exhausted search)\n";
    }
    std::cout << "witness: proper coloring with " << r.upper << " colors, " << r.nodes << " search nodes\n";
  }
  if (!cfg.witness_output.empty()) write_file(cfg.witness_output, coloring_to_json(r.witness));
  return r.timed_out ? timeout : ok;
}

int run_game_cmd(const Config& cfg) {
  if (cfg.verify_budget >= 0) {
    const MinimaxResult m = minimax_search(cfg.k, cfg.verify_budget);
    std::cout << "k " << cfg.k << ", budget " << cfg.verify_budget << ": "
              << (m.presenter_wins ? "every painter exceeds the budget" : "a painter stays within the budget")
              << " (" << m.leaves << " leaves)\n";
    return ok;
  }
  std::unique_ptr<Painter> painter;
  if (cfg.painter == "firstfit") {
    painter = std::make_unique<FirstFitPainter>();
  } else if (cfg.painter == "repl") {
    painter = std::make_unique<ReplPainter>(std::cin, std::cerr);
  } else {
    painter = std::make_unique<MinimaxPainter>(cfg.k);
  }
  const GameResult result = run_game(cfg.k, *painter);
  if (cfg.output.empty() || cfg.output == "-") {
    std::cout << transcript_to_json(result, cfg.k, cfg.painter);
  } else {
    write_file(cfg.output, transcript_to_json(result, cfg.k, cfg.painter));
  }
  std::cerr << result.transcript.size() << " intervals, " << result.colors_used << " colors\n";
  return ok;
}

int run_render(const Config& cfg) {
  SvgOptions options;
  options.width = cfg.svg_width;
  options.probes = !cfg.no_probes;
  write_file(cfg.output, render_svg(load_family(cfg.input), options));
  return ok;
}

int run_export_dimacs(const Config& cfg) {
  const FamilyDocument doc = load_family(cfg.input);
  const Graph g = intersection_graph(doc.copies, cfg.jobs);
  std::vector<std::string> comments{"intersection graph of a " + to_string(doc.mode) + " " + doc.shape +
                                    " family, k = " + std::to_string(doc.k)};
  for (std::size_t v = 0; v < doc.copies.size(); ++v) {
    comments.push_back("vertex " + std::to_string(v + 1) + " " + doc.copies[v].lineage().str());
  }
  write_file(cfg.output, to_dimacs(g, comments));
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Triangle-free geometric families with large chromatic number"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-j,--jobs", cfg.jobs, "Worker threads for intersection tests")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* build = app.add_subcommand("build", "Build a family and write its JSON");
  build->add_option("--mode", cfg.mode, "independent | uniform | encoded-frames")
      ->check(CLI::IsMember({"independent", "uniform", "encoded-frames"}))
      ->capture_default_str();
  build->add_option("--shape", cfg.shape, "Catalog shape")->capture_default_str();
  build->add_option("-k,--k", cfg.k, "Recursion depth")->required()->check(CLI::Range(1, 8));
  build->add_option("--epsilon", cfg.epsilon, "Probe aspect slack, uniform mode only (e.g. 1/2)");
  build->add_flag("--no-augment", cfg.no_augment, "Omit the diagonals for the final probes");
  build->add_option("--budget", cfg.budget, "Encoded frames: painter color budget (default k+1)");
  build->add_option("-o,--output", cfg.output, "Output file (default stdout)");
  build->add_option("--svg", cfg.svg_output, "Also render to this SVG file");

  auto* encode = app.add_subcommand("encode", "Encode the game strategy as a frame family");
  encode->add_option("-k,--k", cfg.k, "Strategy depth")->required()->check(CLI::Range(1, 8));
  encode->add_option("--budget", cfg.budget, "Painter color budget (default k+1)");
  encode->add_option("--max-k", cfg.tree_limit, "Refuse trees deeper than this")->capture_default_str();
  encode->add_option("-o,--output", cfg.output, "Output file (default stdout)");
  encode->add_option("--svg", cfg.svg_output, "Also render to this SVG file");

  auto* verify = app.add_subcommand("verify", "Check every invariant of a family file");
  verify->add_option("input", cfg.input, "Family JSON ('-' for stdin)")->required();
  verify->add_flag("--no-rebuild", cfg.no_rebuild, "Skip the comparison with a fresh build");

  auto* chi = app.add_subcommand("chi", "Exact chromatic number of the intersection graph");
  chi->add_option("input", cfg.input, "Family JSON or DIMACS file")->required();
  chi->add_flag("--dimacs", cfg.dimacs_input, "Input is a DIMACS edge file");
  chi->add_option("--timeout", cfg.timeout_s, "Seconds; 0 waits forever (default $TRIFREE_TIMEOUT)");
  chi->add_option("--witness", cfg.witness_output, "Write the witness coloring JSON here");
  chi->add_flag("--json", cfg.json, "Print the result as JSON");

  auto* game = app.add_subcommand("game", "Play the on-line interval game");
  game->add_option("-k,--k", cfg.k, "Strategy depth")->required()->check(CLI::Range(1, 12));
  game->add_option("--painter", cfg.painter, "firstfit | repl | minimax")
      ->check(CLI::IsMember({"firstfit", "repl", "minimax"}))
      ->capture_default_str();
  game->add_option("--verify-budget", cfg.verify_budget,
                   "Search all painters instead and report whether any keeps within this many colors");
  game->add_option("-o,--output", cfg.output, "Transcript JSON (default stdout)");

  auto* render = app.add_subcommand("render", "Render a family file as SVG");
  render->add_option("input", cfg.input, "Family JSON")->required();
  render->add_option("-o,--output", cfg.output, "SVG file (default stdout)");
  render->add_option("--width", cfg.svg_width, "viewBox width")->check(CLI::PositiveNumber)->capture_default_str();
  render->add_flag("--no-probes", cfg.no_probes, "Draw copies only");

  auto* dimacs = app.add_subcommand("export-dimacs", "Write the intersection graph in DIMACS format");
  dimacs->add_option("input", cfg.input, "Family JSON")->required();
  dimacs->add_option("-o,--output", cfg.output, ".col file (default stdout)");

  try {
    cfg.timeout_s = default_timeout();
    app.parse(argc, argv);
    if (*build && (cfg.mode == "uniform") == cfg.epsilon.empty()) {
      throw CLI::ValidationError("--epsilon", "required with --mode uniform and only there");
    }
    if (*game && cfg.verify_budget >= 0 && game->count("--painter")) {
      throw CLI::ValidationError("--verify-budget", "does not take a painter");
    }
    if (cfg.timeout_s < 0) throw CLI::ValidationError("--timeout", "must be non-negative");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : flags;
  }

  try {
    if (*build) return run_build(cfg);
    if (*encode) {
      cfg.mode = "encoded-frames";
      return run_build(cfg);
    }
    if (*verify) return run_verify(cfg);
    if (*chi) return run_chi(cfg);
    if (*game) return run_game_cmd(cfg);
    if (*render) return run_render(cfg);
    if (*dimacs) return run_export_dimacs(cfg);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return io;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return io;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return bad_input;
  } catch (const IllegalColor& e) {
    std::cerr << "error: " << e.what() << '\n';
    return bad_input;
  } catch (const ConstructionError& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return invariant;
  } catch (const IllegalMove& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return invariant;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return flags;
  }
  return flags;
}
