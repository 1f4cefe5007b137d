// Command-line front end. Exit codes: 0 YES (or success), 1 NO,
// 2 usage/parse error, 3 guard violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bgcolor/bench.hpp"
#include "bgcolor/errors.hpp"
#include "bgcolor/generators.hpp"
#include "bgcolor/modsolve.hpp"
#include "bgcolor/oracle.hpp"
#include "bgcolor/pipelines.hpp"
#include "bgcolor/reduction.hpp"
#include "bgcolor/report.hpp"

namespace {

using namespace bgcolor;

enum Exit { kYes = 0, kNo = 1, kUsage = 2, kGuard = 3 };

struct Globals {
  std::string input = "-";
  std::uint64_t seed = 1;
  int repeats = 3;
  bool json = false;
};

Graph load_graph(const std::string& path) {
  if (path == "-") return parse_dimacs(std::cin);
  return read_dimacs_file(path);
}

SolveOptions solve_options(const Globals& g) {
  SolveOptions o;
  o.seed = g.seed;
  o.repeats = g.repeats;
  return o;
}

int emit(const SolveReport& r, const Globals& g) {
  if (g.json) {
    std::cout << to_json(r).dump(2) << '\n';
  } else {
    std::cout << (r.decision ? "YES" : "NO") << "  problem=" << r.problem << " n=" << r.n << " target=" << r.target
              << " branch=" << to_string(r.branch);
    if (r.packing_size >= 0) std::cout << " packing=" << r.packing_size;
    if (r.modulator_size >= 0) std::cout << " modulator=" << r.modulator_size;
    std::cout << " elapsed_ms=" << r.elapsed_ms << '\n';
  }
  return r.decision ? kYes : kNo;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string join_labels(const VertexSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Below-guarantee graph coloring solvers"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--input,-i", g.input, "DIMACS .col file, '-' for stdin")->capture_default_str();
  app.add_option("--seed", g.seed, "root random seed")->capture_default_str();
  app.add_option("--repeats", g.repeats, "independent evaluations per cover type")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_flag("--json", g.json, "print the JSON report");
  app.fallthrough();

  int exit_code = kYes;

  // dual
  auto* dual = app.add_subcommand("dual", "is the graph (n - k)-colorable?");
  int dual_k = 0;
  bool baseline = false;
  dual->add_option("--k", dual_k, "colors saved below n")->required()->check(CLI::NonNegativeNumber);
  dual->add_flag("--baseline", baseline, "use the matching-based pipeline");
  dual->callback([&] {
    const Graph graph = load_graph(g.input);
    exit_code = emit(baseline ? solve_dual_coloring_baseline(graph, dual_k, solve_options(g))
                              : solve_dual_coloring(graph, dual_k, solve_options(g)),
                     g);
  });

  // guarantee
  auto* guar = app.add_subcommand("guarantee", "is the graph (omega + mu(complement) - k)-colorable?");
  int guar_k = 1;
  bool greedy_matching = false;
  guar->add_option("--k", guar_k, "colors saved below omega + mu(complement)")->required()->check(CLI::PositiveNumber);
  guar->add_flag("--greedy-matching", greedy_matching, "maximal instead of maximum matching in the packing certificate");
  guar->callback([&] {
    const Graph graph = load_graph(g.input);
    exit_code = emit(solve_below_structural_guarantee(graph, guar_k, solve_options(g), greedy_matching), g);
  });

  // modulator
  auto* mod = app.add_subcommand("modulator", "decide with a given modulator");
  int target = 0;
  std::string mod_list;
  std::string side = "color";
  mod->add_option("--target", target, "number of colors or cliques")->required();
  mod->add_option("--modulator", mod_list, "comma-separated 1-indexed vertices");
  mod->add_option("--side", side, "color: s is co-triangle-free; cover: s is triangle-free")
      ->check(CLI::IsMember({"cover", "color"}))
      ->capture_default_str();
  mod->callback([&] {
    const Graph graph = load_graph(g.input);
    const VertexSet s = parse_vertex_list(mod_list, graph.size());
    exit_code = emit(side == "cover" ? solve_clique_cover_with_modulator({graph, s, target}, solve_options(g))
                                     : solve_coloring_with_modulator(graph, s, target, solve_options(g)),
                     g);
  });

  // oracle
  auto* orc = app.add_subcommand("oracle", "exact exponential-time quantities");
  std::string quantity;
  orc->add_option("quantity", quantity, "chromatic | cover | mis | clique | matching")
      ->required()
      ->check(CLI::IsMember({"chromatic", "cover", "mis", "clique", "matching"}));
  orc->callback([&] {
    const Graph graph = load_graph(g.input);
    int value = 0;
    if (quantity == "chromatic") value = oracle::chromatic_number_exact(graph);
    else if (quantity == "cover") value = oracle::clique_cover_number_exact(graph);
    else if (quantity == "mis") value = oracle::max_independent_set_exact(graph);
    else if (quantity == "clique") value = oracle::clique_number_exact(graph);
    else value = oracle::maximum_matching_exact(graph);
    if (g.json)
      std::cout << nlohmann::json{{"quantity", quantity}, {"n", graph.size()}, {"value", value}}.dump() << '\n';
    else
      std::cout << value << '\n';
  });

  // reduce
  auto* red = app.add_subcommand("reduce", "colored-clique reduction instance");
  int red_k = 0;
  int red_n = 0;
  std::string edges_file;
  std::optional<double> random_p;
  bool red_complement = false;
  std::string red_out = "-";
  std::string sidecar;
  red->add_option("--k", red_k, "number of parts")->required()->check(CLI::PositiveNumber);
  red->add_option("--n", red_n, "vertices per part")->required()->check(CLI::PositiveNumber);
  auto* edges_opt = red->add_option("--edges", edges_file, "DIMACS file on k*n vertices, part-major labels");
  red->add_option("--random", random_p, "cross-part edge probability")->excludes(edges_opt);
  red->add_flag("--complement", red_complement, "emit the coloring-side (complemented) graph");
  red->add_option("--out", red_out, "DIMACS output path")->capture_default_str();
  red->add_option("--sidecar", sidecar, "JSON sidecar path (stdout when the graph goes to a file)");
  red->callback([&] {
    ColoredCliqueInstance inst{red_k, red_n, {}};
    if (!edges_file.empty()) {
      const Graph src = read_dimacs_file(edges_file);
      if (src.size() != red_k * red_n) throw ParseError("--edges graph must have k*n vertices");
      inst.edges = src.edges();
    } else {
      inst = random_colored_clique_instance(red_k, red_n, random_p.value_or(0.5), g.seed);
    }
    const ReducedInstance r = build_reduction(inst);
    const Graph out_graph = red_complement ? complement(r.graph) : r.graph;
    std::ostringstream dimacs;
    const std::string head = "reduced instance k=" + std::to_string(red_k) + " n=" + std::to_string(red_n) +
                             " target=" + std::to_string(r.target) + (red_complement ? " side=color" : " side=cover");
    const std::vector<std::string> comments{head};
    write_dimacs(dimacs, out_graph, comments);
    write_text(red_out, dimacs.str());
    nlohmann::json meta = {{"k", red_k},
                           {"n", red_n},
                           {"N", out_graph.size()},
                           {"target", r.target},
                           {"side", red_complement ? "color" : "cover"},
                           {"has_colored_clique", has_colored_clique(inst)},
                           {"labels", r.labels}};
    if (!sidecar.empty())
      write_text(sidecar, meta.dump(2) + "\n");
    else if (red_out != "-")
      std::cout << meta.dump(2) << '\n';
  });

  // gen
  auto* gen = app.add_subcommand("gen", "random instances");
  std::string family;
  int gen_n = 10;
  double prob = 0.5;
  int p_mod = 0;
  bool balanced = false;
  std::string gen_side = "color";
  std::string gen_out = "-";
  gen->add_option("family", family, "gnp | planted")->required()->check(CLI::IsMember({"gnp", "planted"}));
  gen->add_option("--n", gen_n, "vertex count")->check(CLI::NonNegativeNumber)->capture_default_str();
  gen->add_option("--prob", prob, "edge probability")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  gen->add_option("--p-mod", p_mod, "planted modulator size")->check(CLI::NonNegativeNumber);
  gen->add_flag("--balanced", balanced, "equal-size bipartition for planted instances");
  gen->add_option("--side", gen_side, "planted: emit the color or cover side")
      ->check(CLI::IsMember({"cover", "color"}))
      ->capture_default_str();
  gen->add_option("--out", gen_out, "output path")->capture_default_str();
  gen->callback([&] {
    std::ostringstream dimacs;
    if (family == "gnp") {
      const std::vector<std::string> comments{"gnp n=" + std::to_string(gen_n) + " prob=" + std::to_string(prob) +
                                              " seed=" + std::to_string(g.seed)};
      write_dimacs(dimacs, gen_gnp(gen_n, prob, g.seed), comments);
    } else {
      const auto inst = gen_planted_comodulator(gen_n, p_mod, g.seed, prob, balanced);
      const std::vector<std::string> comments{"planted side=" + gen_side + " seed=" + std::to_string(g.seed),
                                              "modulator " + join_labels(inst.s)};
      write_dimacs(dimacs, gen_side == "cover" ? inst.cover_side : inst.coloring_side, comments);
    }
    write_text(gen_out, dimacs.str());
  });

  // bench
  auto* bench = app.add_subcommand("bench", "2^p scaling sweep on planted instances");
  int bench_n = 22;
  int p_min = 8;
  int p_max = 13;
  int trials = 5;
  int bench_target = 9;
  int timing_runs = 3;
  std::string csv = "-";
  bench->add_option("--n", bench_n, "vertex count")->capture_default_str();
  bench->add_option("--p-min", p_min, "smallest modulator size")->capture_default_str();
  bench->add_option("--p-max", p_max, "largest modulator size")->check(CLI::Range(0, kMaxRingVariables))->capture_default_str();
  bench->add_option("--trials", trials, "instances per p")->check(CLI::PositiveNumber)->capture_default_str();
  bench->add_option("--target", bench_target, "clique-cover target")->capture_default_str();
  bench->add_option("--runs", timing_runs, "timed runs per instance, fastest kept")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--csv", csv, "CSV output path")->capture_default_str();
  bench->callback([&] {
    std::vector<int> ps;
    for (int p = p_min; p <= p_max; ++p) ps.push_back(p);
    SolveOptions base;
    base.repeats = g.repeats;
    const auto records = bench_scaling(ps, bench_n, trials, g.seed, bench_target, base, timing_runs);
    std::ostringstream out;
    write_csv(out, records);
    write_text(csv, out.str());
    double prev = 0.0;
    for (auto [p, median] : median_by_p(records)) {
      std::cerr << "p=" << p << " median_ms=" << median;
      if (prev > 0.0) std::cerr << " ratio=" << median / prev;
      std::cerr << '\n';
      prev = median;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  } catch (const GuardError& e) {
    std::cerr << "guard: " << e.what() << '\n';
    return kGuard;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return exit_code;
}
