// qturan: extremal S_{n-1,n-1}-free subgraphs of the hypercube.
//
// Exit codes: 0 verified / feasible, 1 refuted, 2 malformed input.

#include "qturan/cli_io.hpp"
#include "qturan/construct.hpp"
#include "qturan/forbidden.hpp"
#include "qturan/repair.hpp"
#include "qturan/solver.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace qturan;

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kMalformed = 2;

DoubleStarPattern parse_pattern(const std::string &text) {
  std::istringstream in(text);
  int k = 0, l = 0;
  char comma = 0;
  if (!(in >> k >> comma >> l) || comma != ',' || !in.eof())
    throw FormatError("--pattern: expected k,l (got '" + text + "')");
  try {
    return DoubleStarPattern(k, l);
  } catch (const std::invalid_argument &e) {
    throw FormatError(std::string("--pattern: ") + e.what());
  }
}

std::string bits(CubeVertex v, int n) {
  std::string s;
  for (int d = n - 1; d >= 0; --d)
    s += ((v.mask >> d) & 1u) ? '1' : '0';
  return s;
}

void print_witness(const EmbeddingWitness &w, int n) {
  std::cout << "  centers: " << bits(w.center_u, n) << " - " << bits(w.center_v, n) << "\n";
  std::cout << "  leaves at " << bits(w.center_u, n) << ":";
  for (auto x : w.leaves_u)
    std::cout << ' ' << bits(x, n);
  std::cout << "\n  leaves at " << bits(w.center_v, n) << ":";
  for (auto x : w.leaves_v)
    std::cout << ' ' << bits(x, n);
  std::cout << "\n";
}

int run_formula(int n) {
  std::cout << turan_formula(n) << "\n";
  return kOk;
}

int run_construct(int n, bool prime, const std::string &out) {
  const auto pair = extremal_pair(n);
  const auto &g = prime ? pair.g_prime : pair.g;
  write_file(out, write_subgraph(g, {{"source", prime ? "construct:g_prime" : "construct:g"}}));
  std::cout << "n=" << n << " edges=" << g.edge_count() << " deleted=" << g.slot_count() - g.edge_count()
            << " free=" << (is_balanced_free(g) ? "yes" : "no") << " -> " << out << "\n";
  return kOk;
}

int run_check(const std::string &in, const std::optional<std::string> &pattern_text, bool repair,
              const std::optional<std::string> &out) {
  const auto g = read_subgraph(read_file(in));
  const int n = g.dimension();
  const auto pattern =
      pattern_text ? parse_pattern(*pattern_text) : DoubleStarPattern::balanced_for(n);
  std::cout << "n=" << n << " edges=" << g.edge_count() << " min_degree=" << g.min_degree()
            << " full_degree_vertices=" << g.full_degree_set().size() << "\n";
  if (auto w = contains_double_star(g, pattern)) {
    std::cout << "contains S_{" << pattern.k << "," << pattern.l << "}\n";
    print_witness(*w, n);
    return kRefuted;
  }
  std::cout << "free of S_{" << pattern.k << "," << pattern.l << "}\n";
  if (!repair)
    return kOk;
  if (pattern != DoubleStarPattern::balanced_for(n))
    throw FormatError("--repair applies to the balanced pattern (n-1,n-1) only");
  auto [fixed, report] = normalize_min_degree(g);
  std::cout << "repair: steps=" << report.steps.size() << " edge_delta=" << report.edge_delta
            << " was_edge_maximal=" << (report.was_edge_maximal ? "yes" : "no") << "\n";
  for (const auto &step : report.steps) {
    std::cout << "  " << (step.kind == RepairKind::swap ? "swap" : "add ") << " +"
              << bits(step.added.low(), n) << "-" << bits(step.added.high(), n);
    if (step.removed)
      std::cout << " -" << bits(step.removed->low(), n) << "-" << bits(step.removed->high(), n);
    std::cout << "\n";
  }
  std::cout << "after repair: edges=" << fixed.edge_count() << " min_degree=" << fixed.min_degree()
            << " free=" << (is_balanced_free(fixed) ? "yes" : "no") << "\n";
  if (out)
    write_file(*out, write_subgraph(fixed, {{"source", "repair"}}));
  return kOk;
}

int run_solve(int n, const std::string &mode, std::optional<std::uint64_t> budget, int threads,
              const std::optional<std::string> &pattern_text, const std::optional<std::string> &cert) {
  const auto start = std::chrono::steady_clock::now();
  SolveResult result;
  if (mode == "exhaustive") {
    const auto pattern =
        pattern_text ? parse_pattern(*pattern_text) : DoubleStarPattern::balanced_for(n);
    result = exhaustive_turan(n, pattern);
  } else {
    if (pattern_text)
      throw FormatError("--pattern is only supported with --mode exhaustive");
    BnbOptions options;
    options.node_budget = budget.value_or(kDefaultNodeBudget);
    options.threads = threads;
    result = min_edge_dominating(n, options);
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "n=" << n << " mode=" << mode << " optimum_edges=" << result.optimum_edges
            << " deleted=" << result.deletions.deleted.size()
            << " nodes=" << result.nodes_explored
            << " proof_complete=" << (result.proof_complete ? "yes" : "no") << " time=" << seconds
            << "s\n";
  if (n >= 3 && n <= kMaxFormulaDimension && mode == "bnb")
    std::cout << "closed form 2^(n-3)(4n-3) = " << turan_formula(n) << "\n";
  if (cert) {
    write_file(*cert, write_certificate(result.deletions,
                                        {{"source", "solve:" + mode},
                                         {"nodes_explored", std::to_string(result.nodes_explored)}}));
    std::cout << "certificate -> " << *cert << "\n";
  }
  return verify_certificate(result.deletions) || !result.deletions.claimed_optimal ? kOk : kRefuted;
}

int run_export(const std::string &in, const std::string &format, const std::optional<std::string> &out) {
  if (format != "dimacs")
    throw FormatError("--format: only 'dimacs' is supported");
  const auto text = export_dimacs(read_subgraph(read_file(in)));
  if (out)
    write_file(*out, text);
  else
    std::cout << text;
  return kOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Extremal double-star-free subgraphs of the hypercube"};
  app.require_subcommand(1);

  int n = 0;
  bool prime = false, repair = false;
  std::string in, out, mode = "bnb", format = "dimacs";
  std::optional<std::string> pattern, cert, out_opt;
  std::optional<std::uint64_t> budget;
  int threads = 1;

  auto *formula = app.add_subcommand("formula", "Print the closed-form edge count");
  formula->add_option("--n", n, "Dimension")->required();

  auto *construct = app.add_subcommand("construct", "Write one graph of the extremal pair");
  construct->add_option("--n", n, "Dimension (>= 3)")->required();
  construct->add_flag("--prime", prime, "Write the second graph of the pair");
  construct->add_option("--out", out, "Output JSON file")->required();

  auto *check = app.add_subcommand("check", "Test a subgraph for a double star");
  check->add_option("--in", in, "Subgraph or certificate JSON")->required();
  check->add_option("--pattern", pattern, "k,l (default n-1,n-1)");
  check->add_flag("--repair", repair, "Raise the minimum degree to n-1 and report the steps");
  check->add_option("--out", out_opt, "Write the repaired graph here");

  auto *solve = app.add_subcommand("solve", "Compute the optimum by search");
  solve->add_option("--n", n, "Dimension")->required();
  solve->add_option("--mode", mode, "exhaustive | bnb")
      ->check(CLI::IsMember({"exhaustive", "bnb"}));
  solve->add_option("--budget", budget, "Branch-and-bound node budget");
  solve->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 256));
  solve->add_option("--pattern", pattern, "k,l for exhaustive mode");
  solve->add_option("--cert", cert, "Write the deletion certificate here");

  auto *exp = app.add_subcommand("export", "Export a subgraph");
  exp->add_option("--in", in, "Subgraph JSON")->required();
  exp->add_option("--format", format, "dimacs");
  exp->add_option("--out", out_opt, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kMalformed;
  }

  try {
    if (*formula)
      return run_formula(n);
    if (*construct)
      return run_construct(n, prime, out);
    if (*check)
      return run_check(in, pattern, repair, out_opt);
    if (*solve)
      return run_solve(n, mode, budget, threads, pattern, cert);
    if (*exp)
      return run_export(in, format, out_opt);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  }
  return kMalformed;
}
