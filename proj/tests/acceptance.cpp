// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include "oracles.hpp"
#include "qturan/cli_io.hpp"
#include "qturan/construct.hpp"
#include "qturan/forbidden.hpp"
#include "qturan/repair.hpp"
#include "qturan/solver.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace qturan;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string &what) {
    if (!cond) {
      ok = false;
      if (!detail.empty())
        detail += "; ";
      detail += "failed: " + what;
    }
  }
};

// Certificates produced by criteria 2-4, audited again by criterion 7.
std::vector<DeletionCertificate> emitted;

Outcome closed_form() {
  Outcome o;
  const std::vector<std::int64_t> expected{0, 2, 9, 26, 68, 168, 400, 928};
  for (int n = 1; n <= 8; ++n)
    o.expect(turan_formula(n) == expected[n - 1], "turan_formula(" + std::to_string(n) + ")");
  for (int n = 3; n <= 32; ++n)
    o.expect(turan_product_form(n) == turan_difference_form(n),
             "closed forms agree at n=" + std::to_string(n));
  o.detail = o.ok ? "0 2 9 26 68 168 400 928; forms agree on [3,32]" : o.detail;
  return o;
}

Outcome exhaustive_n3() {
  Outcome o;
  const auto r = exhaustive_turan(3, DoubleStarPattern(2, 2));
  o.expect(r.optimum_edges == 9, "optimum 9");
  o.expect(r.proof_complete, "proof complete");
  // Sizes 0, 1, 2 fully scanned (1 + 12 + 66 subsets) before size 3 hits.
  o.expect(r.nodes_explored > 79 && r.nodes_explored <= 79 + 220, "scan covered sizes 0..3");
  o.expect(r.deletions.deleted.size() == 3, "3 deletions");
  emitted.push_back(r.deletions);
  if (o.ok)
    o.detail = "optimum 9 after " + std::to_string(r.nodes_explored) + " subsets";
  return o;
}

Outcome bnb_n4() {
  Outcome o;
  const auto r = min_edge_dominating(4);
  o.expect(r.proof_complete, "proof complete");
  o.expect(r.deletions.deleted.size() == 6, "|D| = 6");
  o.expect(r.optimum_edges == 26 && r.optimum_edges == turan_formula(4), "optimum 26");
  o.expect(r.deletions.claimed_optimal, "certificate claims optimality");
  emitted.push_back(r.deletions);
  if (o.ok)
    o.detail = "|D|=6, optimum 26, " + std::to_string(r.nodes_explored) + " nodes";
  return o;
}

Outcome construction() {
  Outcome o;
  auto pair = base_pair_3();
  for (int n = 3; n <= 12; ++n) {
    const auto tag = " at n=" + std::to_string(n);
    const auto pattern = DoubleStarPattern::balanced_for(n);
    for (const auto *g : {&pair.g, &pair.g_prime}) {
      o.expect(static_cast<std::int64_t>(g->edge_count()) == turan_formula(n), "edge count" + tag);
      o.expect(!contains_double_star(*g, pattern).has_value(), "general detector" + tag);
    }
    std::vector<bool> full_in_g(std::size_t{1} << n, false);
    for (auto v : pair.g.full_degree_set())
      full_in_g[v.mask] = true;
    for (auto v : pair.g_prime.full_degree_set())
      o.expect(!full_in_g[v.mask], "disjoint full-degree sets" + tag);
    o.expect(cross_edges(pair.g, pair.g_prime).count == (std::uint64_t{1} << n),
             "cross matching size" + tag);
    const auto next = lift_pair(pair);
    o.expect(cross_edges(next.g, n).count == (std::uint64_t{1} << n) &&
                 cross_edges(next.g_prime, n).count == (std::uint64_t{1} << n),
             "measured cross edges" + tag);
    emitted.push_back(certificate_for(pair.g, false));
    emitted.push_back(certificate_for(pair.g_prime, false));
    pair = next;
  }
  if (o.ok)
    o.detail = "n=3..12 pairs free, disjoint, cross edges 2^n";
  return o;
}

Outcome reduction_lemma() {
  Outcome o;
  const auto edges = oracle::cube_edges(3);
  int discrepancies = 0, free_count = 0;
  for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
    std::vector<oracle::Pair> deleted;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if ((mask >> i) & 1u)
        deleted.push_back(edges[i]);
    const bool free = !contains_double_star(oracle::cube_minus(3, deleted), DoubleStarPattern(2, 2));
    free_count += free;
    discrepancies += free != oracle::endpoints_form_vertex_cover(3, deleted);
  }
  o.expect(discrepancies == 0, std::to_string(discrepancies) + " discrepancies");
  if (o.ok)
    o.detail = "4096 subsets, " + std::to_string(free_count) + " free, 0 discrepancies";
  return o;
}

Outcome repair_properties() {
  Outcome o;
  std::mt19937_64 rng(0xC1A1);
  std::uniform_real_distribution<double> p(0.1, 0.7);
  int done = 0, swaps = 0, adds = 0;
  while (done < 10000 && o.ok) {
    const auto g = oracle::random_subgraph(4, p(rng), rng);
    if (!is_balanced_free(g))
      continue;
    ++done;
    const auto bound = degree_deficit(g);
    bool step_free = true;
    auto [fixed, report] = normalize_min_degree(g, [&](const CubeSubgraph &now, const RepairStep &) {
      step_free = step_free && is_balanced_free(now);
    });
    o.expect(report.steps.size() <= bound, "step bound");
    o.expect(fixed.edge_count() >= g.edge_count(), "edge count never decreases");
    o.expect(step_free, "freeness after every step");
    o.expect(fixed.min_degree() >= 3, "min degree >= 3");
    for (const auto &s : report.steps)
      (s.kind == RepairKind::swap ? swaps : adds)++;
  }
  if (o.ok)
    o.detail = std::to_string(done) + " inputs, " + std::to_string(adds) + " adds, " +
               std::to_string(swaps) + " swaps";
  return o;
}

Outcome certificate_audit() {
  Outcome o;
  for (const auto &c : emitted) {
    const auto tag = " (n=" + std::to_string(c.n) + ")";
    o.expect(verify_certificate(c), "verify_certificate" + tag);
    const auto text = write_certificate(c);
    const auto back = read_certificate(text);
    o.expect(write_certificate(back) == text, "byte-identical round trip" + tag);
    o.expect(back.deleted == c.deleted && back.claimed_optimal == c.claimed_optimal,
             "round trip preserves content" + tag);
  }
  o.expect(emitted.size() == 22, "22 certificates emitted by criteria 2-4");
  if (o.ok)
    o.detail = std::to_string(emitted.size()) + " certificates re-verified and round-tripped";
  return o;
}

Outcome desk_scale_substitute() {
  Outcome o;
  for (int n = 5; n <= 12; ++n) {
    const auto tag = " at n=" + std::to_string(n);
    const auto c = certificate_for(extremal_pair(n).g, false);
    o.expect(verify_certificate(c), "construction certificate" + tag);
    const auto lower = static_cast<std::int64_t>(edge_count(n) - c.deleted.size());
    o.expect(lower == turan_formula(n), "lower bound equals closed form" + tag);
    const auto upper = static_cast<std::int64_t>(edge_count(n) -
                                                 covering_lower_bound(edge_count(n), n));
    o.expect(upper >= lower, "covering upper bound is consistent" + tag);
  }
  BnbOptions options;
  options.node_budget = kDefaultNodeBudget;
  options.threads = 1;
  const auto r = min_edge_dominating(5, options);
  o.expect(r.deletions.claimed_optimal == r.proof_complete, "claimed_optimal tracks proof flag");
  o.expect(verify_certificate(r.deletions) || !r.proof_complete, "n=5 certificate audit");
  o.expect(r.proof_complete || r.nodes_explored >= *options.node_budget,
           "incomplete only when the budget is spent");
  std::ostringstream d;
  d << "n=5..12 lower bounds certified; n=5 bnb: |D|=" << r.deletions.deleted.size()
    << " nodes=" << r.nodes_explored << " proof_complete=" << (r.proof_complete ? "yes" : "no");
  if (o.ok)
    o.detail = d.str();
  return o;
}

struct Criterion {
  int id;
  const char *name;
  double limit_seconds;
  std::function<Outcome()> run;
};

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "closed form", 0.001, closed_form},
      {2, "exhaustive oracle n=3", 1.0, exhaustive_n3},
      {3, "branch-and-bound n=4", 300.0, bnb_n4},
      {4, "construction invariants n=3..12", 10.0, construction},
      {5, "reduction lemma on E(Q_3)", 10.0, reduction_lemma},
      {6, "repair properties on Q_4", 60.0, repair_properties},
      {7, "certificate audit", 60.0, certificate_audit},
      {8, "desk-scale substitute n>=5", 900.0, desk_scale_substitute},
  };
  int failures = 0;
  for (const auto &c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      o.ok = false;
      o.detail += " (over time limit " + std::to_string(c.limit_seconds) + "s)";
    }
    failures += !o.ok;
    std::printf("[%s] AC%d %-34s %9.4fs  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
