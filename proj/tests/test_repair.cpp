#include "oracles.hpp"
#include "qturan/construct.hpp"
#include "qturan/forbidden.hpp"
#include "qturan/repair.hpp"

#include <doctest.h>

#include <stdexcept>

#include <random>

using namespace qturan;

namespace {

struct Checked {
  CubeSubgraph graph;
  RepairReport report;
  int steps_seen = 0;
};

// Runs the repair, asserting freeness and the degree floor after every step.
Checked repair_checked(const CubeSubgraph &input) {
  const int n = input.dimension();
  const auto before = input.degrees();
  Checked out;
  auto [g, report] = normalize_min_degree(input, [&](const CubeSubgraph &now, const RepairStep &step) {
    ++out.steps_seen;
    REQUIRE(is_balanced_free(now));
    REQUIRE(now.degrees_coherent());
    for (std::size_t v = 0; v < before.size(); ++v)
      if (before[v] >= n - 1)
        REQUIRE(now.degrees()[v] >= n - 1);
    if (step.kind == RepairKind::swap) {
      REQUIRE(step.removed);
      // The removed edge hangs off an endpoint of the added edge.
      const bool shares = step.removed->low() == step.added.low() ||
                          step.removed->low() == step.added.high() ||
                          step.removed->high() == step.added.low() ||
                          step.removed->high() == step.added.high();
      REQUIRE(shares);
    } else {
      REQUIRE_FALSE(step.removed);
    }
  });
  out.graph = std::move(g);
  out.report = std::move(report);
  return out;
}

} // namespace

TEST_CASE("already normalized graphs are untouched") {
  const auto pair = base_pair_3();
  auto [g, report] = normalize_min_degree(pair.g);
  CHECK(g == pair.g);
  CHECK(report.steps.empty());
  CHECK(report.was_edge_maximal);
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(normalize_min_degree(full(3)), std::invalid_argument);
  CHECK_THROWS_AS(normalize_min_degree(CubeSubgraph::empty(2)), std::domain_error);

  // Q_3 minus the three edges at 000 still has 011-111 between degree-3 vertices.
  const auto star_removed =
      oracle::cube_minus(3, {{0b000, 0b001}, {0b000, 0b010}, {0b000, 0b100}});
  CHECK_FALSE(is_balanced_free(star_removed));
  CHECK_THROWS_AS(normalize_min_degree(star_removed), std::invalid_argument);
}

TEST_CASE("isolated vertex takes exactly n-1-deg steps") {
  const auto g = oracle::cube_minus(
      3, {{0b000, 0b001}, {0b000, 0b010}, {0b000, 0b100}, {0b011, 0b111}});
  REQUIRE(is_balanced_free(g));
  REQUIRE(g.degree(CubeVertex{0}) == 0);
  REQUIRE(degree_deficit(g) == 2);
  const auto r = repair_checked(g);
  CHECK(r.report.steps.size() == 2);
  CHECK(r.steps_seen == 2);
  CHECK(r.graph.degree(CubeVertex{0}) == 2);
  CHECK(r.graph.min_degree() == 2);
  CHECK(r.graph.edge_count() == 8);
  CHECK(r.report.steps[0].kind == RepairKind::swap);
  CHECK(r.report.steps[1].kind == RepairKind::swap);
  CHECK_FALSE(oracle::brute_force_contains(r.graph, 2, 2));
}

TEST_CASE("single-edge deletions of the base pair are repaired within the deficit bound") {
  const auto pair = base_pair_3();
  int cases = 0, restored = 0;
  for (const auto *base : {&pair.g, &pair.g_prime}) {
    for (const auto &e : base->present_edges()) {
      auto g = *base;
      g.delete_edge(e);
      if (g.min_degree() >= 2)
        continue; // nothing to repair
      ++cases;
      const auto r = repair_checked(g);
      CHECK(r.graph.min_degree() == 2);
      CHECK(r.report.steps.size() <= degree_deficit(g));
      CHECK(r.graph.edge_count() == 8 + r.report.edge_delta);
      CHECK_FALSE(oracle::brute_force_contains(r.graph, 2, 2));
      restored += r.graph.edge_count() == 9;
    }
  }
  // Each base graph has 9 edges; those touching a degree-2 vertex: all of them.
  CHECK(cases == 18);
  // Frozen from this enumeration: 8 repairs are direct additions back to 9
  // edges, the other 10 are swaps that keep 8.
  CHECK(restored == 8);
}

TEST_CASE("random free inputs: bound, edge count, freeness") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> p(0.1, 0.7);
  for (int n : {4, 5}) {
    int done = 0;
    while (done < 10000) {
      const auto g = oracle::random_subgraph(n, p(rng), rng);
      if (!is_balanced_free(g))
        continue;
      ++done;
      const auto bound = degree_deficit(g);
      auto [fixed, report] = normalize_min_degree(g);
      REQUIRE(report.steps.size() <= bound);
      REQUIRE(fixed.edge_count() >= g.edge_count());
      REQUIRE(fixed.edge_count() - g.edge_count() == report.edge_delta);
      REQUIRE(fixed.min_degree() >= n - 1);
      REQUIRE(is_balanced_free(fixed));
      REQUIRE(report.was_edge_maximal == (report.edge_delta == 0));
    }
  }
}
