#include "qturan/repair.hpp"

#include "qturan/forbidden.hpp"

#include <stdexcept>

namespace qturan {

std::uint64_t degree_deficit(const CubeSubgraph &g) {
  const int target = g.dimension() - 1;
  std::uint64_t total = 0;
  for (auto d : g.degrees())
    if (d < target)
      total += static_cast<std::uint64_t>(target - d);
  return total;
}

namespace {

std::optional<CubeVertex> lowest_deficient_vertex(const CubeSubgraph &g) {
  const int target = g.dimension() - 1;
  const int lo = g.min_degree();
  if (lo >= target)
    return std::nullopt;
  const auto &deg = g.degrees();
  for (std::uint32_t v = 0; v < deg.size(); ++v)
    if (deg[v] == lo)
      return CubeVertex{v};
  return std::nullopt;
}

std::optional<CubeVertex> lowest_full_neighbor(const CubeSubgraph &g, CubeVertex p) {
  for (auto s : g.neighbors_of(p))
    if (g.degree(s) == g.dimension())
      return s;
  return std::nullopt;
}

} // namespace

std::pair<CubeSubgraph, RepairReport> normalize_min_degree(CubeSubgraph g,
                                                          const RepairObserver &observer) {
  const int n = g.dimension();
  if (n < 3)
    throw std::domain_error("normalize_min_degree needs n >= 3");
  if (!is_balanced_free(g))
    throw std::invalid_argument("normalize_min_degree: input contains S_{n-1,n-1}");

  RepairReport report;
  while (auto v = lowest_deficient_vertex(g)) {
    // deg(v) <= n-2, so at least two cube edges at v are missing.
    std::optional<EdgeIndex> missing;
    for (const auto &e : incident_edges(*v, n)) {
      if (!g.has_edge(e) && (!missing || e.dense_id < missing->dense_id))
        missing = e;
    }
    const CubeVertex p{v->mask ^ (1u << missing->dim)};

    RepairStep step;
    step.added = *missing;
    if (g.degree(p) == n - 1) {
      if (auto s = lowest_full_neighbor(g, p)) {
        const auto drop = edge_between(p, *s, n);
        g.delete_edge(drop);
        step.kind = RepairKind::swap;
        step.removed = drop;
      }
    }
    g.add_edge(*missing);
    if (step.kind == RepairKind::direct_add)
      ++report.edge_delta;
    report.steps.push_back(step);
    if (observer)
      observer(g, step);
  }
  report.was_edge_maximal = report.edge_delta == 0;
  return {std::move(g), std::move(report)};
}

} // namespace qturan
