#ifndef QTURAN_REPAIR_HPP
#define QTURAN_REPAIR_HPP

#include "qturan/subgraph.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace qturan {

enum class RepairKind { direct_add, swap };

struct RepairStep {
  RepairKind kind = RepairKind::direct_add;
  EdgeIndex added;
  std::optional<EdgeIndex> removed; // present iff kind == swap
};

struct RepairReport {
  std::vector<RepairStep> steps;
  std::uint64_t edge_delta = 0;  // number of direct_add steps
  bool was_edge_maximal = true;  // edge_delta == 0
};

/// Called after each step with the graph as it stands.
using RepairObserver = std::function<void(const CubeSubgraph &, const RepairStep &)>;

/// Sum over vertices of max(0, n-1-deg(v)); bounds the number of repair steps.
std::uint64_t degree_deficit(const CubeSubgraph &g);

/**
 * Raise the minimum degree of an S_{n-1,n-1}-free subgraph to n-1 without
 * losing edges.
 *
 * Repeatedly takes the lowest-mask vertex v of minimum degree below n-1 and
 * its lowest-id missing edge vp. If deg(p) <= n-2, or p has no full-degree
 * neighbour, vp is added. Otherwise the edge from p to its
 * lowest-mask full-degree neighbour s is dropped first, so s falls to n-1 and
 * p never becomes full.
 *
 * Throws std::domain_error for n < 3 and std::invalid_argument if g is not free.
 */
std::pair<CubeSubgraph, RepairReport> normalize_min_degree(CubeSubgraph g,
                                                          const RepairObserver &observer = {});

} // namespace qturan

#endif
