#ifndef QTURAN_SOLVER_HPP
#define QTURAN_SOLVER_HPP

#include "qturan/forbidden.hpp"
#include "qturan/subgraph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qturan {

/**
 * A deleted-edge set together with what it claims about Q_n minus that set.
 * `pattern` defaults to S_{n-1,n-1}; the size claim for `claimed_optimal`
 * (|deleted| = 3 * 2^(n-3)) is only checked for that balanced pattern.
 */
struct DeletionCertificate {
  int n = 0;
  std::vector<EdgeIndex> deleted;
  bool claimed_free = false;
  bool claimed_optimal = false;
  std::optional<DoubleStarPattern> pattern;

  DoubleStarPattern effective_pattern() const;
};

struct SolveResult {
  std::int64_t optimum_edges = 0;
  CubeSubgraph witness;
  DeletionCertificate deletions;
  std::uint64_t nodes_explored = 0;
  bool proof_complete = false;
};

inline constexpr int kMaxFormulaDimension = 48;

/// 0, 2, then 2^(n-3) * (4n-3). Throws std::domain_error outside [1, 48].
std::int64_t turan_formula(int n);
/// 2^(n-3) * (4n-3), n >= 3.
std::int64_t turan_product_form(int n);
/// n * 2^(n-1) - 3 * 2^(n-3), n >= 3.
std::int64_t turan_difference_form(int n);

/// Deletions in Q_n minus an edge-extremal graph according to the closed form.
std::int64_t closed_form_deletions(int n);

/**
 * Largest S_{k,l}-free subgraph of Q_n for n <= 3 by enumerating deletion
 * sets in increasing size. Freeness is monotone under deletion, so the first
 * feasible size is optimal. Throws std::domain_error for n > 3.
 */
SolveResult exhaustive_turan(int n, const DoubleStarPattern &p);

struct BnbOptions {
  std::optional<std::uint64_t> node_budget; // unlimited when empty
  int threads = 1;
  bool symmetry_at_root = true;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000'000;
inline constexpr int kMaxBnbDimension = 5;

/// ceil(undominated / (2n-1)): one edge of Q_n dominates at most 2n-1 edges.
std::uint64_t covering_lower_bound(std::uint64_t undominated, int n);

/**
 * Minimum edge dominating set of Q_n by branch-and-bound, which gives
 * ex(Q_n, S_{n-1,n-1}) = e(Q_n) - |D|: Q_n - D is S_{n-1,n-1}-free iff the
 * endpoints of D cover every edge.
 *
 * The incumbent starts at the construction bound. Branching takes the
 * lowest-id undominated edge and tries each edge sharing an endpoint with it;
 * later siblings exclude earlier candidates. Nodes are pruned by
 * max(covering bound, ceil(nu/2)), nu a maximum matching among undominated
 * edges. Throws std::domain_error unless 3 <= n <= 5.
 */
SolveResult min_edge_dominating(int n, const BnbOptions &options = {});

/// Endpoints of `deleted` meet every edge of Q_n.
bool endpoints_cover_cube(int n, const std::vector<EdgeIndex> &deleted);

DeletionCertificate certificate_for(const CubeSubgraph &g, bool claimed_optimal);

/**
 * Independent audit: distinct valid edges, Q_n minus them free of the pattern
 * under the general detector, claimed_free set, and the closed-form size when
 * claimed_optimal. Throws std::invalid_argument for an unsupported dimension.
 */
bool verify_certificate(const DeletionCertificate &c);

} // namespace qturan

#endif
