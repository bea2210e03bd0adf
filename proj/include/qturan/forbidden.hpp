#ifndef QTURAN_FORBIDDEN_HPP
#define QTURAN_FORBIDDEN_HPP

#include "qturan/subgraph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qturan {

/// Double star S_{k,l}: an edge uv, k further leaves on u, l on v, all distinct.
struct DoubleStarPattern {
  int k = 1;
  int l = 1;

  DoubleStarPattern() = default;
  // Throws std::invalid_argument unless k, l >= 1.
  DoubleStarPattern(int k_, int l_);

  bool balanced() const { return k == l; }
  static DoubleStarPattern balanced_for(int n) { return DoubleStarPattern(n - 1, n - 1); }

  friend bool operator==(const DoubleStarPattern &, const DoubleStarPattern &) = default;
};

struct EmbeddingWitness {
  CubeVertex center_u;
  CubeVertex center_v;
  std::vector<CubeVertex> leaves_u;
  std::vector<CubeVertex> leaves_v;
};

/// Empty string when `w` is a valid copy of `p` inside `host`, else the reason.
std::string witness_violation(const CubeSubgraph &host, const DoubleStarPattern &p,
                              const EmbeddingWitness &w);

/**
 * General detector. An edge uv hosts S_{k,l} (k leaves at u) iff
 * |N(u)\{v}| >= k, |N(v)\{u}| >= l and |N(u) u N(v) \ {u,v}| >= k+l.
 * Edges are scanned by ascending dense_id, both orientations; leaves are the
 * lowest masks, exclusive neighbours before shared ones.
 */
std::optional<EmbeddingWitness> contains_double_star(const CubeSubgraph &g,
                                                     const DoubleStarPattern &p);

/// S_{n-1,n-1}-freeness via degrees: no edge joins two full-degree vertices.
bool is_balanced_free(const CubeSubgraph &g);

/// Same question answered by the general detector.
inline bool is_free(const CubeSubgraph &g, const DoubleStarPattern &p) {
  return !contains_double_star(g, p).has_value();
}

} // namespace qturan

#endif
