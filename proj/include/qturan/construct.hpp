#ifndef QTURAN_CONSTRUCT_HPP
#define QTURAN_CONSTRUCT_HPP

#include "qturan/subgraph.hpp"

namespace qturan {

/**
 * Two S_{n-1,n-1}-free subgraphs of Q_n with 2^(n-3)(4n-3) edges each and
 * disjoint sets of full-degree vertices.
 */
struct ExtremalPair {
  int n = 0;
  CubeSubgraph g;
  CubeSubgraph g_prime;
};

/**
 * Hardcoded pair for Q_3:
 *   g       = Q_3 - {001-011, 010-110, 100-101}, full-degree set {000, 111}
 *   g_prime = Q_3 - {000-010, 100-101, 011-111}, full-degree set {001, 110}
 */
ExtremalPair base_pair_3();

/// Pair for Q_{n+1}: g on the low half and g_prime on the high half (plus all
/// cross edges), and the mirrored placement for the second graph.
ExtremalPair lift_pair(const ExtremalPair &pair);

/// Throws std::domain_error unless 3 <= n <= kMaxDimension.
ExtremalPair extremal_pair(int n);

/// The new coordinate is the most significant one: mask | (half << n).
CubeSubgraph embed_halves(const CubeSubgraph &low, const CubeSubgraph &high);

} // namespace qturan

#endif
