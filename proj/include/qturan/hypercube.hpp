#ifndef QTURAN_HYPERCUBE_HPP
#define QTURAN_HYPERCUBE_HPP

/**
 * Combinatorial model of the n-dimensional hypercube Q_n.
 *
 * Vertices are n-bit coordinate masks. Every edge joins two masks that differ
 * in a single bit `dim`; it is identified by that bit and its lower endpoint
 * `base` (bit `dim` clear), and densely numbered as
 *
 *     dense_id = dim * 2^(n-1) + rank(base)
 *
 * where rank(base) removes bit `dim` from the mask. Subgraphs are bit vectors
 * over this numbering.
 */

#include <compare>
#include <cstdint>
#include <vector>

namespace qturan {

inline constexpr int kMaxDimension = 16;

struct CubeVertex {
  std::uint32_t mask = 0;

  friend constexpr auto operator<=>(const CubeVertex &, const CubeVertex &) = default;
};

struct EdgeIndex {
  int dim = 0;
  CubeVertex base;
  std::uint32_t dense_id = 0;

  CubeVertex low() const { return base; }
  CubeVertex high() const { return CubeVertex{base.mask | (1u << dim)}; }

  friend constexpr bool operator==(const EdgeIndex &, const EdgeIndex &) = default;
};

// Throws std::domain_error unless 1 <= n <= kMaxDimension.
void require_dimension(int n);

// n * 2^(n-1)
std::uint64_t edge_count(int n);
std::uint64_t vertex_count(int n);

// Neighbours in ascending dimension order.
std::vector<CubeVertex> neighbors(CubeVertex v, int n);

int layer(CubeVertex v);
std::uint64_t layer_size(int n, int i);

// Dense numbering helpers. All throw std::out_of_range on bad input.
EdgeIndex edge_from_id(std::uint32_t dense_id, int n);
EdgeIndex edge_between(CubeVertex a, CubeVertex b, int n);
EdgeIndex edge_at(CubeVertex v, int dim, int n);
bool is_cube_edge(CubeVertex a, CubeVertex b, int n);

/// The n edges incident to v, ascending by dimension.
std::vector<EdgeIndex> incident_edges(CubeVertex v, int n);

/**
 * Element of the hyperoctahedral group acting on Q_n: bit i of a vertex is
 * moved to bit perm[i], then the result is XORed with `flip`.
 */
struct CubeAutomorphism {
  std::vector<int> perm;
  std::uint32_t flip = 0;

  static CubeAutomorphism identity(int n);
  int dimension() const { return static_cast<int>(perm.size()); }
  // Throws std::invalid_argument if perm is not a permutation or flip is too wide.
  void validate() const;
};

CubeVertex apply_automorphism(const CubeAutomorphism &a, CubeVertex v);
EdgeIndex apply_automorphism(const CubeAutomorphism &a, const EdgeIndex &e);

/// All n! * 2^n automorphisms. Intended for n <= 6.
std::vector<CubeAutomorphism> all_automorphisms(int n);

} // namespace qturan

#endif
