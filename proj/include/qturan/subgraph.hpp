#ifndef QTURAN_SUBGRAPH_HPP
#define QTURAN_SUBGRAPH_HPP

#include "qturan/hypercube.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace qturan {

/**
 * Spanning subgraph of Q_n stored as one bit per edge slot (indexed by
 * EdgeIndex::dense_id) with vertex degrees maintained incrementally.
 *
 * Plain value type: copying is the way to snapshot a search state.
 */
class CubeSubgraph {
public:
  CubeSubgraph() = default;

  static CubeSubgraph empty(int n);
  static CubeSubgraph full(int n);

  int dimension() const { return n_; }
  std::uint64_t edge_count() const { return edge_count_; }
  std::uint64_t slot_count() const { return static_cast<std::uint64_t>(n_) << (n_ - 1); }

  bool has_edge(std::uint32_t dense_id) const;
  bool has_edge(const EdgeIndex &e) const { return has_edge(e.dense_id); }
  bool has_edge(CubeVertex a, CubeVertex b) const;

  // Throw std::logic_error when the slot is already in the requested state.
  void add_edge(const EdgeIndex &e);
  void delete_edge(const EdgeIndex &e);

  int degree(CubeVertex v) const { return deg_[v.mask]; }
  const std::vector<std::uint8_t> &degrees() const { return deg_; }

  /// Degrees recomputed from the edge bits alone.
  std::vector<std::uint8_t> recount_degrees() const;
  bool degrees_coherent() const { return recount_degrees() == deg_; }

  int min_degree() const;
  int max_degree() const;
  std::vector<CubeVertex> full_degree_set() const;

  /// Present neighbours of v, ascending by mask.
  std::vector<CubeVertex> neighbors_of(CubeVertex v) const;

  std::vector<EdgeIndex> present_edges() const;
  std::vector<EdgeIndex> missing_edges() const;

  friend bool operator==(const CubeSubgraph &a, const CubeSubgraph &b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

private:
  explicit CubeSubgraph(int n);
  void set_slot(std::uint32_t id, bool value);

  int n_ = 0;
  std::uint64_t edge_count_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint8_t> deg_;
};

/// Q_n minus the given edges.
CubeSubgraph full_minus(int n, const std::vector<EdgeIndex> &deleted);

inline CubeSubgraph full(int n) { return CubeSubgraph::full(n); }
inline int min_degree(const CubeSubgraph &g) { return g.min_degree(); }
inline std::vector<CubeVertex> full_degree_set(const CubeSubgraph &g) {
  return g.full_degree_set();
}

/// Edges between two vertex sets of a common graph: E[S,T].
struct CrossEdgeReport {
  std::uint64_t count = 0;
  std::vector<std::pair<CubeVertex, CubeVertex>> pairs;
};

/**
 * Cross matching when `left` and `right` (both over Q_n) are placed in Q_{n+1}
 * with the new top coordinate 0 and 1 respectively: every same-label pair.
 * Throws std::invalid_argument on dimension mismatch.
 */
CrossEdgeReport cross_edges(const CubeSubgraph &left, const CubeSubgraph &right);

/**
 * Present edges of `g` along coordinate `dim`, i.e. the edges between the two
 * halves {bit dim = 0} and {bit dim = 1}. Pairs are (low, high).
 */
CrossEdgeReport cross_edges(const CubeSubgraph &g, int dim);

} // namespace qturan

#endif
