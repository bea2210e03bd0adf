#include "qturan/subgraph.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>
#include <string>

namespace qturan {

CubeSubgraph::CubeSubgraph(int n) : n_(n) {
  require_dimension(n);
  bits_.assign((slot_count() + 63) / 64, 0);
  deg_.assign(std::size_t{1} << n, 0);
}

CubeSubgraph CubeSubgraph::empty(int n) { return CubeSubgraph(n); }

CubeSubgraph CubeSubgraph::full(int n) {
  CubeSubgraph g(n);
  const auto slots = g.slot_count();
  std::fill(g.bits_.begin(), g.bits_.end(), ~std::uint64_t{0});
  if (slots % 64 != 0)
    g.bits_.back() = (std::uint64_t{1} << (slots % 64)) - 1;
  std::fill(g.deg_.begin(), g.deg_.end(), static_cast<std::uint8_t>(n));
  g.edge_count_ = slots;
  return g;
}

bool CubeSubgraph::has_edge(std::uint32_t dense_id) const {
  if (dense_id >= slot_count())
    throw std::out_of_range("edge id " + std::to_string(dense_id) + " out of range");
  return (bits_[dense_id >> 6] >> (dense_id & 63)) & 1u;
}

bool CubeSubgraph::has_edge(CubeVertex a, CubeVertex b) const {
  if (!is_cube_edge(a, b, n_))
    return false;
  return has_edge(edge_between(a, b, n_));
}

void CubeSubgraph::set_slot(std::uint32_t id, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << (id & 63);
  if (value)
    bits_[id >> 6] |= bit;
  else
    bits_[id >> 6] &= ~bit;
}

void CubeSubgraph::add_edge(const EdgeIndex &e) {
  if (has_edge(e.dense_id))
    throw std::logic_error("add_edge: edge " + std::to_string(e.dense_id) + " already present");
  set_slot(e.dense_id, true);
  ++deg_[e.low().mask];
  ++deg_[e.high().mask];
  ++edge_count_;
  assert(deg_[e.low().mask] <= n_ && deg_[e.high().mask] <= n_);
}

void CubeSubgraph::delete_edge(const EdgeIndex &e) {
  if (!has_edge(e.dense_id))
    throw std::logic_error("delete_edge: edge " + std::to_string(e.dense_id) + " not present");
  set_slot(e.dense_id, false);
  --deg_[e.low().mask];
  --deg_[e.high().mask];
  --edge_count_;
}

std::vector<std::uint8_t> CubeSubgraph::recount_degrees() const {
  std::vector<std::uint8_t> out(deg_.size(), 0);
  for (std::uint32_t id = 0; id < slot_count(); ++id) {
    if (!has_edge(id))
      continue;
    const auto e = edge_from_id(id, n_);
    ++out[e.low().mask];
    ++out[e.high().mask];
  }
  return out;
}

int CubeSubgraph::min_degree() const { return *std::min_element(deg_.begin(), deg_.end()); }

int CubeSubgraph::max_degree() const { return *std::max_element(deg_.begin(), deg_.end()); }

std::vector<CubeVertex> CubeSubgraph::full_degree_set() const {
  std::vector<CubeVertex> out;
  for (std::uint32_t v = 0; v < deg_.size(); ++v)
    if (deg_[v] == n_)
      out.push_back(CubeVertex{v});
  return out;
}

std::vector<CubeVertex> CubeSubgraph::neighbors_of(CubeVertex v) const {
  std::vector<CubeVertex> out;
  for (int d = 0; d < n_; ++d)
    if (has_edge(edge_at(v, d, n_)))
      out.push_back(CubeVertex{v.mask ^ (1u << d)});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeIndex> CubeSubgraph::present_edges() const {
  std::vector<EdgeIndex> out;
  out.reserve(edge_count_);
  for (std::uint32_t id = 0; id < slot_count(); ++id)
    if (has_edge(id))
      out.push_back(edge_from_id(id, n_));
  return out;
}

std::vector<EdgeIndex> CubeSubgraph::missing_edges() const {
  std::vector<EdgeIndex> out;
  for (std::uint32_t id = 0; id < slot_count(); ++id)
    if (!has_edge(id))
      out.push_back(edge_from_id(id, n_));
  return out;
}

CubeSubgraph full_minus(int n, const std::vector<EdgeIndex> &deleted) {
  auto g = CubeSubgraph::full(n);
  for (const auto &e : deleted)
    g.delete_edge(e);
  return g;
}

CrossEdgeReport cross_edges(const CubeSubgraph &left, const CubeSubgraph &right) {
  if (left.dimension() != right.dimension())
    throw std::invalid_argument("cross_edges: dimension mismatch (" +
                                std::to_string(left.dimension()) + " vs " +
                                std::to_string(right.dimension()) + ")");
  const int n = left.dimension();
  CrossEdgeReport r;
  for (std::uint32_t v = 0; v < (1u << n); ++v)
    r.pairs.emplace_back(CubeVertex{v}, CubeVertex{v | (1u << n)});
  r.count = r.pairs.size();
  return r;
}

CrossEdgeReport cross_edges(const CubeSubgraph &g, int dim) {
  const int n = g.dimension();
  if (dim < 0 || dim >= n)
    throw std::out_of_range("cross_edges: split dimension out of range");
  CrossEdgeReport r;
  const std::uint32_t half = 1u << (n - 1);
  for (std::uint32_t rank = 0; rank < half; ++rank) {
    const auto e = edge_from_id(static_cast<std::uint32_t>(dim) * half + rank, n);
    if (g.has_edge(e))
      r.pairs.emplace_back(e.low(), e.high());
  }
  r.count = r.pairs.size();
  return r;
}

} // namespace qturan
