#include "qturan/hypercube.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qturan {

namespace {

void require_vertex(CubeVertex v, int n) {
  if (v.mask >> n != 0)
    throw std::out_of_range("vertex mask " + std::to_string(v.mask) +
                            " out of range for n=" + std::to_string(n));
}

std::uint32_t rank_without_bit(std::uint32_t mask, int dim) {
  const std::uint32_t low = mask & ((1u << dim) - 1u);
  return low | ((mask >> (dim + 1)) << dim);
}

std::uint32_t insert_zero_bit(std::uint32_t rank, int dim) {
  const std::uint32_t low = rank & ((1u << dim) - 1u);
  return low | ((rank >> dim) << (dim + 1));
}

} // namespace

void require_dimension(int n) {
  if (n < 1 || n > kMaxDimension)
    throw std::domain_error("dimension must be in [1, " + std::to_string(kMaxDimension) +
                            "], got " + std::to_string(n));
}

std::uint64_t edge_count(int n) {
  require_dimension(n);
  return static_cast<std::uint64_t>(n) << (n - 1);
}

std::uint64_t vertex_count(int n) {
  require_dimension(n);
  return std::uint64_t{1} << n;
}

std::vector<CubeVertex> neighbors(CubeVertex v, int n) {
  require_dimension(n);
  require_vertex(v, n);
  std::vector<CubeVertex> out;
  out.reserve(n);
  for (int d = 0; d < n; ++d)
    out.push_back(CubeVertex{v.mask ^ (1u << d)});
  return out;
}

int layer(CubeVertex v) { return std::popcount(v.mask); }

std::uint64_t layer_size(int n, int i) {
  require_dimension(n);
  if (i < 0 || i > n)
    throw std::out_of_range("layer " + std::to_string(i) + " out of range for n=" +
                            std::to_string(n));
  std::uint64_t c = 1;
  for (int j = 1; j <= i; ++j)
    c = c * static_cast<std::uint64_t>(n - i + j) / static_cast<std::uint64_t>(j);
  return c;
}

EdgeIndex edge_from_id(std::uint32_t dense_id, int n) {
  require_dimension(n);
  const std::uint32_t half = 1u << (n - 1);
  if (dense_id >= static_cast<std::uint64_t>(n) * half)
    throw std::out_of_range("edge id " + std::to_string(dense_id) + " out of range for n=" +
                            std::to_string(n));
  const int dim = static_cast<int>(dense_id / half);
  return EdgeIndex{dim, CubeVertex{insert_zero_bit(dense_id % half, dim)}, dense_id};
}

EdgeIndex edge_at(CubeVertex v, int dim, int n) {
  require_dimension(n);
  require_vertex(v, n);
  if (dim < 0 || dim >= n)
    throw std::out_of_range("dimension index " + std::to_string(dim) + " out of range");
  const std::uint32_t base = v.mask & ~(1u << dim);
  const std::uint32_t id = static_cast<std::uint32_t>(dim) * (1u << (n - 1)) +
                           rank_without_bit(base, dim);
  return EdgeIndex{dim, CubeVertex{base}, id};
}

bool is_cube_edge(CubeVertex a, CubeVertex b, int n) {
  return (a.mask >> n) == 0 && (b.mask >> n) == 0 && std::popcount(a.mask ^ b.mask) == 1;
}

EdgeIndex edge_between(CubeVertex a, CubeVertex b, int n) {
  require_dimension(n);
  require_vertex(a, n);
  require_vertex(b, n);
  if (!is_cube_edge(a, b, n))
    throw std::out_of_range("not a hypercube edge: " + std::to_string(a.mask) + "-" +
                            std::to_string(b.mask));
  return edge_at(a, std::countr_zero(a.mask ^ b.mask), n);
}

std::vector<EdgeIndex> incident_edges(CubeVertex v, int n) {
  require_dimension(n);
  require_vertex(v, n);
  std::vector<EdgeIndex> out;
  out.reserve(n);
  for (int d = 0; d < n; ++d)
    out.push_back(edge_at(v, d, n));
  return out;
}

CubeAutomorphism CubeAutomorphism::identity(int n) {
  require_dimension(n);
  CubeAutomorphism a;
  a.perm.resize(n);
  std::iota(a.perm.begin(), a.perm.end(), 0);
  return a;
}

void CubeAutomorphism::validate() const {
  const int n = dimension();
  require_dimension(n);
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p])
      throw std::invalid_argument("automorphism perm is not a permutation");
    seen[p] = true;
  }
  if (flip >> n != 0)
    throw std::invalid_argument("automorphism flip mask wider than dimension");
}

CubeVertex apply_automorphism(const CubeAutomorphism &a, CubeVertex v) {
  const int n = a.dimension();
  require_vertex(v, n);
  std::uint32_t out = 0;
  for (int i = 0; i < n; ++i)
    if ((v.mask >> i) & 1u)
      out |= 1u << a.perm[i];
  return CubeVertex{out ^ a.flip};
}

EdgeIndex apply_automorphism(const CubeAutomorphism &a, const EdgeIndex &e) {
  const int n = a.dimension();
  return edge_between(apply_automorphism(a, e.low()), apply_automorphism(a, e.high()), n);
}

std::vector<CubeAutomorphism> all_automorphisms(int n) {
  require_dimension(n);
  std::vector<CubeAutomorphism> out;
  auto a = CubeAutomorphism::identity(n);
  do {
    for (std::uint32_t flip = 0; flip < (1u << n); ++flip) {
      a.flip = flip;
      out.push_back(a);
    }
  } while (std::next_permutation(a.perm.begin(), a.perm.end()));
  return out;
}

} // namespace qturan
