#include "qturan/construct.hpp"

#include <stdexcept>
#include <string>

namespace qturan {

namespace {

CubeSubgraph q3_minus(std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> pairs) {
  std::vector<EdgeIndex> deleted;
  for (auto [a, b] : pairs)
    deleted.push_back(edge_between(CubeVertex{a}, CubeVertex{b}, 3));
  return full_minus(3, deleted);
}

} // namespace

ExtremalPair base_pair_3() {
  return ExtremalPair{
      3,
      q3_minus({{0b001, 0b011}, {0b010, 0b110}, {0b100, 0b101}}),
      q3_minus({{0b000, 0b010}, {0b100, 0b101}, {0b011, 0b111}}),
  };
}

CubeSubgraph embed_halves(const CubeSubgraph &low, const CubeSubgraph &high) {
  const int n = low.dimension();
  if (high.dimension() != n)
    throw std::invalid_argument("embed_halves: dimension mismatch");
  auto out = CubeSubgraph::empty(n + 1);
  const std::uint32_t top = 1u << n;
  for (const auto &e : low.present_edges())
    out.add_edge(edge_at(e.low(), e.dim, n + 1));
  for (const auto &e : high.present_edges())
    out.add_edge(edge_at(CubeVertex{e.low().mask | top}, e.dim, n + 1));
  for (std::uint32_t v = 0; v < top; ++v)
    out.add_edge(edge_at(CubeVertex{v}, n, n + 1));
  return out;
}

ExtremalPair lift_pair(const ExtremalPair &pair) {
  return ExtremalPair{pair.n + 1, embed_halves(pair.g, pair.g_prime),
                      embed_halves(pair.g_prime, pair.g)};
}

ExtremalPair extremal_pair(int n) {
  if (n < 3 || n > kMaxDimension)
    throw std::domain_error("extremal_pair needs 3 <= n <= " + std::to_string(kMaxDimension) +
                            ", got " + std::to_string(n));
  auto pair = base_pair_3();
  while (pair.n < n)
    pair = lift_pair(pair);
  return pair;
}

} // namespace qturan
