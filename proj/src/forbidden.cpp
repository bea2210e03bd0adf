#include "qturan/forbidden.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <stdexcept>

namespace qturan {

DoubleStarPattern::DoubleStarPattern(int k_, int l_) : k(k_), l(l_) {
  if (k < 1 || l < 1)
    throw std::invalid_argument("double star needs k, l >= 1");
}

namespace {

using VertexList = std::vector<CubeVertex>;

VertexList without(const VertexList &xs, CubeVertex drop) {
  VertexList out;
  std::copy_if(xs.begin(), xs.end(), std::back_inserter(out),
               [&](CubeVertex x) { return x != drop; });
  return out;
}

std::optional<EmbeddingWitness> try_orient(const CubeSubgraph &g, CubeVertex u, CubeVertex v,
                                           int k, int l) {
  const auto nu = without(g.neighbors_of(u), v);
  const auto nv = without(g.neighbors_of(v), u);
  if (static_cast<int>(nu.size()) < k || static_cast<int>(nv.size()) < l)
    return std::nullopt;

  VertexList common, only_u, only_v;
  std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
  std::set_difference(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(only_u));
  std::set_difference(nv.begin(), nv.end(), nu.begin(), nu.end(), std::back_inserter(only_v));
  const auto union_size = only_u.size() + only_v.size() + common.size();
  if (union_size < static_cast<std::size_t>(k + l))
    return std::nullopt;

  EmbeddingWitness w{u, v, {}, {}};
  auto shared = common.begin();
  for (auto x : only_u) {
    if (static_cast<int>(w.leaves_u.size()) == k)
      break;
    w.leaves_u.push_back(x);
  }
  while (static_cast<int>(w.leaves_u.size()) < k)
    w.leaves_u.push_back(*shared++);
  for (auto x : only_v) {
    if (static_cast<int>(w.leaves_v.size()) == l)
      break;
    w.leaves_v.push_back(x);
  }
  while (static_cast<int>(w.leaves_v.size()) < l)
    w.leaves_v.push_back(*shared++);
  std::sort(w.leaves_u.begin(), w.leaves_u.end());
  std::sort(w.leaves_v.begin(), w.leaves_v.end());
  return w;
}

} // namespace

std::string witness_violation(const CubeSubgraph &host, const DoubleStarPattern &p,
                              const EmbeddingWitness &w) {
  if (static_cast<int>(w.leaves_u.size()) != p.k || static_cast<int>(w.leaves_v.size()) != p.l)
    return "leaf counts do not match the pattern";
  if (!host.has_edge(w.center_u, w.center_v))
    return "centers are not adjacent in the host";
  for (auto x : w.leaves_u)
    if (!host.has_edge(w.center_u, x))
      return "leaf not adjacent to center u";
  for (auto x : w.leaves_v)
    if (!host.has_edge(w.center_v, x))
      return "leaf not adjacent to center v";
  std::set<CubeVertex> all{w.center_u, w.center_v};
  all.insert(w.leaves_u.begin(), w.leaves_u.end());
  all.insert(w.leaves_v.begin(), w.leaves_v.end());
  if (all.size() != static_cast<std::size_t>(p.k + p.l + 2))
    return "witness vertices are not pairwise distinct";
  return {};
}

std::optional<EmbeddingWitness> contains_double_star(const CubeSubgraph &g,
                                                     const DoubleStarPattern &p) {
  const int n = g.dimension();
  // Cheap reject: a center needs degree >= k+1 (or l+1).
  if (std::max(p.k, p.l) + 1 > n)
    return std::nullopt;
  for (std::uint32_t id = 0; id < g.slot_count(); ++id) {
    if (!g.has_edge(id))
      continue;
    const auto e = edge_from_id(id, n);
    const auto a = e.low(), b = e.high();
    if (std::min(g.degree(a), g.degree(b)) < std::min(p.k, p.l) + 1)
      continue;
    if (auto w = try_orient(g, a, b, p.k, p.l))
      return w;
    if (!p.balanced())
      if (auto w = try_orient(g, b, a, p.k, p.l))
        return w;
  }
  return std::nullopt;
}

bool is_balanced_free(const CubeSubgraph &g) {
  const int n = g.dimension();
  for (auto v : g.full_degree_set())
    for (int d = 0; d < n; ++d)
      if (g.degree(CubeVertex{v.mask ^ (1u << d)}) == n)
        return false;
  return true;
}

} // namespace qturan
