#include "qturan/solver.hpp"

#include "qturan/construct.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <bitset>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

namespace qturan {

DoubleStarPattern DeletionCertificate::effective_pattern() const {
  return pattern.value_or(DoubleStarPattern::balanced_for(n));
}

std::int64_t turan_product_form(int n) {
  if (n < 3 || n > kMaxFormulaDimension)
    throw std::domain_error("closed form needs 3 <= n <= " +
                            std::to_string(kMaxFormulaDimension));
  return (std::int64_t{1} << (n - 3)) * (4 * n - 3);
}

std::int64_t turan_difference_form(int n) {
  if (n < 3 || n > kMaxFormulaDimension)
    throw std::domain_error("closed form needs 3 <= n <= " +
                            std::to_string(kMaxFormulaDimension));
  return std::int64_t{n} * (std::int64_t{1} << (n - 1)) - 3 * (std::int64_t{1} << (n - 3));
}

std::int64_t turan_formula(int n) {
  if (n < 1 || n > kMaxFormulaDimension)
    throw std::domain_error("turan_formula needs 1 <= n <= " +
                            std::to_string(kMaxFormulaDimension) + ", got " + std::to_string(n));
  if (n == 1)
    return 0;
  if (n == 2)
    return 2;
  const auto value = turan_product_form(n);
  if (value != turan_difference_form(n))
    throw std::logic_error("closed forms disagree at n=" + std::to_string(n));
  return value;
}

std::int64_t closed_form_deletions(int n) {
  return std::int64_t{n} * (std::int64_t{1} << (n - 1)) - turan_formula(n);
}

DeletionCertificate certificate_for(const CubeSubgraph &g, bool claimed_optimal) {
  DeletionCertificate c;
  c.n = g.dimension();
  c.deleted = g.missing_edges();
  c.claimed_free = true;
  c.claimed_optimal = claimed_optimal;
  return c;
}

bool endpoints_cover_cube(int n, const std::vector<EdgeIndex> &deleted) {
  std::vector<bool> covered(vertex_count(n), false);
  for (const auto &e : deleted) {
    covered[e.low().mask] = true;
    covered[e.high().mask] = true;
  }
  for (std::uint32_t id = 0; id < edge_count(n); ++id) {
    const auto e = edge_from_id(id, n);
    if (!covered[e.low().mask] && !covered[e.high().mask])
      return false;
  }
  return true;
}

bool verify_certificate(const DeletionCertificate &c) {
  require_dimension(c.n);
  const auto p = c.effective_pattern();
  auto g = CubeSubgraph::full(c.n);
  for (const auto &e : c.deleted) {
    if (e.dense_id >= g.slot_count())
      return false;
    // Recompute from the endpoints so a mislabelled id cannot slip through.
    const auto canon = edge_from_id(e.dense_id, c.n);
    if (canon.dim != e.dim || canon.base != e.base)
      return false;
    if (!g.has_edge(canon))
      return false; // duplicate
    g.delete_edge(canon);
  }
  if (!c.claimed_free || contains_double_star(g, p).has_value())
    return false;
  if (c.claimed_optimal && p == DoubleStarPattern::balanced_for(c.n) && c.n >= 3) {
    if (static_cast<std::int64_t>(c.deleted.size()) != closed_form_deletions(c.n))
      return false;
  }
  return true;
}

SolveResult exhaustive_turan(int n, const DoubleStarPattern &p) {
  require_dimension(n);
  if (n > 3)
    throw std::domain_error("exhaustive_turan enumerates at most 2^12 subsets (n <= 3)");
  const auto total = static_cast<int>(edge_count(n));
  SolveResult result;
  for (int size = 0; size <= total; ++size) {
    // Gosper's hack over all `size`-subsets of the edge slots.
    std::uint32_t subset = size == 0 ? 0u : (1u << size) - 1u;
    const std::uint32_t limit = 1u << total;
    while (subset < limit) {
      ++result.nodes_explored;
      std::vector<EdgeIndex> deleted;
      for (int id = 0; id < total; ++id)
        if ((subset >> id) & 1u)
          deleted.push_back(edge_from_id(static_cast<std::uint32_t>(id), n));
      auto g = full_minus(n, deleted);
      if (is_free(g, p)) {
        result.optimum_edges = static_cast<std::int64_t>(g.edge_count());
        result.deletions = DeletionCertificate{n, std::move(deleted), true, true, p};
        result.witness = std::move(g);
        result.proof_complete = true;
        return result;
      }
      if (subset == 0)
        break;
      const std::uint32_t c = subset & -subset;
      const std::uint32_t r = subset + c;
      subset = (((r ^ subset) >> 2) / c) | r;
    }
  }
  throw std::logic_error("exhaustive_turan: deleting every edge must be free");
}

std::uint64_t covering_lower_bound(std::uint64_t undominated, int n) {
  const auto reach = static_cast<std::uint64_t>(2 * n - 1);
  return (undominated + reach - 1) / reach;
}

namespace {

constexpr int kMaxBnbEdges = kMaxBnbDimension << (kMaxBnbDimension - 1);
using EdgeSet = std::bitset<kMaxBnbEdges>;

struct Node {
  std::uint64_t covered = 0;
  EdgeSet excluded;
  std::vector<std::uint32_t> chosen;
};

class DominatingSearch {
public:
  DominatingSearch(int n, const BnbOptions &options) : n_(n), options_(options) {
    const auto count = static_cast<std::uint32_t>(edge_count(n));
    for (std::uint32_t id = 0; id < count; ++id) {
      const auto e = edge_from_id(id, n);
      lo_.push_back(e.low().mask);
      hi_.push_back(e.high().mask);
    }
    incident_.resize(std::size_t{1} << n);
    neighbor_mask_.assign(std::size_t{1} << n, 0);
    for (std::uint32_t v = 0; v < (1u << n); ++v) {
      for (const auto &e : incident_edges(CubeVertex{v}, n))
        incident_[v].push_back(e.dense_id);
      for (int d = 0; d < n; ++d)
        neighbor_mask_[v] |= std::uint64_t{1} << (v ^ (1u << d));
    }
    for (std::uint32_t id = 0; id < count; ++id) {
      std::vector<std::uint32_t> c = incident_[lo_[id]];
      c.insert(c.end(), incident_[hi_[id]].begin(), incident_[hi_[id]].end());
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
      candidates_.push_back(std::move(c));
    }
  }

  SolveResult run() {
    // Incumbent: the construction's deletion set.
    const auto pair = extremal_pair(n_);
    std::vector<std::uint32_t> seed;
    for (const auto &e : pair.g.missing_edges())
      seed.push_back(e.dense_id);
    best_size_ = static_cast<int>(seed.size());
    best_ = seed;

    std::vector<Node> frontier = root_children();
    const int threads = std::max(1, options_.threads);
    if (threads > 1) {
      // Split until there is enough independent work to share.
      for (int level = 0; level < 3 && frontier.size() < static_cast<std::size_t>(16 * threads);
           ++level) {
        std::vector<Node> next;
        for (auto &node : frontier)
          expand(node, next);
        frontier = std::move(next);
      }
    }

    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
      std::uint64_t local = 0;
      for (;;) {
        const auto i = cursor.fetch_add(1);
        if (i >= frontier.size() || stop_.load())
          break;
        dfs(frontier[i], local);
      }
      flush(local);
    };
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (int t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    }

    SolveResult result;
    result.nodes_explored = nodes_.load();
    result.proof_complete = !stop_.load();
    std::vector<EdgeIndex> deleted;
    for (auto id : best_)
      deleted.push_back(edge_from_id(id, n_));
    std::sort(deleted.begin(), deleted.end(),
              [](const EdgeIndex &a, const EdgeIndex &b) { return a.dense_id < b.dense_id; });
    result.witness = full_minus(n_, deleted);
    result.optimum_edges = static_cast<std::int64_t>(result.witness.edge_count());
    result.deletions = DeletionCertificate{n_, std::move(deleted), true, result.proof_complete,
                                           std::nullopt};
    return result;
  }

private:
  std::uint64_t cover_of(std::uint32_t id) const {
    return (std::uint64_t{1} << lo_[id]) | (std::uint64_t{1} << hi_[id]);
  }

  std::optional<std::uint32_t> first_undominated(std::uint64_t covered) const {
    for (std::uint32_t id = 0; id < lo_.size(); ++id)
      if (((covered >> lo_[id]) & 1u) == 0 && ((covered >> hi_[id]) & 1u) == 0)
        return id;
    return std::nullopt;
  }

  // Maximum matching among undominated edges (bipartite by parity).
  int undominated_matching(std::uint64_t covered) const {
    const std::uint64_t free_vertices = ~covered & ((std::uint64_t{1} << (1u << n_)) - 1);
    std::array<int, 64> mate;
    mate.fill(-1);
    int size = 0;
    for (std::uint64_t left = free_vertices; left; left &= left - 1) {
      const int u = std::countr_zero(left);
      if (std::popcount(static_cast<unsigned>(u)) % 2 != 0)
        continue;
      if ((neighbor_mask_[u] & free_vertices) == 0)
        continue;
      std::uint64_t visited = 0;
      if (augment(u, free_vertices, visited, mate))
        ++size;
    }
    return size;
  }

  bool augment(int u, std::uint64_t free_vertices, std::uint64_t &visited,
               std::array<int, 64> &mate) const {
    for (std::uint64_t nb = neighbor_mask_[u] & free_vertices & ~visited; nb; nb &= nb - 1) {
      const int w = std::countr_zero(nb);
      visited |= std::uint64_t{1} << w;
      if (mate[w] < 0 || augment(mate[w], free_vertices, visited, mate)) {
        mate[w] = u;
        return true;
      }
    }
    return false;
  }

  int lower_bound(std::uint64_t covered) const {
    std::uint64_t undominated = 0;
    for (std::uint32_t id = 0; id < lo_.size(); ++id)
      if (((covered >> lo_[id]) & 1u) == 0 && ((covered >> hi_[id]) & 1u) == 0)
        ++undominated;
    if (undominated == 0)
      return 0;
    const auto cover = static_cast<int>(covering_lower_bound(undominated, n_));
    const int matching = (undominated_matching(covered) + 1) / 2;
    return std::max(cover, matching);
  }

  std::vector<Node> root_children() {
    const std::uint32_t first = 0;
    std::vector<std::uint32_t> reps = candidates_[first];
    if (options_.symmetry_at_root) {
      // Nothing is chosen at the root, so any solution can be moved by an
      // automorphism to contain an orbit representative.
      const auto group = all_automorphisms(n_);
      std::set<std::uint32_t> seen;
      std::vector<std::uint32_t> kept;
      for (auto id : candidates_[first]) {
        if (seen.count(id))
          continue;
        kept.push_back(id);
        const auto e = edge_from_id(id, n_);
        for (const auto &a : group)
          seen.insert(apply_automorphism(a, e).dense_id);
      }
      reps = kept;
    }
    flush_one();
    std::vector<Node> out;
    EdgeSet excluded;
    for (auto id : reps) {
      Node child;
      child.covered = cover_of(id);
      child.excluded = excluded;
      child.chosen = {id};
      out.push_back(std::move(child));
      if (!options_.symmetry_at_root)
        excluded.set(id);
    }
    return out;
  }

  // One-level expansion for work splitting; solutions are recorded directly.
  void expand(Node &node, std::vector<Node> &out) {
    flush_one();
    const auto target = first_undominated(node.covered);
    if (!target) {
      record(node.chosen);
      return;
    }
    if (static_cast<int>(node.chosen.size()) + lower_bound(node.covered) >= best_size_.load())
      return;
    EdgeSet excluded = node.excluded;
    for (auto id : candidates_[*target]) {
      if (excluded.test(id))
        continue;
      Node child{node.covered | cover_of(id), excluded, node.chosen};
      child.chosen.push_back(id);
      out.push_back(std::move(child));
      excluded.set(id);
    }
  }

  void dfs(Node &node, std::uint64_t &local) {
    if (stop_.load(std::memory_order_relaxed))
      return;
    if (++local >= 1024)
      flush(local);
    const auto target = first_undominated(node.covered);
    if (!target) {
      record(node.chosen);
      return;
    }
    if (static_cast<int>(node.chosen.size()) + lower_bound(node.covered) >=
        best_size_.load(std::memory_order_relaxed))
      return;
    const auto saved_cover = node.covered;
    const auto saved_excluded = node.excluded;
    for (auto id : candidates_[*target]) {
      if (node.excluded.test(id))
        continue;
      node.covered = saved_cover | cover_of(id);
      node.chosen.push_back(id);
      dfs(node, local);
      node.chosen.pop_back();
      node.excluded.set(id);
      if (stop_.load(std::memory_order_relaxed))
        break;
    }
    node.covered = saved_cover;
    node.excluded = saved_excluded;
  }

  void record(const std::vector<std::uint32_t> &chosen) {
    std::lock_guard lock(mutex_);
    if (static_cast<int>(chosen.size()) < best_size_.load()) {
      best_ = chosen;
      best_size_.store(static_cast<int>(chosen.size()));
    }
  }

  void flush_one() {
    std::uint64_t one = 1;
    flush(one);
  }

  void flush(std::uint64_t &local) {
    const auto total = nodes_.fetch_add(local) + local;
    local = 0;
    if (options_.node_budget && total >= *options_.node_budget)
      stop_.store(true);
  }

  int n_;
  BnbOptions options_;
  std::vector<std::uint32_t> lo_, hi_;
  std::vector<std::vector<std::uint32_t>> incident_;
  std::vector<std::uint64_t> neighbor_mask_;
  std::vector<std::vector<std::uint32_t>> candidates_;

  std::atomic<int> best_size_{0};
  std::vector<std::uint32_t> best_;
  std::mutex mutex_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> stop_{false};
};

} // namespace

SolveResult min_edge_dominating(int n, const BnbOptions &options) {
  if (n < 3 || n > kMaxBnbDimension)
    throw std::domain_error("min_edge_dominating supports 3 <= n <= " +
                            std::to_string(kMaxBnbDimension) + ", got " + std::to_string(n));
  DominatingSearch search(n, options);
  return search.run();
}

} // namespace qturan
