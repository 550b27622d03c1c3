#include "relaxmatch/oracle.hpp"

#include <algorithm>

#include "relaxmatch/errors.hpp"

namespace relaxmatch {

std::vector<Matching> enumerate_max_matchings(const BipartiteGraph& graph,
                                              std::size_t size_cap) {
  if (graph.left_count + graph.right_count > size_cap)
    throw CapExceeded("enumerate_max_matchings: graph has " +
                      std::to_string(graph.left_count + graph.right_count) +
                      " vertices, cap is " + std::to_string(size_cap));

  std::vector<std::vector<std::uint32_t>> neighbours(graph.left_count);
  for (const Edge& edge : graph.edges) neighbours[edge.agent].push_back(edge.resource);

  std::vector<Matching> best_list;
  std::size_t best = 0;
  Matching current;
  std::vector<char> resource_used(graph.right_count, 0);

  auto recurse = [&](auto&& self, std::uint32_t agent) -> void {
    if (current.size() + (graph.left_count - agent) < best) return;
    if (agent == graph.left_count) {
      if (current.size() > best) {
        best = current.size();
        best_list.clear();
      }
      if (current.size() == best) best_list.push_back(current);
      return;
    }
    self(self, agent + 1);
    for (std::uint32_t v : neighbours[agent]) {
      if (resource_used[v]) continue;
      resource_used[v] = 1;
      current.push_back(Edge{agent, v});
      self(self, agent + 1);
      current.pop_back();
      resource_used[v] = 0;
    }
  };
  recurse(recurse, 0);
  return best_list;
}

namespace {

struct SubsetStats {
  std::size_t mu = 0;
  std::vector<std::uint32_t> gamma;
};

SubsetStats stats_of(const Instance& instance, const Relaxation& subset, std::size_t cap) {
  std::vector<Matching> matchings = enumerate_max_matchings(graph_with(instance, subset), cap);
  SubsetStats stats;
  stats.mu = matchings.empty() ? 0 : matchings.front().size();
  std::vector<std::size_t> count(instance.agent_count(), 0);
  for (const Matching& matching : matchings)
    for (const Edge& edge : matching) ++count[edge.agent];
  for (std::uint32_t a = 0; a < instance.agent_count(); ++a)
    if (count[a] == matchings.size() && !matchings.empty()) stats.gamma.push_back(a);
  return stats;
}

bool contains_all(const std::vector<std::uint32_t>& haystack,
                  const std::vector<std::uint32_t>& needles) {
  return std::includes(haystack.begin(), haystack.end(), needles.begin(), needles.end());
}

}  // namespace

OracleResult brute_force_optimum(const Instance& instance, Guarantee guarantee,
                                 Aggregation aggregation, const Bound& bound,
                                 const OracleCaps& caps) {
  if (!instance.is_one_to_one())
    throw ShapeError("brute_force_optimum requires a one-to-one instance; expand first");
  std::size_t m = instance.relaxable().size();
  if (m > caps.max_relaxable)
    throw CapExceeded("brute_force_optimum: " + std::to_string(m) +
                      " relaxable edges, cap is " + std::to_string(caps.max_relaxable));
  if (instance.agent_count() + instance.resource_count() > caps.max_vertices)
    throw CapExceeded("brute_force_optimum: " +
                      std::to_string(instance.agent_count() + instance.resource_count()) +
                      " vertices, cap is " + std::to_string(caps.max_vertices));

  std::size_t mask_count = std::size_t{1} << m;
  auto subset_of = [&](std::size_t mask) {
    Relaxation subset;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) subset.push_back(instance.relaxable()[i].edge);
    return subset;
  };

  std::vector<std::size_t> mu(mask_count);
  std::vector<char> no_harm(mask_count), benefit(mask_count);
  {
    SubsetStats base = stats_of(instance, {}, caps.max_vertices);
    for (std::size_t mask = 0; mask < mask_count; ++mask) {
      Relaxation subset = subset_of(mask);
      SubsetStats stats = mask == 0 ? base : stats_of(instance, subset, caps.max_vertices);
      mu[mask] = stats.mu;
      no_harm[mask] = contains_all(stats.gamma, base.gamma);
      benefit[mask] = contains_all(stats.gamma, agents_of(subset));
    }
  }

  // all_*[S] = predicate holds on every subset of S; every proper subset of S
  // misses at least one set bit, so AND over the one-bit-removed masks covers
  // them all.
  std::vector<char> all_no_harm, all_both;
  if (guarantee != Guarantee::kWnhWb) {
    all_no_harm.resize(mask_count);
    all_both.resize(mask_count);
    for (std::size_t mask = 0; mask < mask_count; ++mask) {
      bool nh = no_harm[mask];
      bool both = nh && benefit[mask];
      for (std::size_t i = 0; i < m && (nh || both); ++i) {
        if (!(mask >> i & 1)) continue;
        nh = nh && all_no_harm[mask & ~(std::size_t{1} << i)];
        both = both && all_both[mask & ~(std::size_t{1} << i)];
      }
      all_no_harm[mask] = nh;
      all_both[mask] = both;
    }
  }

  auto admissible = [&](std::size_t mask) {
    switch (guarantee) {
      case Guarantee::kSnhSb: return static_cast<bool>(all_both[mask]);
      case Guarantee::kSnhWb: return all_no_harm[mask] && benefit[mask];
      case Guarantee::kWnhWb: return no_harm[mask] && benefit[mask];
    }
    return false;
  };

  OracleResult result;
  bool have_best = false;
  for (std::size_t mask = 0; mask < mask_count; ++mask) {
    Relaxation subset = subset_of(mask);
    Rational cost = aggregate_cost(instance, subset, aggregation);
    if (!within_bound(cost, bound)) continue;
    ++result.checked_count;
    if (!admissible(mask)) continue;
    bool better = !have_best || mu[mask] > result.best_mu ||
                  (mu[mask] == result.best_mu && cost < result.best_cost);
    if (better) {
      have_best = true;
      result.best_mu = mu[mask];
      result.best_cost = cost;
      result.best_relaxations.clear();
      result.best_relaxations.push_back(std::move(subset));
    } else if (mu[mask] == result.best_mu && cost == result.best_cost) {
      result.best_relaxations.push_back(std::move(subset));
    }
  }
  // The empty advice set is always admissible and within any bound.
  return result;
}

}  // namespace relaxmatch
