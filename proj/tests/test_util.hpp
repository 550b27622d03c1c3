#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "relaxmatch/instance.hpp"
#include "relaxmatch/matching.hpp"
#include "relaxmatch/rng.hpp"

namespace relaxmatch::testutil {

using EdgeSpec = std::pair<std::string, std::string>;
// agent, resource, discomfort (decimal or p/q string)
using RelaxSpec = std::tuple<std::string, std::string, std::string>;

inline Instance make_instance(const std::vector<std::string>& agents,
                              const std::vector<std::string>& resources,
                              const std::vector<EdgeSpec>& compatible,
                              const std::vector<RelaxSpec>& relaxable) {
  InstanceData data;
  for (const auto& id : agents) data.agents.push_back({id, 1});
  for (const auto& id : resources) data.resources.push_back({id, 1});
  for (const auto& [a, r] : compatible) data.compatible.emplace_back(a, r);
  for (const auto& [a, r, d] : relaxable) data.relaxable.push_back({a, r, parse_rational(d)});
  return validate_instance(data);
}

inline Instance make_sized_instance(const std::vector<AgentSpec>& agents,
                                    const std::vector<ResourceSpec>& resources,
                                    const std::vector<EdgeSpec>& compatible,
                                    const std::vector<RelaxSpec>& relaxable) {
  InstanceData data;
  data.agents = agents;
  data.resources = resources;
  for (const auto& [a, r] : compatible) data.compatible.emplace_back(a, r);
  for (const auto& [a, r, d] : relaxable) data.relaxable.push_back({a, r, parse_rational(d)});
  return validate_instance(data);
}

inline Edge edge_of(const Instance& inst, const std::string& agent, const std::string& resource) {
  return Edge{inst.agent_index(agent).value(), inst.resource_index(resource).value()};
}

inline Relaxation advice_of(const Instance& inst, const std::vector<EdgeSpec>& edges) {
  Relaxation advice;
  for (const auto& [a, r] : edges) advice.push_back(edge_of(inst, a, r));
  return canonical_relaxation(inst, advice);
}

// 2x2 instance where the weak guarantee strictly beats the strong one:
// relaxing (x2,y1) alone would evict x1 from its only compatible resource,
// so snh-sb must advise nothing, while wnh-wb can advise both edges.
inline Instance strictness_instance() {
  return make_instance({"x1", "x2"}, {"y1", "y2"}, {{"x1", "y1"}},
                       {{"x1", "y2", "1"}, {"x2", "y1", "1"}});
}

// Random one-to-one instance for property suites. Ids are zero-padded so the
// canonical (lexicographic) order equals index order. Densities keep the
// relaxable set within `max_relaxable`.
inline Instance random_instance(Rng& rng, std::size_t max_agents, std::size_t max_resources,
                                std::size_t max_relaxable) {
  std::size_t nx = rng.uniform(1, max_agents);
  std::size_t ny = rng.uniform(1, max_resources);
  InstanceData data;
  for (std::size_t i = 0; i < nx; ++i) data.agents.push_back({"x" + std::to_string(i), 1});
  for (std::size_t j = 0; j < ny; ++j) data.resources.push_back({"y" + std::to_string(j), 1});

  std::vector<EdgeSpec> candidates;
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) {
      std::uint64_t roll = rng.uniform(0, 99);
      if (roll < 30)
        data.compatible.emplace_back(data.agents[i].id, data.resources[j].id);
      else if (roll < 65)
        candidates.emplace_back(data.agents[i].id, data.resources[j].id);
    }

  std::vector<std::size_t> keep = rng.sample(candidates.size(),
                                             std::min(candidates.size(), max_relaxable));
  std::sort(keep.begin(), keep.end());
  for (std::size_t index : keep) {
    Rational num = static_cast<int>(rng.uniform(1, 8));
    Rational den = static_cast<int>(rng.uniform(1, 3));
    data.relaxable.push_back({candidates[index].first, candidates[index].second, num / den});
  }
  return validate_instance(data);
}

inline BipartiteGraph random_graph(Rng& rng, std::size_t max_left, std::size_t max_right,
                                   std::uint32_t density_permille) {
  BipartiteGraph graph;
  graph.left_count = rng.uniform(1, max_left);
  graph.right_count = rng.uniform(1, max_right);
  for (std::uint32_t i = 0; i < graph.left_count; ++i)
    for (std::uint32_t j = 0; j < graph.right_count; ++j)
      if (rng.chance_permille(density_permille)) graph.edges.push_back({i, j});
  return graph;
}

// Exhaustive maximum-weight oracle over all matchings; 2^|edges| search,
// test-only. Returns the best total weight (empty matching = 0).
inline BigInt max_weight_bruteforce(const WeightedGraph& graph) {
  BigInt best = 0;
  std::vector<bool> row(graph.left_count, false), col(graph.right_count, false);
  auto recurse = [&](auto&& self, std::size_t index, const BigInt& total) -> void {
    if (total > best) best = total;
    if (index == graph.edges.size()) return;
    self(self, index + 1, total);
    const WeightedEdge& we = graph.edges[index];
    if (!row[we.edge.agent] && !col[we.edge.resource]) {
      row[we.edge.agent] = col[we.edge.resource] = true;
      self(self, index + 1, total + we.weight);
      row[we.edge.agent] = col[we.edge.resource] = false;
    }
  };
  recurse(recurse, 0, BigInt(0));
  return best;
}

// Exhaustive maximum-cardinality size, test-only.
inline std::size_t max_matching_size_bruteforce(const BipartiteGraph& graph) {
  WeightedGraph weighted{graph.left_count, graph.right_count, {}};
  for (const Edge& e : graph.edges) weighted.edges.push_back({e, BigInt(1)});
  return static_cast<std::size_t>(max_weight_bruteforce(weighted));
}

}  // namespace relaxmatch::testutil
