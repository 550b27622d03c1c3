#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "relaxmatch/instance.hpp"
#include "relaxmatch/rational.hpp"

namespace relaxmatch {

// Plain bipartite graph over index ranges [0, left_count) x [0, right_count).
// Edges are unique and in canonical (agent, resource) order.
struct BipartiteGraph {
  std::size_t left_count = 0;
  std::size_t right_count = 0;
  std::vector<Edge> edges;
};

// A matching is an edge set with distinct agents and distinct resources,
// kept in canonical order.
using Matching = std::vector<Edge>;

struct WeightedEdge {
  Edge edge;
  BigInt weight;
};

struct WeightedGraph {
  std::size_t left_count = 0;
  std::size_t right_count = 0;
  std::vector<WeightedEdge> edges;
};

struct WeightedMatching {
  Matching matching;
  BigInt total_weight;
};

BipartiteGraph base_graph(const Instance& instance);
BipartiteGraph graph_with(const Instance& instance, const Relaxation& relaxation);

// Hopcroft-Karp. Deterministic: adjacency is scanned in canonical order, so
// equal inputs give identical matchings on every platform.
Matching max_cardinality_matching(const BipartiteGraph& graph);

std::size_t max_matching_size(const BipartiteGraph& graph);

// Exact maximum-weight matching (not necessarily perfect or maximum
// cardinality). Weights are arbitrary-precision integers; an int64 fast path
// is used when the value range provably fits. The result never contains an
// edge whose removal would increase total weight; edges of non-positive
// weight are never used. Deterministic for equal inputs.
WeightedMatching max_weight_matching(const WeightedGraph& graph);

// Γ(F): agents matched in every maximum-cardinality matching of `graph`.
// Computed from one maximum matching plus alternating-path reachability from
// the unmatched agents; independent of which maximum matching is found.
std::vector<std::uint32_t> guaranteed_agents(const BipartiteGraph& graph);

// Independent Γ oracle: enumerates every maximum matching and intersects the
// matched agent sets. Requires left_count + right_count <= size_cap, else
// throws CapExceeded.
std::vector<std::uint32_t> gamma_bruteforce(const BipartiteGraph& graph,
                                            std::size_t size_cap = 16);

}  // namespace relaxmatch
