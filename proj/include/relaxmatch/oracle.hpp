#pragma once

#include <cstddef>
#include <vector>

#include "relaxmatch/instance.hpp"
#include "relaxmatch/matching.hpp"

namespace relaxmatch {

struct OracleCaps {
  std::size_t max_relaxable = 12;  // 2^n advice subsets are enumerated
  std::size_t max_vertices = 16;   // matchings are enumerated per subset
};

struct OracleResult {
  std::size_t best_mu = 0;
  Rational best_cost;                        // minimum g over best_mu advice sets
  std::vector<Relaxation> best_relaxations;  // ties, in canonical subset order
  std::size_t checked_count = 0;             // subsets that passed the bound filter
};

// Exhaustive reference optimum for one-to-one instances: enumerates every
// subset of the relaxable edges, keeps the bound-respecting ones that satisfy
// the definitional guarantee predicates, and maximises μ(E ∪ S), breaking
// ties by minimum aggregate cost. Deliberately shares no code with the
// weighted solver: μ and Γ come from direct matching enumeration. Throws
// CapExceeded when either cap is exceeded.
OracleResult brute_force_optimum(const Instance& instance, Guarantee guarantee,
                                 Aggregation aggregation, const Bound& bound,
                                 const OracleCaps& caps = {});

// Every maximum-cardinality matching of `graph`, each in canonical edge
// order, listed in a deterministic order. Requires
// left_count + right_count <= size_cap, else throws CapExceeded.
std::vector<Matching> enumerate_max_matchings(const BipartiteGraph& graph,
                                              std::size_t size_cap = 16);

}  // namespace relaxmatch
