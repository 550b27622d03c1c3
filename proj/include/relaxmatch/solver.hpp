#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relaxmatch/guarantees.hpp"
#include "relaxmatch/instance.hpp"
#include "relaxmatch/matching.hpp"

namespace relaxmatch {

// How the smallest feasible dummy count k is located. BinarySearch assumes
// the relaxed cost of the optimal k-dummy matching is non-increasing in k;
// LinearScan evaluates every k from |Y| down to 0 without that assumption
// and is authoritative when the two disagree.
enum class SearchMode { kBinarySearch, kLinearScan };

struct SolverConfig {
  Guarantee guarantee = Guarantee::kSnhSb;
  Aggregation aggregation = Aggregation::kTotalCost;
  Bound bound;  // empty = unbounded
  SearchMode mode = SearchMode::kBinarySearch;
};

// The internal optimum matching M_min, split by edge class. Dummy edges are
// reported as a count; relaxed_edges equals the advice set.
struct InternalMatching {
  Matching compatible_edges;
  Matching relaxed_edges;
  std::size_t dummy_count = 0;
};

struct SolveResult {
  Relaxation relaxation;            // advice set Ê
  std::size_t allocation_size = 0;  // μ(E ∪ Ê)
  Rational aggregate_cost;          // g(Ê), always within the bound
  std::size_t k_min = 0;
  InternalMatching internal_matching;
  std::vector<std::string> warnings;
};

// Computes the optimal advice for a one-to-one instance: adds k dummy agents
// compatible with every resource at a dominating weight, takes a
// maximum-weight matching M_k under the guarantee's weight scheme, and finds
// the smallest k whose relaxed edge set respects the bound. Throws ShapeError
// if the instance has demands or capacities above 1.
SolveResult solve(const Instance& instance, const SolverConfig& config);

// Demand/capacity variants: the instance is expanded into unit copies, solved
// one-to-one, and the advice contracted back to original (agent, resource)
// pairs. Copies inherit every incident edge and its discomfort.
SolveResult solve_many_to_one(const Instance& instance, const SolverConfig& config);
SolveResult solve_one_to_many(const Instance& instance, const SolverConfig& config);

// Dispatches on the instance shape.
SolveResult solve_auto(const Instance& instance, const SolverConfig& config);

// A unit-quantity view of an instance: entity "a" with quantity q becomes
// copies "a#0" … "a#q-1". origin vectors map expanded indices back.
struct Expansion {
  Instance instance;
  std::vector<std::uint32_t> agent_origin;
  std::vector<std::uint32_t> resource_origin;
  bool agent_side = true;  // which side was copied
};

Expansion expand_demands(const Instance& instance);
Expansion expand_capacities(const Instance& instance);

// Maps contracted advice onto an expansion: an advised (agent, resource)
// pair is applied to every copy of its expanded endpoint.
Relaxation expand_relaxation(const Instance& original, const Expansion& expansion,
                             const Relaxation& relaxation);

struct OracleComparison {
  std::size_t best_mu = 0;
  Rational best_cost;  // smallest aggregate cost among best_mu advice sets
  bool mu_optimal = false;
  bool cost_optimal = false;
  std::size_t checked_count = 0;
};

// Post-hoc audit of a result. Checks advice validity and the bound, runs the
// definitional guarantee predicates, and compares against the exhaustive
// oracle. Cap overruns are reported as flags, never as exceptions, and the
// result is not modified. Non-unit instances are audited on their expansion,
// with contracted advice applied to every copy.
struct VerificationReport {
  bool relaxation_valid = false;
  bool bound_respected = false;
  GuaranteeReport guarantee;
  bool guarantee_caps_hit = false;
  std::optional<OracleComparison> oracle;
  bool oracle_caps_hit = false;
};

VerificationReport verify_result(const Instance& instance, const SolverConfig& config,
                                 const SolveResult& result);

}  // namespace relaxmatch
