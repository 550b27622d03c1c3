#include "relaxmatch/solver.hpp"

#include <algorithm>
#include <cassert>
#include <iterator>
#include <map>

#include "relaxmatch/errors.hpp"
#include "relaxmatch/oracle.hpp"
#include "relaxmatch/weights.hpp"

namespace relaxmatch {

namespace {

struct KEvaluation {
  Matching compatible_part;  // M_k ∩ E
  Relaxation relaxed_part;   // M_k ∖ (E ∪ E_k)
  std::size_t dummy_matched = 0;
  Rational relaxed_cost;
  bool feasible = false;
};

std::string pad_number(std::size_t value, std::size_t width) {
  std::string digits = std::to_string(value);
  return std::string(width > digits.size() ? width - digits.size() : 0, '0') + digits;
}

std::size_t digit_width(std::size_t max_value) {
  return std::to_string(max_value).size();
}

SolveResult solve_unit(const Instance& instance, const SolverConfig& config) {
  WeightScheme scheme = build_weights(instance, config.guarantee, config.aggregation);
  std::vector<WeightedEdge> real_edges;
  real_edges.reserve(scheme.compatible.size() + scheme.relaxable.size());
  std::merge(scheme.compatible.begin(), scheme.compatible.end(), scheme.relaxable.begin(),
             scheme.relaxable.end(), std::back_inserter(real_edges),
             [](const WeightedEdge& a, const WeightedEdge& b) { return a.edge < b.edge; });

  std::size_t agent_count = instance.agent_count();
  std::size_t resource_count = instance.resource_count();

  auto evaluate = [&](std::size_t k) {
    WeightedGraph graph;
    graph.left_count = agent_count + k;
    graph.right_count = resource_count;
    graph.edges = real_edges;
    for (std::size_t d = 0; d < k; ++d)
      for (std::uint32_t r = 0; r < resource_count; ++r)
        graph.edges.push_back(
            WeightedEdge{Edge{static_cast<std::uint32_t>(agent_count + d), r},
                         scheme.dummy_weight});

    WeightedMatching best = max_weight_matching(graph);
    KEvaluation eval;
    for (const Edge& edge : best.matching) {
      if (edge.agent >= agent_count) {
        ++eval.dummy_matched;
      } else if (instance.relaxable_index(edge)) {
        eval.relaxed_part.push_back(edge);
      } else {
        eval.compatible_part.push_back(edge);
      }
    }
    eval.relaxed_cost = aggregate_cost(instance, eval.relaxed_part, config.aggregation);
    eval.feasible = within_bound(eval.relaxed_cost, config.bound);
    return eval;
  };

  std::optional<std::size_t> k_min;
  KEvaluation chosen;
  if (config.mode == SearchMode::kBinarySearch) {
    std::ptrdiff_t lo = 0;
    std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(resource_count);
    while (lo <= hi) {
      std::ptrdiff_t mid = lo + (hi - lo) / 2;
      KEvaluation eval = evaluate(static_cast<std::size_t>(mid));
      if (eval.feasible) {
        k_min = static_cast<std::size_t>(mid);
        chosen = std::move(eval);
        hi = mid - 1;
      } else {
        lo = mid + 1;
      }
    }
  } else {
    for (std::ptrdiff_t k = static_cast<std::ptrdiff_t>(resource_count); k >= 0; --k) {
      KEvaluation eval = evaluate(static_cast<std::size_t>(k));
      if (eval.feasible) {
        k_min = static_cast<std::size_t>(k);
        chosen = std::move(eval);
      }
    }
  }
  // k = |Y| matches every resource to a dummy, relaxing nothing, so some
  // feasible k always exists.
  assert(k_min.has_value());

  SolveResult result;
  result.relaxation = chosen.relaxed_part;
  result.k_min = *k_min;
  result.aggregate_cost = chosen.relaxed_cost;
  result.allocation_size = max_matching_size(graph_with(instance, result.relaxation));
  result.internal_matching.compatible_edges = std::move(chosen.compatible_part);
  result.internal_matching.relaxed_edges = result.relaxation;
  result.internal_matching.dummy_count = chosen.dummy_matched;
  return result;
}

Expansion expand_side(const Instance& instance, bool agent_side) {
  InstanceData data;
  std::map<std::string, std::uint32_t> origin_of_id;

  if (agent_side) {
    for (std::uint32_t i = 0; i < instance.agent_count(); ++i) {
      const AgentSpec& agent = instance.agents()[i];
      std::size_t width = digit_width(agent.demand - 1);
      for (std::uint32_t j = 0; j < agent.demand; ++j) {
        std::string copy_id = agent.id + "#" + pad_number(j, width);
        data.agents.push_back(AgentSpec{copy_id, 1});
        origin_of_id.emplace(copy_id, i);
      }
    }
    data.resources = instance.resources();
  } else {
    for (std::uint32_t i = 0; i < instance.resource_count(); ++i) {
      const ResourceSpec& resource = instance.resources()[i];
      std::size_t width = digit_width(resource.capacity - 1);
      for (std::uint32_t j = 0; j < resource.capacity; ++j) {
        std::string copy_id = resource.id + "#" + pad_number(j, width);
        data.resources.push_back(ResourceSpec{copy_id, 1});
        origin_of_id.emplace(copy_id, i);
      }
    }
    data.agents = instance.agents();
  }

  auto emit = [&](const Edge& edge, const Rational* discomfort) {
    const std::string& agent_id = instance.agent_id(edge.agent);
    const std::string& resource_id = instance.resource_id(edge.resource);
    auto push = [&](const std::string& a, const std::string& r) {
      if (discomfort)
        data.relaxable.push_back(InstanceData::RawRelaxable{a, r, *discomfort});
      else
        data.compatible.emplace_back(a, r);
    };
    if (agent_side) {
      std::uint32_t copies = instance.demand(edge.agent);
      std::size_t width = digit_width(copies - 1);
      for (std::uint32_t j = 0; j < copies; ++j)
        push(agent_id + "#" + pad_number(j, width), resource_id);
    } else {
      std::uint32_t copies = instance.capacity(edge.resource);
      std::size_t width = digit_width(copies - 1);
      for (std::uint32_t j = 0; j < copies; ++j)
        push(agent_id, resource_id + "#" + pad_number(j, width));
    }
  };
  for (const Edge& edge : instance.compatible()) emit(edge, nullptr);
  for (const RelaxableEdge& relaxable : instance.relaxable())
    emit(relaxable.edge, &relaxable.discomfort);

  Expansion expansion;
  expansion.agent_side = agent_side;
  expansion.instance = validate_instance(data);
  if (agent_side) {
    expansion.agent_origin.resize(expansion.instance.agent_count());
    for (std::uint32_t i = 0; i < expansion.instance.agent_count(); ++i)
      expansion.agent_origin[i] = origin_of_id.at(expansion.instance.agent_id(i));
    expansion.resource_origin.resize(instance.resource_count());
    for (std::uint32_t i = 0; i < instance.resource_count(); ++i)
      expansion.resource_origin[i] = i;
  } else {
    expansion.resource_origin.resize(expansion.instance.resource_count());
    for (std::uint32_t i = 0; i < expansion.instance.resource_count(); ++i)
      expansion.resource_origin[i] = origin_of_id.at(expansion.instance.resource_id(i));
    expansion.agent_origin.resize(instance.agent_count());
    for (std::uint32_t i = 0; i < instance.agent_count(); ++i)
      expansion.agent_origin[i] = i;
  }
  return expansion;
}

SolveResult contract_result(const Instance& original, const Expansion& expansion,
                            SolveResult expanded, Aggregation aggregation) {
  auto map_edge = [&](const Edge& edge) {
    return Edge{expansion.agent_origin[edge.agent], expansion.resource_origin[edge.resource]};
  };
  auto map_matching = [&](const Matching& matching) {
    Matching mapped;
    mapped.reserve(matching.size());
    for (const Edge& edge : matching) mapped.push_back(map_edge(edge));
    std::sort(mapped.begin(), mapped.end());
    return mapped;
  };

  SolveResult result;
  result.relaxation = map_matching(expanded.relaxation);
  // A matching uses each resource (copy) once, so no advice pair can appear
  // twice after contraction.
  assert(std::adjacent_find(result.relaxation.begin(), result.relaxation.end()) ==
         result.relaxation.end());
  result.allocation_size = expanded.allocation_size;
  result.aggregate_cost = aggregate_cost(original, result.relaxation, aggregation);
  assert(result.aggregate_cost == expanded.aggregate_cost);
  result.k_min = expanded.k_min;
  result.internal_matching.compatible_edges =
      map_matching(expanded.internal_matching.compatible_edges);
  result.internal_matching.relaxed_edges = result.relaxation;
  result.internal_matching.dummy_count = expanded.internal_matching.dummy_count;
  result.warnings = std::move(expanded.warnings);
  return result;
}

}  // namespace

Relaxation expand_relaxation(const Instance& original, const Expansion& expansion,
                             const Relaxation& relaxation) {
  std::vector<std::vector<std::uint32_t>> copies(
      expansion.agent_side ? original.agent_count() : original.resource_count());
  if (expansion.agent_side) {
    for (std::uint32_t i = 0; i < expansion.instance.agent_count(); ++i)
      copies[expansion.agent_origin[i]].push_back(i);
  } else {
    for (std::uint32_t i = 0; i < expansion.instance.resource_count(); ++i)
      copies[expansion.resource_origin[i]].push_back(i);
  }
  Relaxation expanded;
  for (const Edge& edge : relaxation) {
    if (expansion.agent_side) {
      for (std::uint32_t copy : copies[edge.agent])
        expanded.push_back(Edge{copy, edge.resource});
    } else {
      for (std::uint32_t copy : copies[edge.resource])
        expanded.push_back(Edge{edge.agent, copy});
    }
  }
  std::sort(expanded.begin(), expanded.end());
  return expanded;
}

SolveResult solve(const Instance& instance, const SolverConfig& config) {
  if (!instance.is_one_to_one())
    throw ShapeError("solve requires a one-to-one instance; use solve_many_to_one or "
                     "solve_one_to_many");
  return solve_unit(instance, config);
}

SolveResult solve_many_to_one(const Instance& instance, const SolverConfig& config) {
  if (instance.has_capacities())
    throw ShapeError("solve_many_to_one requires unit capacities");
  Expansion expansion = expand_demands(instance);
  SolveResult expanded = solve_unit(expansion.instance, config);
  for (const AgentSpec& agent : instance.agents()) {
    if (agent.demand > instance.resource_count())
      expanded.warnings.push_back("agent " + agent.id + " demands " +
                                  std::to_string(agent.demand) + " but only " +
                                  std::to_string(instance.resource_count()) +
                                  " resources exist");
  }
  return contract_result(instance, expansion, std::move(expanded), config.aggregation);
}

SolveResult solve_one_to_many(const Instance& instance, const SolverConfig& config) {
  if (instance.has_demands())
    throw ShapeError("solve_one_to_many requires unit demands");
  Expansion expansion = expand_capacities(instance);
  SolveResult expanded = solve_unit(expansion.instance, config);
  return contract_result(instance, expansion, std::move(expanded), config.aggregation);
}

SolveResult solve_auto(const Instance& instance, const SolverConfig& config) {
  if (instance.has_demands()) return solve_many_to_one(instance, config);
  if (instance.has_capacities()) return solve_one_to_many(instance, config);
  return solve(instance, config);
}

Expansion expand_demands(const Instance& instance) {
  if (instance.has_capacities())
    throw ShapeError("expand_demands requires unit capacities");
  return expand_side(instance, true);
}

Expansion expand_capacities(const Instance& instance) {
  if (instance.has_demands())
    throw ShapeError("expand_capacities requires unit demands");
  return expand_side(instance, false);
}

namespace {

bool contains_all(const std::vector<std::uint32_t>& haystack,
                  const std::vector<std::uint32_t>& needles) {
  return std::includes(haystack.begin(), haystack.end(), needles.begin(), needles.end());
}

// Guarantee predicates for a non-unit instance, evaluated on its expansion:
// a contracted subset F is applied to every copy, and an original agent
// counts as guaranteed when all of its copies are.
GuaranteeReport check_guarantee_expanded(const Instance& instance, const Expansion& expansion,
                                         const Relaxation& relaxation, Guarantee guarantee,
                                         bool agent_side) {
  GuaranteeReport report;
  report.guarantee = guarantee;

  auto original_gamma = [&](const Relaxation& contracted) {
    Relaxation applied = expand_relaxation(instance, expansion, contracted);
    std::vector<std::uint32_t> gamma =
        guaranteed_agents(graph_with(expansion.instance, applied));
    std::vector<std::size_t> guaranteed_copies(instance.agent_count(), 0);
    for (std::uint32_t copy : gamma) ++guaranteed_copies[expansion.agent_origin[copy]];
    std::vector<std::uint32_t> original;
    for (std::uint32_t a = 0; a < instance.agent_count(); ++a)
      if (guaranteed_copies[a] == (agent_side ? instance.demand(a) : 1)) original.push_back(a);
    return original;
  };

  std::vector<std::uint32_t> gamma_base = original_gamma({});
  auto inspect = [&](const Relaxation& subset, bool check_no_harm, bool check_benefit) {
    std::vector<std::uint32_t> gamma = original_gamma(subset);
    ++report.subsets_checked;
    bool no_harm_ok = !check_no_harm || contains_all(gamma, gamma_base);
    bool benefit_ok = !check_benefit || contains_all(gamma, agents_of(subset));
    if (no_harm_ok && benefit_ok) return;
    report.passed = false;
    ++report.violation_count;
    if (report.violations.size() < kMaxRecordedViolations)
      report.violations.push_back(GuaranteeViolation{subset, no_harm_ok, benefit_ok});
  };

  if (guarantee == Guarantee::kWnhWb) {
    inspect(relaxation, true, true);
    return report;
  }
  if (relaxation.size() > kDefaultSubsetCap)
    throw CapExceeded("guarantee audit: advice set has " + std::to_string(relaxation.size()) +
                      " edges, subset cap is " + std::to_string(kDefaultSubsetCap));
  bool benefit_all_subsets = guarantee == Guarantee::kSnhSb;
  std::uint64_t subset_count = std::uint64_t{1} << relaxation.size();
  for (std::uint64_t mask = 0; mask < subset_count; ++mask) {
    Relaxation subset;
    for (std::size_t i = 0; i < relaxation.size(); ++i)
      if (mask >> i & 1) subset.push_back(relaxation[i]);
    inspect(subset, true, benefit_all_subsets || mask + 1 == subset_count);
  }
  return report;
}

}  // namespace

VerificationReport verify_result(const Instance& instance, const SolverConfig& config,
                                 const SolveResult& result) {
  VerificationReport report;

  try {
    Relaxation canonical = canonical_relaxation(instance, result.relaxation);
    report.relaxation_valid = canonical == result.relaxation;
  } catch (const ValidationError&) {
    report.relaxation_valid = false;
  }
  report.bound_respected =
      report.relaxation_valid &&
      result.aggregate_cost == aggregate_cost(instance, result.relaxation, config.aggregation) &&
      within_bound(result.aggregate_cost, config.bound);

  bool unit = instance.is_one_to_one();
  std::optional<Expansion> expansion;
  if (!unit)
    expansion = instance.has_demands() ? expand_demands(instance) : expand_capacities(instance);

  if (report.relaxation_valid) {
    try {
      report.guarantee =
          unit ? check_guarantee(instance, result.relaxation, config.guarantee)
               : check_guarantee_expanded(instance, *expansion, result.relaxation,
                                          config.guarantee, instance.has_demands());
    } catch (const CapExceeded&) {
      report.guarantee_caps_hit = true;
      report.guarantee.guarantee = config.guarantee;
      report.guarantee.passed = false;
    }
  }

  try {
    const Instance& oracle_instance = unit ? instance : expansion->instance;
    OracleResult oracle = brute_force_optimum(oracle_instance, config.guarantee,
                                              config.aggregation, config.bound);
    OracleComparison comparison;
    comparison.best_mu = oracle.best_mu;
    comparison.best_cost = oracle.best_cost;
    comparison.checked_count = oracle.checked_count;
    comparison.mu_optimal = result.allocation_size == oracle.best_mu;
    comparison.cost_optimal = comparison.mu_optimal && result.aggregate_cost == oracle.best_cost;
    report.oracle = comparison;
  } catch (const CapExceeded&) {
    report.oracle_caps_hit = true;
  }
  return report;
}

}  // namespace relaxmatch
