#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relaxmatch/rational.hpp"

namespace relaxmatch {

// Index-based edge into a validated Instance: agent row, resource column.
// Canonical order is (agent, resource) ascending, which after validation
// coincides with lexicographic order of the string ids.
struct Edge {
  std::uint32_t agent = 0;
  std::uint32_t resource = 0;
  auto operator<=>(const Edge&) const = default;
};

// A relaxation advice set: a canonical-order subset of the relaxable edges.
using Relaxation = std::vector<Edge>;

enum class Aggregation { kSize, kTotalCost };
enum class Guarantee { kSnhSb, kSnhWb, kWnhWb };

std::string to_string(Aggregation aggregation);
std::string to_string(Guarantee guarantee);
std::optional<Aggregation> aggregation_from_string(const std::string& text);
std::optional<Guarantee> guarantee_from_string(const std::string& text);

struct AgentSpec {
  std::string id;
  std::uint32_t demand = 1;
  bool operator==(const AgentSpec&) const = default;
};

struct ResourceSpec {
  std::string id;
  std::uint32_t capacity = 1;
  bool operator==(const ResourceSpec&) const = default;
};

struct RelaxableEdge {
  Edge edge;
  Rational discomfort;
  bool operator==(const RelaxableEdge&) const = default;
};

// Unvalidated instance as read from a file or built by a generator.
struct InstanceData {
  struct RawRelaxable {
    std::string agent;
    std::string resource;
    Rational discomfort;
  };
  std::vector<AgentSpec> agents;
  std::vector<ResourceSpec> resources;
  std::vector<std::pair<std::string, std::string>> compatible;
  std::vector<RawRelaxable> relaxable;
};

// A validated allocation instance. Agents and resources are sorted by id,
// edges are deduplicated and held in canonical order, and every edge refers
// to a declared endpoint. At most one side may have quantities above 1.
class Instance {
 public:
  std::size_t agent_count() const { return agents_.size(); }
  std::size_t resource_count() const { return resources_.size(); }
  const std::vector<AgentSpec>& agents() const { return agents_; }
  const std::vector<ResourceSpec>& resources() const { return resources_; }
  const std::vector<Edge>& compatible() const { return compatible_; }
  const std::vector<RelaxableEdge>& relaxable() const { return relaxable_; }

  const std::string& agent_id(std::uint32_t index) const { return agents_[index].id; }
  const std::string& resource_id(std::uint32_t index) const { return resources_[index].id; }
  std::uint32_t demand(std::uint32_t index) const { return agents_[index].demand; }
  std::uint32_t capacity(std::uint32_t index) const { return resources_[index].capacity; }

  std::optional<std::uint32_t> agent_index(const std::string& id) const;
  std::optional<std::uint32_t> resource_index(const std::string& id) const;

  // Position of `edge` in relaxable(), if it is a relaxable edge.
  std::optional<std::size_t> relaxable_index(const Edge& edge) const;
  const Rational& discomfort(const Edge& edge) const;

  bool is_one_to_one() const { return !has_demands() && !has_capacities(); }
  bool has_demands() const { return has_demands_; }
  bool has_capacities() const { return has_capacities_; }
  std::uint64_t total_demand() const;
  std::uint64_t total_capacity() const;

  bool operator==(const Instance&) const = default;

 private:
  friend Instance validate_instance(const InstanceData& data);

  std::vector<AgentSpec> agents_;
  std::vector<ResourceSpec> resources_;
  std::vector<Edge> compatible_;
  std::vector<RelaxableEdge> relaxable_;
  bool has_demands_ = false;
  bool has_capacities_ = false;
};

// Checks ids, endpoint references, edge-set disjointness, discomfort
// positivity and quantity shape, then produces the canonical Instance.
// Throws ValidationError on any violation.
Instance validate_instance(const InstanceData& data);

// Sorts, deduplicates and checks that every edge is relaxable in `instance`.
// Throws ValidationError (DanglingEdge) otherwise.
Relaxation canonical_relaxation(const Instance& instance, Relaxation edges);

// Σ of u over `relaxation`: u ≡ 1 under Size, u = discomfort under TotalCost.
// Every edge must be relaxable in `instance`.
Rational aggregate_cost(const Instance& instance, const Relaxation& relaxation,
                        Aggregation aggregation);

// Agents touched by at least one edge of `relaxation`, ascending.
std::vector<std::uint32_t> agents_of(const Relaxation& relaxation);

}  // namespace relaxmatch
