#include "relaxmatch/instance.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "relaxmatch/errors.hpp"

namespace relaxmatch {

std::string to_string(Aggregation aggregation) {
  return aggregation == Aggregation::kSize ? "size" : "total";
}

std::string to_string(Guarantee guarantee) {
  switch (guarantee) {
    case Guarantee::kSnhSb: return "snh-sb";
    case Guarantee::kSnhWb: return "snh-wb";
    case Guarantee::kWnhWb: return "wnh-wb";
  }
  return "";
}

std::optional<Aggregation> aggregation_from_string(const std::string& text) {
  if (text == "size") return Aggregation::kSize;
  if (text == "total") return Aggregation::kTotalCost;
  return std::nullopt;
}

std::optional<Guarantee> guarantee_from_string(const std::string& text) {
  if (text == "snh-sb") return Guarantee::kSnhSb;
  if (text == "snh-wb") return Guarantee::kSnhWb;
  if (text == "wnh-wb") return Guarantee::kWnhWb;
  return std::nullopt;
}

namespace {

template <typename Spec>
std::map<std::string, std::uint32_t> index_by_id(const std::vector<Spec>& specs,
                                                 const char* side) {
  std::map<std::string, std::uint32_t> index;
  for (std::uint32_t i = 0; i < specs.size(); ++i) {
    if (!index.emplace(specs[i].id, i).second)
      throw ValidationError(ValidationError::Kind::DuplicateId,
                            std::string("duplicate ") + side + " id: " + specs[i].id);
  }
  return index;
}

std::uint32_t lookup(const std::map<std::string, std::uint32_t>& index,
                     const std::string& id, const char* side) {
  auto it = index.find(id);
  if (it == index.end())
    throw ValidationError(ValidationError::Kind::DanglingEdge,
                          std::string("edge references unknown ") + side + ": " + id);
  return it->second;
}

}  // namespace

Instance validate_instance(const InstanceData& data) {
  Instance instance;
  instance.agents_ = data.agents;
  instance.resources_ = data.resources;
  std::sort(instance.agents_.begin(), instance.agents_.end(),
            [](const AgentSpec& a, const AgentSpec& b) { return a.id < b.id; });
  std::sort(instance.resources_.begin(), instance.resources_.end(),
            [](const ResourceSpec& a, const ResourceSpec& b) { return a.id < b.id; });

  auto agent_index = index_by_id(instance.agents_, "agent");
  auto resource_index = index_by_id(instance.resources_, "resource");

  for (const AgentSpec& agent : instance.agents_) {
    if (agent.demand == 0)
      throw ValidationError(ValidationError::Kind::NonPositiveQuantity,
                            "agent " + agent.id + " has demand 0");
    if (agent.demand > 1) instance.has_demands_ = true;
  }
  for (const ResourceSpec& resource : instance.resources_) {
    if (resource.capacity == 0)
      throw ValidationError(ValidationError::Kind::NonPositiveQuantity,
                            "resource " + resource.id + " has capacity 0");
    if (resource.capacity > 1) instance.has_capacities_ = true;
  }
  if (instance.has_demands_ && instance.has_capacities_)
    throw ValidationError(ValidationError::Kind::MixedDemandCapacity,
                          "demands above 1 and capacities above 1 may not be mixed");

  std::set<Edge> compatible;
  for (const auto& [agent_id, resource_id] : data.compatible) {
    compatible.insert(Edge{lookup(agent_index, agent_id, "agent"),
                           lookup(resource_index, resource_id, "resource")});
  }
  instance.compatible_.assign(compatible.begin(), compatible.end());

  std::map<Edge, Rational> relaxable;
  for (const auto& raw : data.relaxable) {
    Edge edge{lookup(agent_index, raw.agent, "agent"),
              lookup(resource_index, raw.resource, "resource")};
    if (raw.discomfort <= 0)
      throw ValidationError(ValidationError::Kind::NonPositiveDiscomfort,
                            "relaxable edge (" + raw.agent + ", " + raw.resource +
                                ") has non-positive discomfort");
    if (compatible.count(edge))
      throw ValidationError(ValidationError::Kind::OverlappingEdgeSets,
                            "edge (" + raw.agent + ", " + raw.resource +
                                ") is both compatible and relaxable");
    auto [it, inserted] = relaxable.emplace(edge, raw.discomfort);
    if (!inserted && it->second != raw.discomfort)
      throw ValidationError(ValidationError::Kind::OverlappingEdgeSets,
                            "relaxable edge (" + raw.agent + ", " + raw.resource +
                                ") listed twice with different discomforts");
  }
  instance.relaxable_.reserve(relaxable.size());
  for (const auto& [edge, discomfort] : relaxable)
    instance.relaxable_.push_back(RelaxableEdge{edge, discomfort});

  return instance;
}

std::optional<std::uint32_t> Instance::agent_index(const std::string& id) const {
  auto it = std::lower_bound(agents_.begin(), agents_.end(), id,
                             [](const AgentSpec& a, const std::string& v) { return a.id < v; });
  if (it == agents_.end() || it->id != id) return std::nullopt;
  return static_cast<std::uint32_t>(it - agents_.begin());
}

std::optional<std::uint32_t> Instance::resource_index(const std::string& id) const {
  auto it = std::lower_bound(resources_.begin(), resources_.end(), id,
                             [](const ResourceSpec& r, const std::string& v) { return r.id < v; });
  if (it == resources_.end() || it->id != id) return std::nullopt;
  return static_cast<std::uint32_t>(it - resources_.begin());
}

std::optional<std::size_t> Instance::relaxable_index(const Edge& edge) const {
  auto it = std::lower_bound(relaxable_.begin(), relaxable_.end(), edge,
                             [](const RelaxableEdge& r, const Edge& e) { return r.edge < e; });
  if (it == relaxable_.end() || !(it->edge == edge)) return std::nullopt;
  return static_cast<std::size_t>(it - relaxable_.begin());
}

const Rational& Instance::discomfort(const Edge& edge) const {
  auto index = relaxable_index(edge);
  if (!index)
    throw ValidationError(ValidationError::Kind::DanglingEdge,
                          "edge (" + agent_id(edge.agent) + ", " + resource_id(edge.resource) +
                              ") is not relaxable");
  return relaxable_[*index].discomfort;
}

std::uint64_t Instance::total_demand() const {
  std::uint64_t total = 0;
  for (const AgentSpec& agent : agents_) total += agent.demand;
  return total;
}

std::uint64_t Instance::total_capacity() const {
  std::uint64_t total = 0;
  for (const ResourceSpec& resource : resources_) total += resource.capacity;
  return total;
}

Relaxation canonical_relaxation(const Instance& instance, Relaxation edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const Edge& edge : edges) {
    if (!instance.relaxable_index(edge))
      throw ValidationError(ValidationError::Kind::DanglingEdge,
                            "relaxation contains a non-relaxable edge");
  }
  return edges;
}

Rational aggregate_cost(const Instance& instance, const Relaxation& relaxation,
                        Aggregation aggregation) {
  Rational total = 0;
  for (const Edge& edge : relaxation) {
    if (aggregation == Aggregation::kSize)
      total += 1;
    else
      total += instance.discomfort(edge);
  }
  return total;
}

std::vector<std::uint32_t> agents_of(const Relaxation& relaxation) {
  std::vector<std::uint32_t> agents;
  for (const Edge& edge : relaxation) agents.push_back(edge.agent);
  std::sort(agents.begin(), agents.end());
  agents.erase(std::unique(agents.begin(), agents.end()), agents.end());
  return agents;
}

}  // namespace relaxmatch
