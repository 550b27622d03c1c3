#include "relaxmatch/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "relaxmatch/errors.hpp"

namespace relaxmatch {

namespace {

using Json = nlohmann::ordered_json;

Rational discomfort_from_json(const Json& value) {
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const ParseError&) {
      throw ParseError("invalid discomfort literal: " + value.get<std::string>());
    }
  }
  if (value.is_number_integer()) return Rational(value.get<long long>());
  throw ParseError("discomfort must be a decimal string or an integer");
}

Json edge_json(const Instance& instance, const Edge& edge) {
  return Json::array({instance.agent_id(edge.agent), instance.resource_id(edge.resource)});
}

Json relaxation_json(const Instance& instance, const Relaxation& relaxation) {
  Json list = Json::array();
  for (const Edge& edge : relaxation) {
    Json entry;
    entry["agent"] = instance.agent_id(edge.agent);
    entry["resource"] = instance.resource_id(edge.resource);
    entry["discomfort"] = format_rational(instance.discomfort(edge));
    list.push_back(std::move(entry));
  }
  return list;
}

Json report_json(const Instance& instance, const VerificationReport& verification) {
  const GuaranteeReport& guarantee = verification.guarantee;
  Json block;
  block["guarantee"] = to_string(guarantee.guarantee);
  block["passed"] = guarantee.passed;
  block["subsets_checked"] = guarantee.subsets_checked;
  block["violation_count"] = guarantee.violation_count;
  Json violations = Json::array();
  for (const GuaranteeViolation& violation : guarantee.violations) {
    Json entry;
    Json subset = Json::array();
    for (const Edge& edge : violation.subset) subset.push_back(edge_json(instance, edge));
    entry["subset"] = std::move(subset);
    entry["no_harm"] = violation.no_harm_ok;
    entry["benefit"] = violation.benefit_ok;
    violations.push_back(std::move(entry));
  }
  block["violations"] = std::move(violations);
  block["caps_hit"] = verification.guarantee_caps_hit;
  block["relaxation_valid"] = verification.relaxation_valid;
  block["bound_respected"] = verification.bound_respected;
  if (verification.oracle) {
    Json oracle;
    oracle["best_mu"] = verification.oracle->best_mu;
    oracle["best_cost"] = format_rational(verification.oracle->best_cost);
    oracle["mu_optimal"] = verification.oracle->mu_optimal;
    oracle["cost_optimal"] = verification.oracle->cost_optimal;
    oracle["checked_count"] = verification.oracle->checked_count;
    block["oracle"] = std::move(oracle);
  }
  block["oracle_caps_hit"] = verification.oracle_caps_hit;
  return block;
}

}  // namespace

InstanceData parse_instance_data(const std::string& json_text) {
  Json root;
  try {
    root = Json::parse(json_text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    InstanceData data;
    if (!root.is_object()) throw ParseError("instance file must be a JSON object");
    for (const Json& agent : root.value("agents", Json::array())) {
      AgentSpec spec;
      spec.id = agent.at("id").get<std::string>();
      spec.demand = agent.value("demand", 1u);
      data.agents.push_back(std::move(spec));
    }
    for (const Json& resource : root.value("resources", Json::array())) {
      ResourceSpec spec;
      spec.id = resource.at("id").get<std::string>();
      spec.capacity = resource.value("capacity", 1u);
      data.resources.push_back(std::move(spec));
    }
    for (const Json& edge : root.value("compatible", Json::array())) {
      if (!edge.is_array() || edge.size() != 2)
        throw ParseError("compatible edges must be [agent, resource] pairs");
      data.compatible.emplace_back(edge[0].get<std::string>(), edge[1].get<std::string>());
    }
    for (const Json& edge : root.value("relaxable", Json::array())) {
      InstanceData::RawRelaxable raw;
      raw.agent = edge.at("agent").get<std::string>();
      raw.resource = edge.at("resource").get<std::string>();
      raw.discomfort = discomfort_from_json(edge.at("discomfort"));
      data.relaxable.push_back(std::move(raw));
    }
    return data;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed instance: ") + e.what());
  }
}

Instance load_instance(const std::string& path) {
  return validate_instance(parse_instance_data(read_text_file(path)));
}

std::string instance_to_json(const Instance& instance) {
  Json root;
  Json agents = Json::array();
  for (const AgentSpec& agent : instance.agents()) {
    Json entry;
    entry["id"] = agent.id;
    entry["demand"] = agent.demand;
    agents.push_back(std::move(entry));
  }
  root["agents"] = std::move(agents);
  Json resources = Json::array();
  for (const ResourceSpec& resource : instance.resources()) {
    Json entry;
    entry["id"] = resource.id;
    entry["capacity"] = resource.capacity;
    resources.push_back(std::move(entry));
  }
  root["resources"] = std::move(resources);
  Json compatible = Json::array();
  for (const Edge& edge : instance.compatible()) compatible.push_back(edge_json(instance, edge));
  root["compatible"] = std::move(compatible);
  Json relaxable = Json::array();
  for (const RelaxableEdge& edge : instance.relaxable()) {
    Json entry;
    entry["agent"] = instance.agent_id(edge.edge.agent);
    entry["resource"] = instance.resource_id(edge.edge.resource);
    entry["discomfort"] = format_rational(edge.discomfort);
    relaxable.push_back(std::move(entry));
  }
  root["relaxable"] = std::move(relaxable);
  return root.dump(2) + "\n";
}

void save_instance(const Instance& instance, const std::string& path) {
  write_text_file(path, instance_to_json(instance));
}

std::string result_to_json(const Instance& instance, const SolverConfig& config,
                           const SolveResult& result,
                           const std::optional<VerificationReport>& verification) {
  Json root;
  root["relaxation"] = relaxation_json(instance, result.relaxation);
  root["allocation_size"] = result.allocation_size;
  root["aggregate_cost"] = format_rational(result.aggregate_cost);
  root["k_min"] = result.k_min;
  root["guarantee"] = to_string(config.guarantee);
  root["aggregation"] = to_string(config.aggregation);
  root["bound"] = format_bound(config.bound);
  if (!result.warnings.empty()) root["warnings"] = result.warnings;
  if (verification) root["guarantee_report"] = report_json(instance, *verification);
  return root.dump(2) + "\n";
}

void save_result(const Instance& instance, const SolverConfig& config, const SolveResult& result,
                 const std::optional<VerificationReport>& verification, const std::string& path) {
  write_text_file(path, result_to_json(instance, config, result, verification));
}

std::string oracle_result_to_json(const Instance& instance, const OracleResult& result) {
  Json root;
  root["best_mu"] = result.best_mu;
  root["best_cost"] = format_rational(result.best_cost);
  root["checked_count"] = result.checked_count;
  Json best = Json::array();
  for (const Relaxation& relaxation : result.best_relaxations) {
    Json entry = Json::array();
    for (const Edge& edge : relaxation) entry.push_back(edge_json(instance, edge));
    best.push_back(std::move(entry));
  }
  root["best_relaxations"] = std::move(best);
  return root.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << content;
}

}  // namespace relaxmatch
