#pragma once

#include <optional>
#include <string>

#include "relaxmatch/instance.hpp"
#include "relaxmatch/oracle.hpp"
#include "relaxmatch/solver.hpp"

namespace relaxmatch {

// Instance files are JSON:
//
//   {
//     "agents":    [{"id": "x1", "demand": 1}, ...],
//     "resources": [{"id": "y1", "capacity": 1}, ...],
//     "compatible": [["x1", "y1"], ...],
//     "relaxable": [{"agent": "x1", "resource": "y2", "discomfort": "2.5"}, ...]
//   }
//
// demand and capacity default to 1 when omitted; discomfort is a decimal
// string (or integer) parsed exactly. Serialisation is canonical: fixed key
// order, two-space indent, entities and edges in canonical order, trailing
// newline. load_instance(save_instance(i)) == i.
InstanceData parse_instance_data(const std::string& json_text);
Instance load_instance(const std::string& path);
std::string instance_to_json(const Instance& instance);
void save_instance(const Instance& instance, const std::string& path);

// Result files carry the advice set plus the headline numbers and, when a
// verification was run, a guarantee_report block.
std::string result_to_json(const Instance& instance, const SolverConfig& config,
                           const SolveResult& result,
                           const std::optional<VerificationReport>& verification = std::nullopt);
void save_result(const Instance& instance, const SolverConfig& config, const SolveResult& result,
                 const std::optional<VerificationReport>& verification, const std::string& path);

std::string oracle_result_to_json(const Instance& instance, const OracleResult& result);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace relaxmatch
