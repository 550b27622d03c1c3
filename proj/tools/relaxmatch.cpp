#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relaxmatch/datagen.hpp"
#include "relaxmatch/errors.hpp"
#include "relaxmatch/experiments.hpp"
#include "relaxmatch/instance_io.hpp"
#include "relaxmatch/oracle.hpp"
#include "relaxmatch/solver.hpp"

namespace {

using namespace relaxmatch;

Guarantee parse_guarantee(const std::string& text) {
  auto guarantee = guarantee_from_string(text);
  if (!guarantee) throw ParseError("unknown guarantee: " + text + " (snh-sb, snh-wb, wnh-wb)");
  return *guarantee;
}

Aggregation parse_aggregation(const std::string& text) {
  auto aggregation = aggregation_from_string(text);
  if (!aggregation) throw ParseError("unknown aggregation: " + text + " (size, total)");
  return *aggregation;
}

SearchMode parse_mode(const std::string& text) {
  if (text == "binary") return SearchMode::kBinarySearch;
  if (text == "linear") return SearchMode::kLinearScan;
  throw ParseError("unknown search mode: " + text + " (binary, linear)");
}

std::vector<Guarantee> parse_guarantee_list(const std::string& text) {
  std::vector<Guarantee> list;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string token = text.substr(start, comma == std::string::npos ? comma : comma - start);
    if (!token.empty()) list.push_back(parse_guarantee(token));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (list.empty()) throw ParseError("empty guarantee list");
  return list;
}

// "lo:hi:step" inclusive arithmetic grid, or a comma-separated value list.
std::vector<std::string> grid_tokens(const std::string& text) {
  std::vector<std::string> tokens;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string token = text.substr(start, comma == std::string::npos ? comma : comma - start);
    if (!token.empty()) tokens.push_back(token);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return tokens;
}

std::vector<Rational> expand_token(const std::string& token) {
  std::size_t first = token.find(':');
  if (first == std::string::npos) return {parse_rational(token)};
  std::size_t second = token.find(':', first + 1);
  if (second == std::string::npos) throw ParseError("grid must be lo:hi:step, got " + token);
  Rational lo = parse_rational(token.substr(0, first));
  Rational hi = parse_rational(token.substr(first + 1, second - first - 1));
  Rational step = parse_rational(token.substr(second + 1));
  if (step <= 0) throw ParseError("grid step must be positive: " + token);
  std::vector<Rational> values;
  for (Rational v = lo; v <= hi; v += step) values.push_back(v);
  if (values.empty()) throw ParseError("empty grid: " + token);
  return values;
}

std::vector<Bound> parse_bound_grid(const std::string& text) {
  std::vector<Bound> bounds;
  for (const std::string& token : grid_tokens(text)) {
    if (token == "inf" || token == "infinity") {
      bounds.push_back(std::nullopt);
      continue;
    }
    for (const Rational& value : expand_token(token)) bounds.push_back(value);
  }
  if (bounds.empty()) throw ParseError("empty bound grid");
  return bounds;
}

std::vector<Rational> parse_fraction_grid(const std::string& text) {
  std::vector<Rational> fractions;
  for (const std::string& token : grid_tokens(text))
    for (const Rational& value : expand_token(token)) fractions.push_back(value);
  if (fractions.empty()) throw ParseError("empty compliance grid");
  return fractions;
}

std::uint64_t resolve_seed(std::uint64_t flag_seed) {
  const char* env = std::getenv("RELAXMATCH_SEED");
  if (!env || !*env) return flag_seed;
  char* end = nullptr;
  unsigned long long value = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0')
    throw ParseError(std::string("RELAXMATCH_SEED is not an integer: ") + env);
  return value;
}

void emit(const std::string& content, const std::string& output_path) {
  if (output_path.empty())
    std::cout << content;
  else
    write_text_file(output_path, content);
}

InstanceSource make_source(const std::string& instance_path, const std::string& profile_name,
                           const std::optional<std::size_t>& agents,
                           const std::optional<std::size_t>& resources) {
  if (!instance_path.empty() && !profile_name.empty())
    throw ParseError("--instance and --profile are mutually exclusive");
  if (!instance_path.empty()) return InstanceSource::fixed(load_instance(instance_path));
  if (profile_name.empty()) throw ParseError("one of --instance or --profile is required");
  auto kind = profile_from_string(profile_name);
  if (!kind) throw ParseError("unknown profile: " + profile_name + " (course, lab, child)");
  GeneratorProfile profile;
  profile.kind = *kind;
  profile.agent_count = agents;
  profile.resource_count = resources;
  return InstanceSource::generated(profile);
}

struct CommonSolveFlags {
  std::string instance_path;
  std::string guarantee = "snh-sb";
  std::string aggregation = "total";
  std::string bound = "inf";
  std::string mode = "binary";
  std::string output;
};

int run_solve(const CommonSolveFlags& flags, bool verify) {
  Instance instance = load_instance(flags.instance_path);
  SolverConfig config{parse_guarantee(flags.guarantee), parse_aggregation(flags.aggregation),
                      parse_bound(flags.bound), parse_mode(flags.mode)};
  SolveResult result = solve_auto(instance, config);
  for (const std::string& warning : result.warnings)
    std::cerr << "warning: " << warning << "\n";
  std::optional<VerificationReport> verification;
  if (verify) verification = verify_result(instance, config, result);
  emit(result_to_json(instance, config, result, verification), flags.output);
  return 0;
}

int run_gamma(const std::string& instance_path, bool bruteforce) {
  Instance instance = load_instance(instance_path);
  std::vector<std::uint32_t> gamma;
  if (instance.is_one_to_one()) {
    gamma = bruteforce ? gamma_bruteforce(base_graph(instance))
                       : guaranteed_agents(base_graph(instance));
  } else {
    if (bruteforce) throw CapExceeded("gamma --bruteforce requires a one-to-one instance");
    Expansion expansion = instance.has_demands() ? expand_demands(instance)
                                                 : expand_capacities(instance);
    std::vector<std::uint32_t> copies = guaranteed_agents(base_graph(expansion.instance));
    std::vector<std::size_t> per_agent(instance.agent_count(), 0);
    for (std::uint32_t copy : copies)
      ++per_agent[expansion.agent_side ? expansion.agent_origin[copy] : copy];
    for (std::uint32_t a = 0; a < instance.agent_count(); ++a)
      if (per_agent[a] == (expansion.agent_side ? instance.demand(a) : 1)) gamma.push_back(a);
  }
  for (std::uint32_t agent : gamma) std::cout << instance.agent_id(agent) << "\n";
  return 0;
}

int run_oracle(const CommonSolveFlags& flags, std::size_t max_relaxable,
               std::size_t max_vertices) {
  Instance instance = load_instance(flags.instance_path);
  OracleCaps caps{max_relaxable, max_vertices};
  OracleResult result =
      brute_force_optimum(instance, parse_guarantee(flags.guarantee),
                          parse_aggregation(flags.aggregation), parse_bound(flags.bound), caps);
  emit(oracle_result_to_json(instance, result), flags.output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "relaxmatch: optimal relaxation advice for bipartite allocation with "
      "relaxable incompatibilities"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 success, 1 usage or runtime error, 2 validation error, 3 enumeration "
      "cap exceeded.\nRELAXMATCH_SEED overrides --seed for gen, sweep and simulate.");

  CommonSolveFlags solve_flags;
  bool solve_verify = false;
  CLI::App* cmd_solve = app.add_subcommand("solve", "compute relaxation advice");
  cmd_solve->add_option("--instance", solve_flags.instance_path, "instance JSON file")
      ->required();
  cmd_solve->add_option("--guarantee", solve_flags.guarantee, "snh-sb | snh-wb | wnh-wb");
  cmd_solve->add_option("--aggregation", solve_flags.aggregation, "size | total");
  cmd_solve->add_option("--bound", solve_flags.bound, "cost bound (rational or inf)");
  cmd_solve->add_option("--search,--mode", solve_flags.mode, "binary | linear k search");
  cmd_solve->add_flag("--verify", solve_verify, "attach a guarantee/oracle audit report");
  cmd_solve->add_option("--out,--output", solve_flags.output, "write result JSON here");

  std::string gamma_instance;
  bool gamma_brute = false;
  CLI::App* cmd_gamma = app.add_subcommand("gamma", "list agents matched in every maximum allocation");
  cmd_gamma->add_option("--instance", gamma_instance, "instance JSON file")->required();
  cmd_gamma->add_flag("--bruteforce", gamma_brute, "use the enumeration oracle");

  CommonSolveFlags oracle_flags;
  std::size_t oracle_max_relaxable = 12;
  std::size_t oracle_max_vertices = 16;
  CLI::App* cmd_oracle = app.add_subcommand("oracle", "exhaustive reference optimum");
  cmd_oracle->add_option("--instance", oracle_flags.instance_path, "instance JSON file")
      ->required();
  cmd_oracle->add_option("--guarantee", oracle_flags.guarantee, "snh-sb | snh-wb | wnh-wb");
  cmd_oracle->add_option("--aggregation", oracle_flags.aggregation, "size | total");
  cmd_oracle->add_option("--bound", oracle_flags.bound, "cost bound (rational or inf)");
  cmd_oracle->add_option("--max-relaxable", oracle_max_relaxable, "subset enumeration cap");
  cmd_oracle->add_option("--max-vertices", oracle_max_vertices, "matching enumeration cap");
  cmd_oracle->add_option("--out,--output", oracle_flags.output, "write oracle JSON here");

  std::string sweep_instance, sweep_profile, sweep_guarantees = "snh-sb,snh-wb,wnh-wb";
  std::string sweep_aggregation = "total", sweep_bounds, sweep_mode = "binary", sweep_output;
  std::size_t sweep_replications = 10, sweep_threads = 0;
  std::uint64_t sweep_seed = 0;
  bool sweep_timing = false;
  std::optional<std::size_t> sweep_agents, sweep_resources;
  CLI::App* cmd_sweep = app.add_subcommand("sweep", "bound sweep experiment, CSV output");
  cmd_sweep->add_option("--instance", sweep_instance, "fixed instance JSON file");
  cmd_sweep->add_option("--profile", sweep_profile, "generate per replication: course | lab | child");
  cmd_sweep->add_option("--agents", sweep_agents, "profile agent count override");
  cmd_sweep->add_option("--resources", sweep_resources, "profile resource count override");
  cmd_sweep->add_option("--guarantees", sweep_guarantees, "comma-separated guarantee list");
  cmd_sweep->add_option("--aggregation", sweep_aggregation, "size | total");
  cmd_sweep->add_option("--bounds", sweep_bounds, "bound grid: lo:hi:step and/or comma list, inf allowed")
      ->required();
  cmd_sweep->add_option("--reps,--replications", sweep_replications, "replications per grid point");
  cmd_sweep->add_option("--seed", sweep_seed, "master seed");
  cmd_sweep->add_option("--search,--mode", sweep_mode, "binary | linear k search");
  cmd_sweep->add_flag("--timing", sweep_timing, "record wall-clock runtime_ms (breaks byte-identical reruns)");
  cmd_sweep->add_option("--threads", sweep_threads, "worker threads (0 = all cores)");
  cmd_sweep->add_option("--out,--output", sweep_output, "write CSV here");

  std::string sim_instance, sim_profile, sim_guarantees = "snh-sb,snh-wb,wnh-wb";
  std::string sim_aggregation = "total", sim_bound = "inf", sim_compliance;
  std::string sim_mode = "binary", sim_output;
  std::size_t sim_replications = 10, sim_threads = 0;
  std::uint64_t sim_seed = 0;
  bool sim_timing = false;
  std::optional<std::size_t> sim_agents, sim_resources;
  CLI::App* cmd_sim = app.add_subcommand("simulate", "partial-compliance simulation, CSV output");
  cmd_sim->add_option("--instance", sim_instance, "fixed instance JSON file");
  cmd_sim->add_option("--profile", sim_profile, "generate per replication: course | lab | child");
  cmd_sim->add_option("--agents", sim_agents, "profile agent count override");
  cmd_sim->add_option("--resources", sim_resources, "profile resource count override");
  cmd_sim->add_option("--guarantees", sim_guarantees, "comma-separated guarantee list");
  cmd_sim->add_option("--aggregation", sim_aggregation, "size | total");
  cmd_sim->add_option("--bound", sim_bound, "bound for the advice solve (rational or inf)");
  cmd_sim->add_option("--compliance", sim_compliance,
                      "complying fractions of the advised agents: lo:hi:step in [0,1]")
      ->required();
  cmd_sim->add_option("--reps,--replications", sim_replications, "replications per grid point");
  cmd_sim->add_option("--seed", sim_seed, "master seed");
  cmd_sim->add_option("--search,--mode", sim_mode, "binary | linear k search");
  cmd_sim->add_flag("--timing", sim_timing, "record wall-clock runtime_ms (breaks byte-identical reruns)");
  cmd_sim->add_option("--threads", sim_threads, "worker threads (0 = all cores)");
  cmd_sim->add_option("--out,--output", sim_output, "write CSV here");

  std::string gen_profile, gen_output;
  std::uint64_t gen_seed = 0;
  std::optional<std::size_t> gen_agents, gen_resources;
  CLI::App* cmd_gen = app.add_subcommand("gen", "generate a synthetic instance");
  cmd_gen->add_option("--profile", gen_profile, "course | lab | child")->required();
  cmd_gen->add_option("--seed", gen_seed, "generator seed");
  cmd_gen->add_option("--agents", gen_agents, "agent count override");
  cmd_gen->add_option("--resources", gen_resources, "resource count override");
  cmd_gen->add_option("--out,--output", gen_output, "write instance JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (cmd_solve->parsed()) return run_solve(solve_flags, solve_verify);
    if (cmd_gamma->parsed()) return run_gamma(gamma_instance, gamma_brute);
    if (cmd_oracle->parsed())
      return run_oracle(oracle_flags, oracle_max_relaxable, oracle_max_vertices);
    if (cmd_sweep->parsed()) {
      InstanceSource source =
          make_source(sweep_instance, sweep_profile, sweep_agents, sweep_resources);
      SweepSpec spec;
      spec.guarantees = parse_guarantee_list(sweep_guarantees);
      spec.aggregation = parse_aggregation(sweep_aggregation);
      spec.bounds = parse_bound_grid(sweep_bounds);
      spec.replications = sweep_replications;
      spec.master_seed = resolve_seed(sweep_seed);
      spec.mode = parse_mode(sweep_mode);
      spec.timing = sweep_timing;
      spec.threads = sweep_threads;
      emit(rows_to_csv(sweep_bound(source, spec), false), sweep_output);
      return 0;
    }
    if (cmd_sim->parsed()) {
      InstanceSource source = make_source(sim_instance, sim_profile, sim_agents, sim_resources);
      SimulateSpec spec;
      spec.guarantees = parse_guarantee_list(sim_guarantees);
      spec.aggregation = parse_aggregation(sim_aggregation);
      spec.bound = parse_bound(sim_bound);
      spec.compliance_fractions = parse_fraction_grid(sim_compliance);
      spec.replications = sim_replications;
      spec.master_seed = resolve_seed(sim_seed);
      spec.mode = parse_mode(sim_mode);
      spec.timing = sim_timing;
      spec.threads = sim_threads;
      emit(rows_to_csv(simulate_compliance(source, spec), true), sim_output);
      return 0;
    }
    if (cmd_gen->parsed()) {
      auto kind = profile_from_string(gen_profile);
      if (!kind) throw ParseError("unknown profile: " + gen_profile + " (course, lab, child)");
      GeneratorProfile profile;
      profile.kind = *kind;
      profile.seed = resolve_seed(gen_seed);
      profile.agent_count = gen_agents;
      profile.resource_count = gen_resources;
      emit(instance_to_json(generate(profile)), gen_output);
      return 0;
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
