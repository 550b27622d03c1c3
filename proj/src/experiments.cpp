#include "relaxmatch/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <thread>

#include "relaxmatch/errors.hpp"
#include "relaxmatch/rng.hpp"

namespace relaxmatch {

namespace {

constexpr std::uint64_t kGenStreamTag = 0x67656E2D73747265ULL;
constexpr std::uint64_t kComplianceStreamTag = 0x636F6D706C792D73ULL;

void parallel_for(std::size_t task_count, std::size_t threads,
                  const std::function<void(std::size_t)>& body) {
  if (task_count == 0) return;
  if (threads == 0) threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  threads = std::min(threads, task_count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < task_count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&]() {
      for (std::size_t i = next.fetch_add(1); i < task_count; i = next.fetch_add(1)) body(i);
    });
  }
  for (std::thread& worker : pool) worker.join();
}

std::uint64_t elapsed_ms(const std::chrono::steady_clock::time_point& start) {
  return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                        std::chrono::steady_clock::now() - start)
                                        .count());
}

double to_double(const Rational& value) {
  return static_cast<double>(boost::multiprecision::numerator(value)) /
         static_cast<double>(boost::multiprecision::denominator(value));
}

// Mean row over a group of raw rows, plus the 0.95 CI half-width of
// matched_fraction (normal approximation, 0 when fewer than two rows).
SweepRow aggregate_of(const std::vector<SweepRow>& raws) {
  SweepRow row;
  row.guarantee = raws.front().guarantee;
  row.aggregation = raws.front().aggregation;
  row.bound = raws.front().bound;
  Rational n(static_cast<long long>(raws.size()));
  std::uint64_t runtime_total = 0;
  bool have_runtime = true;
  bool any_harm = false;
  bool have_harm = false;
  for (const SweepRow& raw : raws) {
    row.complying_count += raw.complying_count;
    row.matched_count += raw.matched_count;
    row.matched_fraction += raw.matched_fraction;
    row.relax_cost += raw.relax_cost;
    row.k_min += raw.k_min;
    if (raw.runtime_ms)
      runtime_total += *raw.runtime_ms;
    else
      have_runtime = false;
    if (raw.harm) {
      have_harm = true;
      any_harm = any_harm || *raw.harm;
    }
  }
  row.complying_count /= n;
  row.matched_count /= n;
  row.matched_fraction /= n;
  row.relax_cost /= n;
  row.k_min /= n;
  if (have_runtime) row.runtime_ms = runtime_total / raws.size();
  if (have_harm) row.harm = any_harm;

  double mean = to_double(row.matched_fraction);
  double variance = 0;
  for (const SweepRow& raw : raws) {
    double d = to_double(raw.matched_fraction) - mean;
    variance += d * d;
  }
  if (raws.size() > 1) {
    variance /= static_cast<double>(raws.size() - 1);
    row.ci_half_width = 1.96 * std::sqrt(variance / static_cast<double>(raws.size()));
  } else {
    row.ci_half_width = 0.0;
  }
  return row;
}

// Γ and μ evaluation for partial-compliance graphs, on the expansion when
// the instance is not one-to-one. An original agent counts as guaranteed
// when all of its copies are.
struct ComplianceAudit {
  const Instance* instance;
  std::optional<Expansion> expansion;
  std::vector<std::uint32_t> gamma_base;

  explicit ComplianceAudit(const Instance& original) : instance(&original) {
    if (!original.is_one_to_one())
      expansion = original.has_demands() ? expand_demands(original)
                                         : expand_capacities(original);
    gamma_base = gamma_of({});
  }

  BipartiteGraph graph_of(const Relaxation& applied) const {
    if (!expansion) return graph_with(*instance, applied);
    return graph_with(expansion->instance, expand_relaxation(*instance, *expansion, applied));
  }

  std::size_t mu_of(const Relaxation& applied) const {
    return max_matching_size(graph_of(applied));
  }

  std::vector<std::uint32_t> gamma_of(const Relaxation& applied) const {
    std::vector<std::uint32_t> gamma = guaranteed_agents(graph_of(applied));
    if (!expansion) return gamma;
    std::vector<std::size_t> copies(instance->agent_count(), 0);
    for (std::uint32_t copy : gamma)
      ++copies[expansion->agent_side ? expansion->agent_origin[copy] : copy];
    std::vector<std::uint32_t> original;
    for (std::uint32_t a = 0; a < instance->agent_count(); ++a)
      if (copies[a] == (expansion->agent_side ? instance->demand(a) : 1)) original.push_back(a);
    return original;
  }

  bool harms(const Relaxation& applied) const {
    std::vector<std::uint32_t> gamma = gamma_of(applied);
    return !std::includes(gamma.begin(), gamma.end(), gamma_base.begin(), gamma_base.end());
  }
};

}  // namespace

InstanceSource InstanceSource::fixed(Instance instance) {
  InstanceSource source;
  source.fixed_ = std::move(instance);
  return source;
}

InstanceSource InstanceSource::generated(GeneratorProfile profile) {
  InstanceSource source;
  source.profile_ = profile;
  return source;
}

Instance InstanceSource::instance_for(std::uint64_t master_seed,
                                      std::uint64_t replication) const {
  if (fixed_) return *fixed_;
  GeneratorProfile profile = *profile_;
  profile.seed = derived_rng(master_seed ^ profile.seed ^ kGenStreamTag, replication).next();
  return generate(profile);
}

std::vector<SweepRow> sweep_bound(const InstanceSource& source, const SweepSpec& spec) {
  if (spec.bounds.empty() || spec.replications == 0 || spec.guarantees.empty())
    throw ParseError("sweep requires at least one guarantee, bound and replication");

  std::size_t reps = spec.replications;
  std::size_t cells = spec.guarantees.size() * spec.bounds.size() * reps;
  std::vector<SweepRow> raw(cells);

  parallel_for(cells, spec.threads, [&](std::size_t cell) {
    std::size_t r = cell % reps;
    std::size_t b = cell / reps % spec.bounds.size();
    std::size_t g = cell / reps / spec.bounds.size();

    Instance instance = source.instance_for(spec.master_seed, r);
    SolverConfig config{spec.guarantees[g], spec.aggregation, spec.bounds[b], spec.mode};
    auto start = std::chrono::steady_clock::now();
    SolveResult result = solve_auto(instance, config);
    std::uint64_t ms = elapsed_ms(start);

    SweepRow row;
    row.guarantee = config.guarantee;
    row.aggregation = config.aggregation;
    row.bound = config.bound;
    row.replication = r;
    row.complying_count = Rational(static_cast<long long>(agents_of(result.relaxation).size()));
    row.matched_count = Rational(static_cast<long long>(result.allocation_size));
    row.matched_fraction =
        Rational(static_cast<long long>(result.allocation_size),
                 static_cast<long long>(std::max<std::uint64_t>(1, instance.total_demand())));
    row.relax_cost = result.aggregate_cost;
    row.k_min = Rational(static_cast<long long>(result.k_min));
    if (spec.timing) row.runtime_ms = ms;
    raw[cell] = std::move(row);
  });

  std::vector<SweepRow> rows;
  rows.reserve(cells + spec.guarantees.size() * spec.bounds.size());
  for (std::size_t g = 0; g < spec.guarantees.size(); ++g) {
    for (std::size_t b = 0; b < spec.bounds.size(); ++b) {
      std::size_t base = (g * spec.bounds.size() + b) * reps;
      std::vector<SweepRow> group(raw.begin() + base, raw.begin() + base + reps);
      rows.insert(rows.end(), group.begin(), group.end());
      rows.push_back(aggregate_of(group));
    }
  }
  return rows;
}

std::vector<SweepRow> simulate_compliance(const InstanceSource& source,
                                          const SimulateSpec& spec) {
  if (spec.compliance_fractions.empty() || spec.replications == 0 || spec.guarantees.empty())
    throw ParseError("simulate requires at least one guarantee, fraction and replication");
  for (const Rational& fraction : spec.compliance_fractions)
    if (fraction < 0 || fraction > 1)
      throw ParseError("compliance fractions must lie in [0, 1]");

  std::size_t reps = spec.replications;
  std::size_t fractions = spec.compliance_fractions.size();
  std::size_t solves = spec.guarantees.size() * reps;
  // raw[(g, f, r)] in guarantee-major, fraction, replication order
  std::vector<SweepRow> raw(spec.guarantees.size() * fractions * reps);

  parallel_for(solves, spec.threads, [&](std::size_t task) {
    std::size_t r = task % reps;
    std::size_t g = task / reps;

    Instance instance = source.instance_for(spec.master_seed, r);
    SolverConfig config{spec.guarantees[g], spec.aggregation, spec.bound, spec.mode};
    auto start = std::chrono::steady_clock::now();
    SolveResult result = solve_auto(instance, config);
    std::uint64_t ms = elapsed_ms(start);

    ComplianceAudit audit(instance);
    std::vector<std::uint32_t> advised = agents_of(result.relaxation);
    Rational denominator(static_cast<long long>(std::max<std::uint64_t>(1, instance.total_demand())));

    for (std::size_t f = 0; f < fractions; ++f) {
      std::size_t row_index = (g * fractions + f) * reps + r;
      // round(fraction * |advised|) to the nearest count, half away from zero
      Rational scaled = spec.compliance_fractions[f] * Rational(static_cast<long long>(advised.size()));
      BigInt count_big = (boost::multiprecision::numerator(scaled) * 2 +
                          boost::multiprecision::denominator(scaled)) /
                         (boost::multiprecision::denominator(scaled) * 2);
      std::size_t count = count_big.convert_to<std::size_t>();
      count = std::min(count, advised.size());

      Rng rng = derived_rng(spec.master_seed ^ kComplianceStreamTag, row_index);
      std::vector<std::size_t> picked = rng.sample(advised.size(), count);
      std::vector<char> complying(instance.agent_count(), 0);
      for (std::size_t position : picked) complying[advised[position]] = 1;

      Relaxation applied;
      for (const Edge& edge : result.relaxation)
        if (complying[edge.agent]) applied.push_back(edge);

      SweepRow row;
      row.guarantee = config.guarantee;
      row.aggregation = config.aggregation;
      row.bound = config.bound;
      row.replication = r;
      row.complying_count = Rational(static_cast<long long>(count));
      row.matched_count = Rational(static_cast<long long>(audit.mu_of(applied)));
      row.matched_fraction = row.matched_count / denominator;
      row.relax_cost = aggregate_cost(instance, applied, spec.aggregation);
      row.k_min = Rational(static_cast<long long>(result.k_min));
      if (spec.timing) row.runtime_ms = ms;
      row.harm = audit.harms(applied);
      raw[row_index] = std::move(row);
    }
  });

  std::vector<SweepRow> rows;
  rows.reserve(raw.size() + spec.guarantees.size() * fractions);
  for (std::size_t g = 0; g < spec.guarantees.size(); ++g) {
    for (std::size_t f = 0; f < fractions; ++f) {
      std::size_t base = (g * fractions + f) * reps;
      std::vector<SweepRow> group(raw.begin() + base, raw.begin() + base + reps);
      rows.insert(rows.end(), group.begin(), group.end());
      rows.push_back(aggregate_of(group));
    }
  }
  return rows;
}

namespace {

std::string csv_cell_fixed(const Rational& value) { return format_fixed(value, 6); }

std::string csv_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6f", value);
  return buffer;
}

}  // namespace

void write_rows_csv(std::ostream& out, const std::vector<SweepRow>& rows, bool include_harm) {
  out << "guarantee,aggregation,bound,replication,complying_count,matched_count,"
         "matched_fraction,relax_cost,k_min,runtime_ms,ci_half_width";
  if (include_harm) out << ",harm_audit";
  out << "\n";
  for (const SweepRow& row : rows) {
    bool aggregate = !row.replication.has_value();
    out << to_string(row.guarantee) << ',' << to_string(row.aggregation) << ','
        << format_bound(row.bound) << ',';
    if (row.replication) out << *row.replication;
    out << ',';
    out << (aggregate ? csv_cell_fixed(row.complying_count) : format_rational(row.complying_count))
        << ','
        << (aggregate ? csv_cell_fixed(row.matched_count) : format_rational(row.matched_count))
        << ',' << csv_cell_fixed(row.matched_fraction) << ','
        << (aggregate ? csv_cell_fixed(row.relax_cost) : format_rational(row.relax_cost)) << ','
        << (aggregate ? csv_cell_fixed(row.k_min) : format_rational(row.k_min)) << ',';
    if (row.runtime_ms) out << *row.runtime_ms;
    out << ',';
    if (row.ci_half_width) out << csv_double(*row.ci_half_width);
    if (include_harm) {
      out << ',';
      if (row.harm) out << (*row.harm ? 1 : 0);
    }
    out << "\n";
  }
}

std::string rows_to_csv(const std::vector<SweepRow>& rows, bool include_harm) {
  std::ostringstream out;
  write_rows_csv(out, rows, include_harm);
  return out.str();
}

}  // namespace relaxmatch
