#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "relaxmatch/datagen.hpp"
#include "relaxmatch/solver.hpp"

namespace relaxmatch {

// Where experiment instances come from. A fixed instance is reused across
// replications; a profile is generated fresh per replication with a seed
// derived from (master seed, replication).
class InstanceSource {
 public:
  static InstanceSource fixed(Instance instance);
  static InstanceSource generated(GeneratorProfile profile);
  Instance instance_for(std::uint64_t master_seed, std::uint64_t replication) const;

 private:
  std::optional<Instance> fixed_;
  std::optional<GeneratorProfile> profile_;
};

struct SweepSpec {
  std::vector<Guarantee> guarantees = {Guarantee::kSnhSb, Guarantee::kSnhWb,
                                       Guarantee::kWnhWb};
  Aggregation aggregation = Aggregation::kTotalCost;
  std::vector<Bound> bounds;
  std::size_t replications = 10;
  std::uint64_t master_seed = 0;
  SearchMode mode = SearchMode::kBinarySearch;
  // Off by default: wall-clock cells would break byte-identical reruns.
  bool timing = false;
  std::size_t threads = 0;  // 0 = hardware concurrency
};

struct SimulateSpec {
  std::vector<Guarantee> guarantees = {Guarantee::kSnhSb, Guarantee::kSnhWb,
                                       Guarantee::kWnhWb};
  Aggregation aggregation = Aggregation::kTotalCost;
  Bound bound;  // bound for the advice solve; unbounded by default
  std::vector<Rational> compliance_fractions;  // of |X(Ê)|, each in [0, 1]
  std::size_t replications = 10;
  std::uint64_t master_seed = 0;
  SearchMode mode = SearchMode::kBinarySearch;
  bool timing = false;
  std::size_t threads = 0;
};

// One CSV row. Raw rows carry a replication index; aggregate rows (one per
// grid point) leave it empty and carry means plus a 0.95 confidence interval
// half-width for matched_fraction. simulate rows additionally carry the harm
// audit flag: true when Γ(E) ⊄ Γ(E ∪ applied advice).
struct SweepRow {
  Guarantee guarantee = Guarantee::kSnhSb;
  Aggregation aggregation = Aggregation::kTotalCost;
  Bound bound;
  std::optional<std::uint64_t> replication;
  Rational complying_count;
  Rational matched_count;
  Rational matched_fraction;
  Rational relax_cost;
  Rational k_min;
  std::optional<std::uint64_t> runtime_ms;
  std::optional<double> ci_half_width;
  std::optional<bool> harm;
};

// Solves every (guarantee, bound, replication) cell at full compliance.
// Cells run in parallel; output order and content are deterministic for a
// given configuration (timing cells excepted, and therefore off by default).
std::vector<SweepRow> sweep_bound(const InstanceSource& source, const SweepSpec& spec);

// Computes the advice once per (guarantee, replication) at the requested bound,
// then samples complying agent subsets of each size in the grid and records
// the resulting matched count plus the no-harm audit.
std::vector<SweepRow> simulate_compliance(const InstanceSource& source,
                                          const SimulateSpec& spec);

void write_rows_csv(std::ostream& out, const std::vector<SweepRow>& rows, bool include_harm);
std::string rows_to_csv(const std::vector<SweepRow>& rows, bool include_harm);

}  // namespace relaxmatch
