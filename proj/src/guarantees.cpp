#include "relaxmatch/guarantees.hpp"

#include <algorithm>

#include "relaxmatch/errors.hpp"
#include "relaxmatch/matching.hpp"

namespace relaxmatch {

namespace {

bool contains_all(const std::vector<std::uint32_t>& haystack,
                  const std::vector<std::uint32_t>& needles) {
  return std::includes(haystack.begin(), haystack.end(), needles.begin(), needles.end());
}

}  // namespace

GuaranteeReport check_guarantee(const Instance& instance, const Relaxation& relaxation,
                                Guarantee guarantee, std::size_t subset_cap) {
  GuaranteeReport report;
  report.guarantee = guarantee;

  std::vector<std::uint32_t> gamma_base = guaranteed_agents(base_graph(instance));

  auto inspect = [&](const Relaxation& subset, bool check_no_harm, bool check_benefit) {
    std::vector<std::uint32_t> gamma = guaranteed_agents(graph_with(instance, subset));
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

  if (relaxation.size() > subset_cap)
    throw CapExceeded("check_guarantee: advice set has " + std::to_string(relaxation.size()) +
                      " edges, subset cap is " + std::to_string(subset_cap));

  bool benefit_all_subsets = guarantee == Guarantee::kSnhSb;
  std::uint64_t subset_count = std::uint64_t{1} << relaxation.size();
  for (std::uint64_t mask = 0; mask < subset_count; ++mask) {
    Relaxation subset;
    for (std::size_t i = 0; i < relaxation.size(); ++i)
      if (mask >> i & 1) subset.push_back(relaxation[i]);
    bool is_full = mask + 1 == subset_count;
    inspect(subset, true, benefit_all_subsets || is_full);
  }
  return report;
}

}  // namespace relaxmatch
