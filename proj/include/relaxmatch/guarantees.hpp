#pragma once

#include <cstddef>
#include <vector>

#include "relaxmatch/instance.hpp"

namespace relaxmatch {

// One subset of the advice that fails its required predicate(s).
struct GuaranteeViolation {
  Relaxation subset;
  bool no_harm_ok = true;
  bool benefit_ok = true;
};

struct GuaranteeReport {
  Guarantee guarantee = Guarantee::kSnhSb;
  bool passed = true;
  std::size_t subsets_checked = 0;
  std::size_t violation_count = 0;
  std::vector<GuaranteeViolation> violations;  // up to kMaxRecordedViolations
};

inline constexpr std::size_t kMaxRecordedViolations = 32;
inline constexpr std::size_t kDefaultSubsetCap = 12;

// Evaluates the definitional predicates for `guarantee` on advice set
// `relaxation` (which must be a canonical subset of the relaxable edges):
//
//   no-harm  Γ(E) ⊆ Γ(E ∪ F)          benefit  X(F) ⊆ Γ(E ∪ F)
//
// Strong forms quantify over every subset F of the advice; weak forms only
// over the full advice set. snh-sb checks both predicates on all subsets,
// snh-wb checks no-harm on all subsets and benefit on the full set, wnh-wb
// checks both on the full set only. Subset enumeration requires
// |relaxation| <= subset_cap and throws CapExceeded beyond it; wnh-wb never
// enumerates and so never hits the cap.
GuaranteeReport check_guarantee(const Instance& instance, const Relaxation& relaxation,
                                Guarantee guarantee, std::size_t subset_cap = kDefaultSubsetCap);

}  // namespace relaxmatch
