#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "relaxmatch/instance.hpp"

namespace relaxmatch {

// Synthetic instance families shaped like the three experiment datasets.
// Sizes and probability constants are configuration defaults, not claims
// about any real data.
//
//   kCourseLike  154 agents x 144 resources. Agents need seats, access
//                features and a location; unmet access needs usually make a
//                pair incompatible, seat shortfall and distance give graded
//                discomfort.
//   kLabLike     31 x 14. Per-pair attribute ratings 1..5; discomfort is the
//                sum of (rating - 1). Zero-discomfort pairs are compatible,
//                high totals are incompatible, the rest are relaxable.
//   kChildLike   653 x 249. Resources have an age window and a per-pair
//                priority; out-of-window distance and (priority - 1) add up.
enum class ProfileKind { kCourseLike, kLabLike, kChildLike };

struct GeneratorProfile {
  ProfileKind kind = ProfileKind::kLabLike;
  std::uint64_t seed = 0;
  std::optional<std::size_t> agent_count;     // override the profile default
  std::optional<std::size_t> resource_count;  // override the profile default
};

std::optional<ProfileKind> profile_from_string(const std::string& text);
std::string to_string(ProfileKind kind);

// Deterministic: equal profiles (including seed) give equal instances on
// every platform. All quantities are 1; the result is always valid.
Instance generate(const GeneratorProfile& profile);

}  // namespace relaxmatch
