#include "relaxmatch/datagen.hpp"

#include <cstdlib>

#include "relaxmatch/rng.hpp"

namespace relaxmatch {

std::optional<ProfileKind> profile_from_string(const std::string& text) {
  if (text == "course") return ProfileKind::kCourseLike;
  if (text == "lab") return ProfileKind::kLabLike;
  if (text == "child") return ProfileKind::kChildLike;
  return std::nullopt;
}

std::string to_string(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::kCourseLike: return "course";
    case ProfileKind::kLabLike: return "lab";
    case ProfileKind::kChildLike: return "child";
  }
  return "";
}

namespace {

std::string padded_id(const char* prefix, std::size_t index, std::size_t count) {
  std::string digits = std::to_string(index + 1);
  std::size_t width = std::to_string(count).size();
  return prefix + std::string(width - digits.size(), '0') + digits;
}

// Rating in 1..5, skewed towards low values.
std::uint32_t skewed_rating(Rng& rng, const std::uint32_t (&permille)[5]) {
  std::uint32_t roll = static_cast<std::uint32_t>(rng.uniform(0, 999));
  std::uint32_t cumulative = 0;
  for (std::uint32_t r = 0; r < 5; ++r) {
    cumulative += permille[r];
    if (roll < cumulative) return r + 1;
  }
  return 5;
}

void classify(InstanceData& data, const std::string& agent, const std::string& resource,
              long discomfort, long absent_threshold) {
  if (discomfort > absent_threshold) return;
  if (discomfort == 0) {
    data.compatible.emplace_back(agent, resource);
  } else {
    data.relaxable.push_back(
        InstanceData::RawRelaxable{agent, resource, Rational(discomfort)});
  }
}

Instance generate_course(std::size_t agents, std::size_t resources, std::uint64_t seed) {
  // Agents: seat need, grid location, access needs. Resources: seats, grid
  // location, access features. An unmet access need is incompatible 70% of
  // the time and a heavy discomfort otherwise; shortfall and distance grade.
  constexpr long kAccessPenalty = 6;
  constexpr long kAbsentThreshold = 6;
  Rng rng(seed);
  InstanceData data;

  struct Course {
    long seats;
    long x, y;
    bool physical, hearing;
  };
  struct Room {
    long seats;
    long x, y;
    bool physical, hearing;
  };
  std::vector<Course> courses(agents);
  std::vector<Room> rooms(resources);
  for (std::size_t i = 0; i < agents; ++i) {
    data.agents.push_back(AgentSpec{padded_id("a", i, agents), 1});
    courses[i] = Course{static_cast<long>(rng.uniform(10, 120)),
                        static_cast<long>(rng.uniform(0, 9)),
                        static_cast<long>(rng.uniform(0, 9)), rng.chance_permille(150),
                        rng.chance_permille(100)};
  }
  for (std::size_t j = 0; j < resources; ++j) {
    data.resources.push_back(ResourceSpec{padded_id("r", j, resources), 1});
    rooms[j] = Room{static_cast<long>(rng.uniform(10, 150)),
                    static_cast<long>(rng.uniform(0, 9)),
                    static_cast<long>(rng.uniform(0, 9)), rng.chance_permille(700),
                    rng.chance_permille(600)};
  }

  for (std::size_t i = 0; i < agents; ++i) {
    for (std::size_t j = 0; j < resources; ++j) {
      long discomfort = 0;
      bool unmet_access = (courses[i].physical && !rooms[j].physical) ||
                          (courses[i].hearing && !rooms[j].hearing);
      if (unmet_access) {
        if (rng.chance_permille(700)) continue;
        discomfort += kAccessPenalty;
      }
      long shortfall = courses[i].seats - rooms[j].seats;
      if (shortfall > 0) discomfort += 1 + std::min(4L, shortfall * 5 / courses[i].seats);
      long distance =
          std::labs(courses[i].x - rooms[j].x) + std::labs(courses[i].y - rooms[j].y);
      discomfort += distance / 4;
      classify(data, data.agents[i].id, data.resources[j].id, discomfort, kAbsentThreshold);
    }
  }
  return validate_instance(data);
}

Instance generate_lab(std::size_t agents, std::size_t resources, std::uint64_t seed) {
  // Three attribute ratings 1..5 per pair, bimodal: a room mostly either suits
  // a student or badly misses on an attribute. Discomfort is the sum of
  // (rating - 1), zero means compatible, more than 4 means incompatible.
  constexpr std::uint32_t kRatingPermille[5] = {300, 120, 80, 100, 400};
  constexpr long kAbsentThreshold = 4;
  constexpr int kAttributes = 3;
  Rng rng(seed);
  InstanceData data;
  for (std::size_t i = 0; i < agents; ++i)
    data.agents.push_back(AgentSpec{padded_id("a", i, agents), 1});
  for (std::size_t j = 0; j < resources; ++j)
    data.resources.push_back(ResourceSpec{padded_id("r", j, resources), 1});

  for (std::size_t i = 0; i < agents; ++i) {
    for (std::size_t j = 0; j < resources; ++j) {
      long discomfort = 0;
      for (int attribute = 0; attribute < kAttributes; ++attribute)
        discomfort += skewed_rating(rng, kRatingPermille) - 1;
      classify(data, data.agents[i].id, data.resources[j].id, discomfort, kAbsentThreshold);
    }
  }
  return validate_instance(data);
}

Instance generate_child(std::size_t agents, std::size_t resources, std::uint64_t seed) {
  // Agents have an age, resources an age window and a per-pair priority;
  // distance outside the window and (priority - 1) both add discomfort.
  constexpr std::uint32_t kPriorityPermille[5] = {400, 250, 180, 110, 60};
  constexpr long kAbsentThreshold = 7;
  Rng rng(seed);
  InstanceData data;

  std::vector<long> age(agents);
  std::vector<std::pair<long, long>> window(resources);
  for (std::size_t i = 0; i < agents; ++i) {
    data.agents.push_back(AgentSpec{padded_id("a", i, agents), 1});
    age[i] = static_cast<long>(rng.uniform(6, 17));
  }
  for (std::size_t j = 0; j < resources; ++j) {
    data.resources.push_back(ResourceSpec{padded_id("r", j, resources), 1});
    long lo = static_cast<long>(rng.uniform(6, 14));
    window[j] = {lo, lo + static_cast<long>(rng.uniform(1, 4))};
  }

  for (std::size_t i = 0; i < agents; ++i) {
    for (std::size_t j = 0; j < resources; ++j) {
      long distance = 0;
      if (age[i] < window[j].first) distance = window[j].first - age[i];
      if (age[i] > window[j].second) distance = age[i] - window[j].second;
      long discomfort = distance + skewed_rating(rng, kPriorityPermille) - 1;
      classify(data, data.agents[i].id, data.resources[j].id, discomfort, kAbsentThreshold);
    }
  }
  return validate_instance(data);
}

}  // namespace

Instance generate(const GeneratorProfile& profile) {
  std::size_t agents;
  std::size_t resources;
  switch (profile.kind) {
    case ProfileKind::kCourseLike:
      agents = profile.agent_count.value_or(154);
      resources = profile.resource_count.value_or(144);
      return generate_course(agents, resources, profile.seed);
    case ProfileKind::kLabLike:
      agents = profile.agent_count.value_or(31);
      resources = profile.resource_count.value_or(14);
      return generate_lab(agents, resources, profile.seed);
    case ProfileKind::kChildLike:
      agents = profile.agent_count.value_or(653);
      resources = profile.resource_count.value_or(249);
      return generate_child(agents, resources, profile.seed);
  }
  return Instance{};
}

}  // namespace relaxmatch
