#pragma once

#include <cstdint>
#include <vector>

namespace relaxmatch {

// SplitMix64. Chosen over std::mt19937_64 + std::uniform_int_distribution
// because the standard distributions are not bit-reproducible across
// standard library implementations, and generated instances must be.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform over [lo, hi] inclusive, by rejection sampling.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t span = hi - lo + 1;
    if (span == 0) return next();  // full 64-bit range
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t value;
    do {
      value = next();
    } while (value >= limit);
    return lo + value % span;
  }

  // True with probability permille/1000.
  bool chance_permille(std::uint32_t permille) { return uniform(0, 999) < permille; }

  // Fisher-Yates.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform(0, i - 1));
      std::swap(items[i - 1], items[j]);
    }
  }

  // k distinct values from [0, n), in selection order.
  std::vector<std::size_t> sample(std::size_t n, std::size_t k) {
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    std::vector<std::size_t> picked;
    picked.reserve(k);
    for (std::size_t i = 0; i < k && i < n; ++i) {
      std::size_t j = static_cast<std::size_t>(uniform(i, n - 1));
      std::swap(pool[i], pool[j]);
      picked.push_back(pool[i]);
    }
    return picked;
  }

 private:
  std::uint64_t state_;
};

// Independent stream for a (master seed, index) pair; used so replications
// and grid rows can run in any order or in parallel yet stay reproducible.
inline Rng derived_rng(std::uint64_t master_seed, std::uint64_t index) {
  Rng mix(master_seed ^ (0xA0761D6478BD642FULL * (index + 1)));
  std::uint64_t s = mix.next();
  return Rng(s);
}

}  // namespace relaxmatch
