#pragma once

#include <cstdint>
#include <vector>

namespace tsrmb {

// Small self-contained PRNG (splitmix64). Used instead of <random> distributions
// so that generated instances and driver samples are bit-identical across
// standard library implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in {0, ..., bound-1}; bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    // Rejection sampling keeps the draw unbiased.
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // k distinct values from {0, ..., n-1}, in draw order.
  std::vector<int> sample_without_replacement(int n, int k) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    std::vector<int> out;
    out.reserve(k);
    for (int i = 0; i < k; ++i) {
      int j = i + static_cast<int>(below(static_cast<std::uint64_t>(n - i)));
      std::swap(pool[i], pool[j]);
      out.push_back(pool[i]);
    }
    return out;
  }

  // Deterministic derivation of sub-seeds (window/repeat streams).
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
    Rng r(seed ^ (0x632be59bd9b4e019ULL * (stream + 1)));
    return r.next();
  }

private:
  std::uint64_t state_;
};

}  // namespace tsrmb
