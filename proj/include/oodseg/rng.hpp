#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace oodseg {

// Deterministic RNG used by every stochastic component. Distributions are
// hand-rolled on top of mt19937_64 so draws are stable across standard
// library implementations (std::uniform_real_distribution is not).
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t raw() { return gen_(); }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    // Multiply-shift range reduction; bias is negligible for small spans.
    uint64_t x = gen_();
    return lo + static_cast<int>((static_cast<unsigned __int128>(x) * span) >> 64);
  }

  bool bernoulli(double p) { return uniform() < p; }

  double normal(double mean = 0.0, double stddev = 1.0);

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(uniform_int(0, static_cast<int>(i) - 1));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Derives a child seed from a root seed and a purpose tag, so that all
// randomness in a run flows from one recorded root seed.
uint64_t derive_seed(uint64_t root, std::string_view tag);

}  // namespace oodseg
