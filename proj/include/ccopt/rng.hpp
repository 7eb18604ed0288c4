#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace ccopt {

// Deterministic RNG: a fixed engine plus hand-rolled transforms, so that two
// runs with the same seed produce identical streams regardless of the
// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // [0, 1)
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // [0, n)
  int uniform_int(int n) {
    const std::uint64_t bound = ~std::uint64_t{0} - ~std::uint64_t{0} % static_cast<std::uint64_t>(n);
    std::uint64_t r;
    do {
      r = gen_();
    } while (r >= bound);
    return static_cast<int>(r % static_cast<std::uint64_t>(n));
  }

  double normal(double mean, double sd) {
    double u1;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    return mean + sd * z;
  }

  double cauchy(double loc, double scale) {
    double u;
    do {
      u = uniform();
    } while (u <= 0.0 || u >= 1.0);
    return loc + scale * std::tan(std::numbers::pi * (u - 0.5));
  }

  // Derives an independent stream; the mixing keeps sibling streams decorrelated.
  std::uint64_t derive(std::uint64_t stream) {
    std::uint64_t z = gen_() + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace ccopt
