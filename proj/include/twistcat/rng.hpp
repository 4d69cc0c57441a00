#ifndef TWISTCAT_RNG_HPP
#define TWISTCAT_RNG_HPP

#include <cstdint>

#include "twistcat/rational.hpp"

namespace twistcat {

/// splitmix64; all sampling in the project is seeded through this so that
/// identical (dim, aux, seed) inputs give byte-identical outputs everywhere.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi].
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Small integer in [-bound, bound].
  long small_int(long bound) { return range(-bound, bound); }

  /// Gaussian rational with small integer real and imaginary parts.
  GaussianRational small_gaussian(long bound) {
    return GaussianRational(Rational(small_int(bound)), Rational(small_int(bound)));
  }

  /// Nonzero variant.
  GaussianRational small_gaussian_nonzero(long bound) {
    for (;;) {
      GaussianRational g = small_gaussian(bound);
      if (!g.is_zero()) return g;
    }
  }

  /// Derives an independent stream (for per-sample determinism).
  Rng fork(std::uint64_t salt) {
    return Rng(next() ^ (salt * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull));
  }

private:
  std::uint64_t state_;
};

}  // namespace twistcat

#endif
