// Copyright 2026 the bnc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace bnc {

/// splitmix64 generator. Used for everything randomized in the library so
/// that identical seeds give identical results on every platform and
/// compiler, which the file-format and experiment determinism tests rely on.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), state_(seed) {}

  uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, n). n must be positive.
  uint64_t below(uint64_t n) {
    // rejection sampling keeps the draw unbiased
    uint64_t mask = ~0ULL;
    if (n == 0) return 0;
    uint64_t limit = mask - mask % n;
    uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  int below_int(int n) { return static_cast<int>(below(static_cast<uint64_t>(n))); }

  /// Uniform double in [0, 1).
  double real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return real() < p; }

  /// Independent stream derived from the original seed and a stream index.
  /// Forked streams are stable: they do not depend on how much of this
  /// generator has already been consumed.
  Rng fork(uint64_t stream) const {
    Rng mixer(seed_ ^ (0xD1B54A32D192ED03ULL * (stream + 1)));
    return Rng(mixer.next());
  }

  uint64_t seed() const { return seed_; }

 private:
  uint64_t seed_;
  uint64_t state_;
};

}  // namespace bnc
