#pragma once

#include <cstdint>
#include <random>

namespace oam {

// Seeded generator with a fixed bit-level mapping to doubles, so identical
// seeds give identical streams on every platform and standard library.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double canonical() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * canonical(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace oam
