#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "belcond/mass.hpp"

namespace belcond {

// Seeded generator wrapping std::mt19937_64.  All derived draws are built
// from raw engine output so a given seed produces the same stream on every
// platform (the engine's sequence is fixed by the standard; distribution
// classes are not, so none are used here).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // Standard exponential via inversion.
  double exponential();

  // Uniform integer in [0, bound); rejection sampling keeps it unbiased.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 eng_;
};

// A point drawn uniformly (flat Dirichlet) from the (k-1)-simplex.
std::vector<double> flat_simplex_point(Rng& rng, std::size_t k);

// `count` distinct values from [1, 2^n - 1] (all nonempty subsets), ascending.
std::vector<Subset> sample_distinct_subsets(Rng& rng, const Frame& frame,
                                            int count);

// A random mass function with exactly `k_focal` distinct nonempty focal
// elements, masses drawn from the flat simplex.  Throws BadCount unless
// 1 <= k_focal <= 2^n - 1.  Identical seeds give identical results.
MassFunction random_mass(const Frame& frame, int k_focal, std::uint64_t seed);

}  // namespace belcond
