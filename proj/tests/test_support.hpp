#pragma once

// Shared fixtures and naive reference oracles for the test suites.  The
// oracles recompute everything by direct enumeration over all subsets, never
// through the transforms under test, so agreement is meaningful.

#include <cmath>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "belcond/mass.hpp"
#include "belcond/random.hpp"

namespace belcond::testing {

inline Frame ternary_frame() { return Frame({"x", "y", "z"}); }

inline MassFunction make_mass(
    const Frame& frame,
    std::initializer_list<std::pair<const char*, double>> entries) {
  std::vector<double> dense(frame.subset_count(), 0.0);
  for (const auto& [key, value] : entries) {
    dense[frame.subset_from_key(key)] += value;
  }
  return MassFunction(frame, std::move(dense));
}

// The running ternary example: masses 0.2 on x, 0.3 on y, 0.5 on {x,z}.
inline MassFunction ternary_example() {
  return make_mass(ternary_frame(), {{"x", 0.2}, {"y", 0.3}, {"x z", 0.5}});
}

// --- naive set-function oracles (direct enumeration) ----------------------

inline double naive_belief(const MassFunction& m, Subset a) {
  double acc = 0.0;
  for (Subset b = 1; b < m.frame().subset_count(); ++b) {
    if (subset_contains(a, b)) acc += m[b];
  }
  return acc;
}

inline double naive_plausibility(const MassFunction& m, Subset a) {
  double acc = 0.0;
  for (Subset b = 1; b < m.frame().subset_count(); ++b) {
    if (intersects(a, b)) acc += m[b];
  }
  return acc;
}

// Dempster combination by full enumeration over all subset pairs.
inline std::vector<double> naive_conjunctive(const MassFunction& a,
                                             const MassFunction& b) {
  std::vector<double> dense(a.frame().subset_count(), 0.0);
  for (Subset x = 1; x < a.frame().subset_count(); ++x) {
    for (Subset y = 1; y < b.frame().subset_count(); ++y) {
      dense[x & y] += a[x] * b[y];
    }
  }
  return dense;
}

// --- deterministic random instances ---------------------------------------

// A stream of random (mass, event) pairs for sweep tests.  Frame sizes vary
// over [2, max_n]; events are arbitrary nonempty subsets.
class InstanceStream {
 public:
  explicit InstanceStream(std::uint64_t seed, int max_n = 6)
      : rng_(seed), max_n_(max_n) {}

  MassFunction next_mass(int n) {
    const Frame frame = frame_of(n);
    const std::size_t pool = frame.subset_count() - 1;
    const int k = 1 + static_cast<int>(rng_.below(std::min<std::size_t>(pool, 6)));
    return random_mass(frame, k, rng_.raw());
  }

  MassFunction next_mass() { return next_mass(next_n()); }

  Subset next_event(const Frame& frame) {
    return static_cast<Subset>(1 + rng_.below(frame.subset_count() - 1));
  }

  int next_n() { return 2 + static_cast<int>(rng_.below(max_n_ - 1)); }

  Rng& rng() { return rng_; }

  static Frame frame_of(int n) {
    static const char* kNames[] = {"x", "y", "z", "w", "v", "u",
                                   "t", "s", "r", "q", "p", "o"};
    return Frame(std::vector<std::string>(kNames, kNames + n));
  }

 private:
  Rng rng_;
  int max_n_;
};

inline bool close(double a, double b, double tolerance = 1e-9) {
  return std::abs(a - b) <= tolerance;
}

}  // namespace belcond::testing
