#include "belcond/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace belcond {

double Rng::exponential() {
  // uniform() < 1, so the argument to log stays positive.
  return -std::log(1.0 - uniform());
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw BadCount("Rng::below needs a positive bound");
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = eng_();
  } while (x >= limit);
  return x % bound;
}

std::vector<double> flat_simplex_point(Rng& rng, std::size_t k) {
  std::vector<double> v(k, 0.0);
  double sum = 0.0;
  for (double& x : v) {
    x = rng.exponential();
    sum += x;
  }
  if (sum <= 0.0) {
    std::fill(v.begin(), v.end(), 1.0 / static_cast<double>(k));
    return v;
  }
  for (double& x : v) x /= sum;
  return v;
}

std::vector<Subset> sample_distinct_subsets(Rng& rng, const Frame& frame,
                                            int count) {
  const std::size_t pool = frame.subset_count() - 1;
  if (count < 1 || static_cast<std::size_t>(count) > pool) {
    throw BadCount("cannot pick " + std::to_string(count) +
                   " distinct nonempty subsets from a frame with " +
                   std::to_string(pool));
  }
  std::vector<Subset> idx(pool);
  std::iota(idx.begin(), idx.end(), Subset{1});
  // Partial Fisher-Yates: only the first `count` positions are needed.
  for (int i = 0; i < count; ++i) {
    const std::size_t j = i + rng.below(pool - i);
    std::swap(idx[i], idx[j]);
  }
  idx.resize(count);
  std::sort(idx.begin(), idx.end());
  return idx;
}

MassFunction random_mass(const Frame& frame, int k_focal, std::uint64_t seed) {
  Rng rng(seed);
  const std::vector<Subset> picks = sample_distinct_subsets(rng, frame, k_focal);
  const std::vector<double> weights = flat_simplex_point(rng, picks.size());
  std::vector<double> dense(frame.subset_count(), 0.0);
  for (std::size_t i = 0; i < picks.size(); ++i) dense[picks[i]] = weights[i];
  return MassFunction(frame, std::move(dense));
}

}  // namespace belcond
