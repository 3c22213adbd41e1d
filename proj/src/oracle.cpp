#include "belcond/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "belcond/random.hpp"

namespace belcond {

namespace {

void require_event(const Frame& frame, Subset event, const char* who) {
  if (event == kEmptySet) {
    throw EmptyEvent(std::string(who) + ": conditioning event is empty");
  }
  if (event > frame.full()) {
    throw WrongDimensions(std::string(who) + ": event is not a frame subset");
  }
}

double lp_dist_dense(const std::vector<double>& a, const std::vector<double>& b,
                     Norm p) {
  double acc = 0.0;
  for (std::size_t i = 1; i < a.size(); ++i) {
    const double d = std::abs(a[i] - b[i]);
    switch (p) {
      case Norm::kL1:
        acc += d;
        break;
      case Norm::kL2:
        acc += d * d;
        break;
      case Norm::kLinf:
        acc = std::max(acc, d);
        break;
    }
  }
  return p == Norm::kL2 ? std::sqrt(acc) : acc;
}

}  // namespace

double lp_distance(const SignedMassFunction& a, const SignedMassFunction& b,
                   Norm p) {
  require_same_frame(a.frame(), b.frame(), "lp_distance");
  return lp_dist_dense(a.dense(), b.dense(), p);
}

double jousselme_distance(const MassFunction& a, const MassFunction& b) {
  require_same_frame(a.frame(), b.frame(), "jousselme_distance");
  const std::size_t count = a.frame().subset_count();
  std::vector<double> delta(count, 0.0);
  for (std::size_t i = 1; i < count; ++i) {
    delta[i] = a[static_cast<Subset>(i)] - b[static_cast<Subset>(i)];
  }
  double q = 0.0;
  for (std::size_t x = 1; x < count; ++x) {
    if (delta[x] == 0.0) continue;
    for (std::size_t y = 1; y < count; ++y) {
      if (delta[y] == 0.0) continue;
      const double sim =
          static_cast<double>(subset_size(static_cast<Subset>(x & y))) /
          static_cast<double>(subset_size(static_cast<Subset>(x | y)));
      q += delta[x] * sim * delta[y];
    }
  }
  return std::sqrt(std::max(0.0, 0.5 * q));
}

std::vector<double> solve_dense(std::vector<double> a,
                                std::vector<double> rhs) {
  const std::size_t d = rhs.size();
  if (a.size() != d * d) {
    throw WrongDimensions("solve_dense: matrix/vector size mismatch");
  }
  for (std::size_t col = 0; col < d; ++col) {
    // Partial pivoting.
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < d; ++r) {
      if (std::abs(a[r * d + col]) > std::abs(a[pivot * d + col])) pivot = r;
    }
    if (std::abs(a[pivot * d + col]) < 1e-14) {
      throw Error("solve_dense: singular matrix");
    }
    if (pivot != col) {
      for (std::size_t c = 0; c < d; ++c) {
        std::swap(a[col * d + c], a[pivot * d + c]);
      }
      std::swap(rhs[col], rhs[pivot]);
    }
    for (std::size_t r = col + 1; r < d; ++r) {
      const double f = a[r * d + col] / a[col * d + col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < d; ++c) a[r * d + c] -= f * a[col * d + c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<double> x(d, 0.0);
  for (std::size_t rr = d; rr-- > 0;) {
    double acc = rhs[rr];
    for (std::size_t c = rr + 1; c < d; ++c) acc -= a[rr * d + c] * x[c];
    x[rr] = acc / a[rr * d + rr];
  }
  return x;
}

BetaVector l2_beta_solve(const MassFunction& m, Subset event) {
  require_event(m.frame(), event, "l2_beta_solve");
  BetaVector beta;
  beta.event = event;
  for (Subset b : nonempty_subsets_of(event)) {
    if (b != event) beta.inner.push_back(b);
  }
  double belief = 0.0;  // b(event)
  for (Subset b : nonempty_subsets_of(event)) belief += m[b];

  const std::size_t d = beta.inner.size();
  if (d > 0) {
    std::vector<double> mat(d * d, 1.0);
    for (std::size_t i = 0; i < d; ++i) mat[i * d + i] = 2.0;
    std::vector<double> rhs(d, belief - 1.0);
    beta.values = solve_dense(std::move(mat), std::move(rhs));
  }
  double spent = 0.0;
  for (double v : beta.values) spent += v;
  beta.event_value = (belief - 1.0) - spent;
  return beta;
}

SignedMassFunction mass_from_beta(const MassFunction& m, const BetaVector& b) {
  std::vector<double> dense(m.frame().subset_count(), 0.0);
  for (std::size_t i = 0; i < b.inner.size(); ++i) {
    dense[b.inner[i]] = m[b.inner[i]] - b.values[i];
  }
  dense[b.event] = m[b.event] - b.event_value;
  return SignedMassFunction(m.frame(), std::move(dense));
}

MassFunction l2_project_linear_solve(const MassFunction& m, Subset event) {
  return mass_from_beta(m, l2_beta_solve(m, event)).to_mass_function();
}

NonImprovementReport sampled_nonimprovement(
    const MassFunction& m, Subset event, Norm p,
    const std::vector<SignedMassFunction>& candidates, int n_samples,
    std::uint64_t seed) {
  require_event(m.frame(), event, "sampled_nonimprovement");
  NonImprovementReport report;
  if (candidates.empty()) {
    report.ok = false;
    return report;
  }

  // All candidates must sit at one common distance; that is the bar to beat.
  double lo = 0.0, hi = 0.0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const double d = lp_distance(m, candidates[i], p);
    lo = (i == 0) ? d : std::min(lo, d);
    hi = (i == 0) ? d : std::max(hi, d);
  }
  const bool candidates_agree = (hi - lo) <= tol::kAnalytic;
  report.min_candidate_distance = lo;

  const std::vector<Subset> gens = nonempty_subsets_of(event);
  std::vector<double> sample(m.frame().subset_count(), 0.0);
  double worst = 0.0;
  bool improved = false;

  auto consider = [&](const std::vector<double>& dense) {
    const double margin = lp_dist_dense(m.dense(), dense, p) - lo;
    if (margin < worst) {
      worst = margin;
      if (margin < -tol::kAnalytic && !improved) {
        improved = true;
        report.witness = dense;
      }
    }
  };

  // Corners of the conditioning simplex.
  for (Subset g : gens) {
    std::fill(sample.begin(), sample.end(), 0.0);
    sample[g] = 1.0;
    consider(sample);
  }
  // Candidate midpoints; for L1/Linf the minimizer set is convex, so they
  // must achieve the same distance, not merely fail to improve on it.
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      const std::vector<double>& u = candidates[i].dense();
      const std::vector<double>& v = candidates[j].dense();
      for (std::size_t c = 0; c < sample.size(); ++c) {
        sample[c] = 0.5 * (u[c] + v[c]);
      }
      consider(sample);
      if (p != Norm::kL2) {
        const double d = lp_dist_dense(m.dense(), sample, p);
        if (std::abs(d - lo) > tol::kAnalytic) report.convexity_ok = false;
      }
    }
  }
  // Flat random interior of the simplex.
  Rng rng(seed);
  for (int s = 0; s < n_samples; ++s) {
    const std::vector<double> w = flat_simplex_point(rng, gens.size());
    std::fill(sample.begin(), sample.end(), 0.0);
    for (std::size_t i = 0; i < gens.size(); ++i) sample[gens[i]] = w[i];
    consider(sample);
  }

  report.worst_margin = worst;
  report.ok = candidates_agree && worst >= -tol::kAnalytic;
  return report;
}

GridReport grid_confirm_minimum(const MassFunction& m, Subset event, Norm p,
                                double claimed, int resolution) {
  require_event(m.frame(), event, "grid_confirm_minimum");
  if (subset_size(event) != 2) {
    throw WrongDimensions(
        "grid_confirm_minimum sweeps exactly three generator coordinates; "
        "the event must have two elements");
  }
  if (resolution < 1) {
    throw BadCount("grid_confirm_minimum needs a positive resolution");
  }
  const std::vector<Subset> gens = nonempty_subsets_of(event);

  // Contribution of coordinates the grid never moves (everything off the
  // conditioning simplex keeps distance |m(X)| in each norm).
  double rest_l1 = 0.0, rest_sq = 0.0, rest_max = 0.0;
  for (Subset x : m.focal()) {
    if (subset_contains(event, x)) continue;
    rest_l1 += m[x];
    rest_sq += m[x] * m[x];
    rest_max = std::max(rest_max, m[x]);
  }
  const double m0 = m[gens[0]], m1 = m[gens[1]], m2 = m[gens[2]];

  const double r = static_cast<double>(resolution);
  double best = 0.0;
  bool first = true;
  for (int i = 0; i <= resolution; ++i) {
    for (int j = 0; j + i <= resolution; ++j) {
      const double x = static_cast<double>(i) / r;
      const double y = static_cast<double>(j) / r;
      const double z = static_cast<double>(resolution - i - j) / r;
      const double d0 = std::abs(x - m0);
      const double d1 = std::abs(y - m1);
      const double d2 = std::abs(z - m2);
      double dist = 0.0;
      switch (p) {
        case Norm::kL1:
          dist = rest_l1 + d0 + d1 + d2;
          break;
        case Norm::kL2:
          dist = std::sqrt(rest_sq + d0 * d0 + d1 * d1 + d2 * d2);
          break;
        case Norm::kLinf:
          dist = std::max({rest_max, d0, d1, d2});
          break;
      }
      if (first || dist < best) {
        best = dist;
        first = false;
      }
    }
  }

  GridReport report;
  report.grid_min = best;
  report.claimed = claimed;
  // Moving each of three simplex coordinates to the nearest grid value
  // changes any of the three distances by at most 2/resolution.
  const double slack = 2.0 / r + tol::kAnalytic;
  report.ok = best >= claimed - tol::kAnalytic && best <= claimed + slack;
  return report;
}

CredalEnvelope credal_sampling(const MassFunction& m, Subset event,
                               int n_samples, std::uint64_t seed) {
  require_event(m.frame(), event, "credal_sampling");
  const PlausibilityVector pl = plausibility_of(m);
  if (pl[event] <= tol::kStrict) {
    throw TotalConflict("credal sampling undefined: pl('" +
                        m.frame().subset_key(event) + "') = 0");
  }

  const int n = m.frame().size();
  const std::size_t count = m.frame().subset_count();
  CredalEnvelope env{m.frame(), event, std::vector<double>(count, 1.0),
                     std::vector<double>(count, -1.0), 0};

  // Element indices of every focal set, flattened once.
  std::vector<std::vector<int>> members;
  members.reserve(m.focal().size());
  for (Subset f : m.focal()) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i) {
      if (f & (Subset{1} << i)) idx.push_back(i);
    }
    members.push_back(std::move(idx));
  }

  Rng rng(seed);
  std::vector<double> prob(n, 0.0);
  std::vector<double> cum(count, 0.0);
  for (int s = 0; s < n_samples; ++s) {
    std::fill(prob.begin(), prob.end(), 0.0);
    // Extreme allocations reach the envelope's corners; spread allocations
    // fill its interior.  Alternate between them at random.
    const bool extreme = rng.uniform() < 0.5;
    for (std::size_t f = 0; f < members.size(); ++f) {
      const double mass = m[m.focal()[f]];
      const std::vector<int>& idx = members[f];
      if (extreme || idx.size() == 1) {
        prob[idx[rng.below(idx.size())]] += mass;
      } else {
        const std::vector<double> w = flat_simplex_point(rng, idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i) {
          prob[idx[i]] += mass * w[i];
        }
      }
    }
    // Probabilities of all subsets via one pass (add the lowest element).
    cum[0] = 0.0;
    for (std::size_t a = 1; a < count; ++a) {
      const int low = std::countr_zero(a);
      cum[a] = cum[a & (a - 1)] + prob[low];
    }
    const double denom = cum[event];
    if (denom <= 1e-15) continue;
    ++env.samples_used;
    for (std::size_t a = 0; a < count; ++a) {
      const double conditional = cum[a & event] / denom;
      env.lower[a] = std::min(env.lower[a], conditional);
      env.upper[a] = std::max(env.upper[a], conditional);
    }
  }
  return env;
}

}  // namespace belcond
