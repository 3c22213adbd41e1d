#pragma once

#include <cstdint>
#include <optional>

#include "belcond/mass.hpp"

namespace belcond {

enum class Norm { kL1, kL2, kLinf };

// Lp distance between two mass vectors over the nonempty subsets of a shared
// frame.  Throws FrameMismatch when the frames differ.
double lp_distance(const SignedMassFunction& a, const SignedMassFunction& b,
                   Norm p);

// Distance weighted by subset similarity |A n B| / |A u B|; zero exactly on
// equal arguments, and a metric on mass space.
double jousselme_distance(const MassFunction& a, const MassFunction& b);

// Solves the dense linear system A x = rhs (row-major, d x d) by Gaussian
// elimination with partial pivoting.  Throws Error on a singular matrix.
std::vector<double> solve_dense(std::vector<double> a, std::vector<double> rhs);

// Lagrange multipliers of the equality-constrained L2 projection onto the
// conditioning subspace, obtained from the normal system
// (I + ones) beta = (b(event) - 1) ones over the proper nonempty subsets of
// the event; the event's own multiplier closes the constraint.
struct BetaVector {
  Subset event = kEmptySet;
  std::vector<Subset> inner;   // proper nonempty subsets of event, ascending
  std::vector<double> values;  // multiplier per inner subset
  double event_value = 0.0;    // multiplier of the event itself
};

BetaVector l2_beta_solve(const MassFunction& m, Subset event);

// Reconstructs the projected mass from the multipliers: m'(B) = m(B) -
// beta(B) on subsets of the event, zero elsewhere.
SignedMassFunction mass_from_beta(const MassFunction& m, const BetaVector& b);

// End-to-end L2 conditioning through the linear solver; an independent path
// to cross-check the closed-form l2_condition.
MassFunction l2_project_linear_solve(const MassFunction& m, Subset event);

// Verdict of a sampled minimality check.  `ok` requires that all candidates
// agree on their distance and that no sample beats it by more than 1e-9.
struct NonImprovementReport {
  bool ok = false;
  double min_candidate_distance = 0.0;
  double worst_margin = 0.0;  // most negative (sample - candidate) gap seen
  bool convexity_ok = true;   // candidate midpoints also achieve the minimum
  std::optional<std::vector<double>> witness;  // dense mass of a violator
};

// Samples the conditioning simplex (flat Dirichlet over its generators, all
// of its corners, and all candidate midpoints) and checks that no sampled
// mass function is closer to `m` in the given norm than the candidates.
NonImprovementReport sampled_nonimprovement(
    const MassFunction& m, Subset event, Norm p,
    const std::vector<SignedMassFunction>& candidates, int n_samples,
    std::uint64_t seed);

struct GridReport {
  bool ok = false;
  double grid_min = 0.0;
  double claimed = 0.0;
};

// Exhaustive sweep of the conditioning simplex for a two-element event (its
// three generator coordinates on a regular grid with `resolution` steps per
// axis).  Confirms `claimed` is the true minimal distance: no grid point
// beats it, and some grid point comes within the grid's Lipschitz slack.
// Throws WrongDimensions unless the event has exactly two elements.
GridReport grid_confirm_minimum(const MassFunction& m, Subset event, Norm p,
                                double claimed, int resolution);

// Sampled probability envelope: each focal element's mass is allocated to
// its elements (sometimes entirely to one element, sometimes spread by a
// Dirichlet draw), the result is conditioned by Bayes' rule on `event`, and
// per-event minima / maxima are recorded.  As sampling grows dense the
// envelope approaches the credal conditioning bounds from inside.
struct CredalEnvelope {
  Frame frame;
  Subset event = kEmptySet;
  std::vector<double> lower;  // per event index; +1 when never sampled
  std::vector<double> upper;  // per event index; -1 when never sampled
  long long samples_used = 0;
};

CredalEnvelope credal_sampling(const MassFunction& m, Subset event,
                               int n_samples, std::uint64_t seed);

}  // namespace belcond
