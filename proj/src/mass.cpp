#include "belcond/mass.hpp"

#include <cmath>
#include <cstddef>
#include <string>

namespace belcond {

namespace {

void require_dense_size(const Frame& frame, const std::vector<double>& dense,
                        const char* what) {
  if (dense.size() != frame.subset_count()) {
    throw WrongDimensions(std::string(what) + ": expected " +
                          std::to_string(frame.subset_count()) +
                          " entries, got " + std::to_string(dense.size()));
  }
}

double total(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

Subset core_of(const std::vector<double>& dense) {
  Subset core = kEmptySet;
  for (std::size_t a = 1; a < dense.size(); ++a) {
    if (dense[a] > 0.0) core |= static_cast<Subset>(a);
  }
  return core;
}

}  // namespace

MassDiagnostics validate_masses(const Frame& frame,
                                const std::vector<double>& dense) {
  require_dense_size(frame, dense, "validate_masses");
  MassDiagnostics d;
  d.min_entry = dense[0];
  d.empty_mass = dense[0];
  for (std::size_t a = 0; a < dense.size(); ++a) {
    const double m = dense[a];
    d.sum += m;
    if (m < d.min_entry) d.min_entry = m;
    if (m < -tol::kStrict) ++d.negative_count;
    if (a != 0 && m > 0.0) d.focal.push_back(static_cast<Subset>(a));
  }
  d.core = core_of(dense);
  d.sum_deviation = d.sum - 1.0;
  d.ok = d.negative_count == 0 && std::abs(d.sum_deviation) <= tol::kAnalytic &&
         std::abs(d.empty_mass) <= tol::kStrict;
  return d;
}

MassFunction::MassFunction(Frame frame, std::vector<double> dense)
    : frame_(std::move(frame)), dense_(std::move(dense)) {
  MassDiagnostics d = validate_masses(frame_, dense_);
  if (!d.ok) {
    if (d.negative_count > 0) {
      throw InvalidMass("mass entry " + std::to_string(d.min_entry) +
                        " is negative");
    }
    if (std::abs(d.empty_mass) > tol::kStrict) {
      throw InvalidMass("mass on the empty set must be zero");
    }
    throw InvalidMass("masses sum to " + std::to_string(d.sum) +
                      ", expected 1");
  }
  dense_[0] = 0.0;
  for (double& x : dense_) {
    if (x < 0.0) x = 0.0;  // scrub rounding residue (validated >= -1e-12)
  }
  focal_ = std::move(d.focal);
  core_ = d.core;
}

SignedMassFunction::SignedMassFunction(Frame frame, std::vector<double> dense)
    : frame_(std::move(frame)), dense_(std::move(dense)) {
  require_dense_size(frame_, dense_, "SignedMassFunction");
  if (std::abs(dense_[0]) > tol::kStrict) {
    throw InvalidMass("signed mass on the empty set must be zero");
  }
  const double s = total(dense_);
  if (std::abs(s - 1.0) > tol::kAnalytic) {
    throw InvalidMass("signed masses sum to " + std::to_string(s) +
                      ", expected 1");
  }
  dense_[0] = 0.0;
  core_ = kEmptySet;
  for (std::size_t a = 1; a < dense_.size(); ++a) {
    if (dense_[a] != 0.0) core_ |= static_cast<Subset>(a);
  }
}

SignedMassFunction::SignedMassFunction(const MassFunction& m)
    : frame_(m.frame()), dense_(m.dense()), core_(m.core()) {}

bool SignedMassFunction::is_admissible() const {
  for (double x : dense_) {
    if (x < -tol::kStrict) return false;
  }
  return true;
}

MassFunction SignedMassFunction::to_mass_function() const {
  if (!is_admissible()) {
    throw InvalidMass("signed mass has negative entries");
  }
  std::vector<double> clean = dense_;
  for (double& x : clean) {
    if (x < 0.0) x = 0.0;  // only rounding residue (>= -1e-12) gets clipped
  }
  return MassFunction(frame_, std::move(clean));
}

UnnormalizedMass::UnnormalizedMass(Frame frame, std::vector<double> dense)
    : frame_(std::move(frame)), dense_(std::move(dense)) {
  require_dense_size(frame_, dense_, "UnnormalizedMass");
  const double s = total(dense_);
  if (std::abs(s - 1.0) > tol::kAnalytic) {
    throw InvalidMass("unnormalized masses sum to " + std::to_string(s) +
                      ", expected 1 including the empty-set slot");
  }
  for (double x : dense_) {
    if (x < -tol::kStrict) {
      throw InvalidMass("unnormalized mass entry " + std::to_string(x) +
                        " is negative");
    }
  }
}

MassFunction UnnormalizedMass::to_mass_function() const {
  if (!is_proper()) {
    throw InvalidMass("conflict mass " + std::to_string(empty_mass()) +
                      " on the empty set; normalize first");
  }
  std::vector<double> clean = dense_;
  clean[0] = 0.0;
  const double s = total(clean);
  if (s > 0.0) {
    for (double& x : clean) x /= s;  // absorb the (tiny) empty-set residue
  }
  return MassFunction(frame_, std::move(clean));
}

MassFunction UnnormalizedMass::normalized() const {
  const double keep = 1.0 - empty_mass();
  if (keep < tol::kStrict) {
    throw TotalConflict("all mass fell on the empty set");
  }
  std::vector<double> clean = dense_;
  clean[0] = 0.0;
  for (double& x : clean) x /= keep;
  return MassFunction(frame_, std::move(clean));
}

BeliefVector::BeliefVector(Frame frame, std::vector<double> values)
    : frame_(std::move(frame)), values_(std::move(values)) {
  require_dense_size(frame_, values_, "BeliefVector");
  if (std::abs(values_[0]) > tol::kAnalytic) {
    throw InvalidMass("belief of the empty set must be 0");
  }
  if (std::abs(values_[frame_.full()] - 1.0) > tol::kAnalytic) {
    throw InvalidMass("belief of the whole frame must be 1");
  }
}

PlausibilityVector::PlausibilityVector(Frame frame, std::vector<double> values)
    : frame_(std::move(frame)), values_(std::move(values)) {
  require_dense_size(frame_, values_, "PlausibilityVector");
}

void zeta_transform(std::vector<double>& v, int n) {
  for (int i = 0; i < n; ++i) {
    const Subset bit = Subset{1} << i;
    for (Subset a = 0; a < v.size(); ++a) {
      if (a & bit) v[a] += v[a ^ bit];
    }
  }
}

void moebius_transform(std::vector<double>& v, int n) {
  for (int i = 0; i < n; ++i) {
    const Subset bit = Subset{1} << i;
    for (Subset a = 0; a < v.size(); ++a) {
      if (a & bit) v[a] -= v[a ^ bit];
    }
  }
}

BeliefVector mass_to_belief(const MassFunction& m) {
  std::vector<double> v = m.dense();
  zeta_transform(v, m.frame().size());
  return BeliefVector(m.frame(), std::move(v));
}

MassFunction belief_to_mass(const BeliefVector& b) {
  std::vector<double> v = b.values();
  moebius_transform(v, b.frame().size());
  for (std::size_t a = 1; a < v.size(); ++a) {
    if (v[a] < -tol::kAnalytic) {
      throw NotABeliefFunction("recovered mass of '" +
                               b.frame().subset_key(static_cast<Subset>(a)) +
                               "' is " + std::to_string(v[a]));
    }
    if (v[a] < 0.0) v[a] = 0.0;
  }
  v[0] = 0.0;
  return MassFunction(b.frame(), std::move(v));
}

PlausibilityVector plausibility_of(const MassFunction& m) {
  const BeliefVector b = mass_to_belief(m);
  std::vector<double> v(m.frame().subset_count(), 0.0);
  for (Subset a = 0; a < v.size(); ++a) {
    v[a] = 1.0 - b[m.frame().complement(a)];
  }
  return PlausibilityVector(m.frame(), std::move(v));
}

MassFunction categorical(const Frame& frame, Subset a) {
  if (a == kEmptySet) {
    throw EmptyEvent("categorical mass needs a nonempty subset");
  }
  std::vector<double> v(frame.subset_count(), 0.0);
  v.at(a) = 1.0;
  return MassFunction(frame, std::move(v));
}

MassFunction vacuous(const Frame& frame) {
  return categorical(frame, frame.full());
}

MassFunction convex_combine(
    const std::vector<std::pair<double, MassFunction>>& weighted) {
  if (weighted.empty()) {
    throw WeightMismatch("convex_combine needs at least one operand");
  }
  const Frame& frame = weighted.front().second.frame();
  double wsum = 0.0;
  for (const auto& [w, m] : weighted) {
    require_same_frame(frame, m.frame(), "convex_combine");
    if (w < -tol::kStrict) {
      throw WeightMismatch("negative weight " + std::to_string(w));
    }
    wsum += w;
  }
  if (std::abs(wsum - 1.0) > tol::kAnalytic) {
    throw WeightMismatch("weights sum to " + std::to_string(wsum) +
                         ", expected 1");
  }
  std::vector<double> v(frame.subset_count(), 0.0);
  for (const auto& [w, m] : weighted) {
    for (Subset a : m.focal()) v[a] += w * m[a];
  }
  return MassFunction(frame, std::move(v));
}

}  // namespace belcond
