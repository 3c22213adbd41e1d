#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "belcond/frame.hpp"
#include "belcond/types.hpp"

namespace belcond {

// Diagnostics produced by validate_masses.  `ok` summarizes whether the
// vector qualifies as a basic probability assignment under the library
// tolerances (entries >= -1e-12, total within 1e-9 of one, nothing on the
// empty set).
struct MassDiagnostics {
  double sum = 0.0;
  double sum_deviation = 0.0;
  double min_entry = 0.0;
  int negative_count = 0;
  double empty_mass = 0.0;
  std::vector<Subset> focal;  // subsets with strictly positive mass
  Subset core = kEmptySet;    // union of focal elements
  bool ok = false;
};

MassDiagnostics validate_masses(const Frame& frame,
                                const std::vector<double>& dense);

// A basic probability assignment: nonnegative masses on the nonempty subsets
// of a frame, summing to one.  `dense` is indexed by Subset (size 2^n, slot 0
// fixed at zero).  Instances are immutable and validated on construction, so
// every operation may assume a well-formed input.
class MassFunction {
 public:
  MassFunction(Frame frame, std::vector<double> dense);

  const Frame& frame() const { return frame_; }
  double operator[](Subset a) const { return dense_[a]; }
  const std::vector<double>& dense() const { return dense_; }
  const std::vector<Subset>& focal() const { return focal_; }
  Subset core() const { return core_; }

 private:
  Frame frame_;
  std::vector<double> dense_;
  std::vector<Subset> focal_;
  Subset core_;
};

// A mass vector summing to one whose entries may be negative (a pseudo belief
// function in mass coordinates).  Vertices of the L-infinity conditional
// simplex live here.
class SignedMassFunction {
 public:
  SignedMassFunction(Frame frame, std::vector<double> dense);
  SignedMassFunction(const MassFunction& m);  // implicit widening is intended

  const Frame& frame() const { return frame_; }
  double operator[](Subset a) const { return dense_[a]; }
  const std::vector<double>& dense() const { return dense_; }
  Subset core() const { return core_; }

  // True when every entry clears the -1e-12 negativity slack, i.e. the vector
  // is a basic probability assignment up to rounding.
  bool is_admissible() const;
  // Narrows back to MassFunction; throws InvalidMass when inadmissible.
  MassFunction to_mass_function() const;

 private:
  Frame frame_;
  std::vector<double> dense_;
  Subset core_;
};

// Result of a conjunctive (open-world) operation: masses on all subsets
// including the empty set, summing to one.  Slot 0 carries the conflict.
class UnnormalizedMass {
 public:
  UnnormalizedMass(Frame frame, std::vector<double> dense);

  const Frame& frame() const { return frame_; }
  double operator[](Subset a) const { return dense_[a]; }
  const std::vector<double>& dense() const { return dense_; }
  double empty_mass() const { return dense_[0]; }

  bool is_proper() const { return empty_mass() <= tol::kAnalytic; }
  // Requires is_proper(); reinterprets the vector as a MassFunction.
  MassFunction to_mass_function() const;
  // Drops the empty-set mass and rescales by 1/(1 - empty_mass); throws
  // TotalConflict when everything was conflict.
  MassFunction normalized() const;

 private:
  Frame frame_;
  std::vector<double> dense_;
};

// Belief values b(A) for every subset A of the frame (index 0..2^n-1).
// Construction checks only the endpoints b(empty)=0 and b(full)=1; whether
// the values come from an actual belief function is decided by Moebius
// inversion (belief_to_mass).
class BeliefVector {
 public:
  BeliefVector(Frame frame, std::vector<double> values);

  const Frame& frame() const { return frame_; }
  double operator[](Subset a) const { return values_[a]; }
  const std::vector<double>& values() const { return values_; }

 private:
  Frame frame_;
  std::vector<double> values_;
};

// Plausibility values pl(A) = 1 - b(complement of A) for every subset.
class PlausibilityVector {
 public:
  PlausibilityVector(Frame frame, std::vector<double> values);

  const Frame& frame() const { return frame_; }
  double operator[](Subset a) const { return values_[a]; }
  const std::vector<double>& values() const { return values_; }

 private:
  Frame frame_;
  std::vector<double> values_;
};

// Subset-sum (zeta) transform and its inverse (Moebius transform), in place,
// over a dense vector indexed by Subset.  Both run in O(n 2^n).
void zeta_transform(std::vector<double>& v, int n);
void moebius_transform(std::vector<double>& v, int n);

BeliefVector mass_to_belief(const MassFunction& m);
// Inverts belief values to masses; throws NotABeliefFunction when a
// recovered mass falls below -1e-9.
MassFunction belief_to_mass(const BeliefVector& b);
PlausibilityVector plausibility_of(const MassFunction& m);

// The categorical assignment putting all mass on `a`; throws EmptyEvent when
// `a` is empty.
MassFunction categorical(const Frame& frame, Subset a);
// The vacuous assignment (all mass on the whole frame).
MassFunction vacuous(const Frame& frame);

// Entrywise mixture sum_i w_i m_i.  Weights must be nonnegative and sum to
// one (WeightMismatch otherwise); all operands must share a frame.
MassFunction convex_combine(
    const std::vector<std::pair<double, MassFunction>>& weighted);

}  // namespace belcond
