#pragma once

#include "belcond/mass.hpp"

namespace belcond {

// The set of mass functions whose focal elements lie inside `event`,
// described by its vertices: the categorical masses on each nonempty subset
// of the event.  This is the feasible region every geometric conditioning
// below projects onto.
struct ConditioningSimplex {
  Subset event = kEmptySet;
  std::vector<Subset> generators;  // nonempty subsets of event, ascending
};

ConditioningSimplex conditioning_simplex(const Frame& frame, Subset event);

enum class ConditionalKind {
  kL1Simplex,    // the full L1 solution set (a simplex of mass functions)
  kLinfSimplex,  // the L-infinity solution set when one outside mass dominates
  kLinfPoint,    // the L-infinity solution collapses to a single point
};

// One vertex of a conditional solution set.  `generator` names the subset of
// the event whose coordinate absorbs the relocated outside mass.
struct ConditionalVertex {
  Subset generator = kEmptySet;
  SignedMassFunction mass;
  bool admissible = false;
};

// A set-valued conditional: the vertices of the minimizer set (ascending by
// generator; empty when the set is a single point) plus its barycenter.
// Conditional masses live on the full frame with zeros outside the event.
struct ConditionalSimplex {
  Subset event = kEmptySet;
  ConditionalKind kind = ConditionalKind::kL1Simplex;
  std::vector<ConditionalVertex> vertices;
  SignedMassFunction barycenter;

  bool all_admissible() const;
};

// L1 conditioning: the set of mass functions inside the event at minimal L1
// distance from `m`.  It is the simplex whose vertex for generator B adds
// the whole missing mass pl(~A) = 1 - b(A) to coordinate B.  Every vertex is
// a proper mass function.
ConditionalSimplex l1_condition(const MassFunction& m, Subset event);

// L2 conditioning: the unique minimizer, which spreads the missing mass
// evenly: m'(B) = m(B) + (1 - b(A)) / (2^|A| - 1) for every generator B.
MassFunction l2_condition(const MassFunction& m, Subset event);

// The barycenter of the L1 simplex coincides with the L2 conditional; true
// within 1e-12 entrywise.
bool l1_barycenter_equals_l2(const MassFunction& m, Subset event);

// L-infinity conditioning.  With M = max and S = sum of the masses outside
// the event and k = 2^|A| - 1 generators, the minimizer set is
//   - a simplex when M >= S/k (ties included): the vertex for generator B
//     adds M everywhere except at B, which absorbs S - (k-1) M and may go
//     negative (flagged, never clipped);
//   - the single L2 point when M < S/k.
ConditionalSimplex linf_condition(const MassFunction& m, Subset event);

// The minimal L-infinity distance itself: M in the simplex case, S/k at the
// point.
double linf_norm_value(const MassFunction& m, Subset event);

// Membership test for the L1 minimizer set: a candidate belongs iff its core
// lies inside the event and it dominates `m` coordinatewise there.
bool l1_set_contains(const MassFunction& m, Subset event,
                     const SignedMassFunction& candidate);

// L2 conditioning carried out in belief coordinates instead of mass
// coordinates.  For every proper nonempty subset B of the event,
//   m'(B) = sum_{C subset of ~A} m(B u C) 2^-|C|
//           + (-1)^{|B|+1} sum_{nonempty C subset of ~A} m(C) 2^-|C|,
// and the event's own coordinate closes the budget to one.  The result may
// be inadmissible (negative coordinates); it is returned signed, not clipped.
SignedMassFunction l2_condition_belief_space(const MassFunction& m,
                                             Subset event);

// Barycenter of the L-infinity conditional solution set in belief
// coordinates: m'(B) = m(B) + (1/2) sum_{nonempty C subset of ~A} m(B u C)
// + (-1)^{|B|+1} b(~A)/2 on proper subsets, event coordinate normalized.
SignedMassFunction linf_barycentre_belief_space(const MassFunction& m,
                                                Subset event);

}  // namespace belcond
