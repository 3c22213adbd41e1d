#pragma once

#include <optional>

#include "belcond/mass.hpp"

namespace belcond {

// Conditional belief/plausibility values for every event A (indexed by
// Subset, 0..2^n-1), relative to a fixed conditioning event.
struct IntervalAssignment {
  Frame frame;
  Subset event = kEmptySet;
  std::vector<double> belief;
  std::vector<double> plaus;

  // True when 0 <= bel <= pl <= 1 holds entrywise (within 1e-9) and the
  // conditioning event itself gets belief 1.
  bool is_consistent() const;
};

// --- closed-form conditional set functions, one per operator -------------
//
// Each returns bel/pl values for all events.  The unnormalized conjunctive
// pair is total by convention: its belief counts the conflict mass (so it
// equals b(A u ~B) wherever A meets B) and its plausibility saturates at 1
// once A covers B.  That convention can place bel above pl when mass sits
// outside the conditioning event -- is_consistent() then reports false,
// which is faithful to the operator, not a bug.

IntervalAssignment dempster_intervals(const MassFunction& m, Subset event);
IntervalAssignment credal_intervals(const MassFunction& m, Subset event);
IntervalAssignment suppes_geometric_intervals(const MassFunction& m,
                                              Subset event);
IntervalAssignment conjunctive_intervals(const MassFunction& m, Subset event);
IntervalAssignment disjunctive_intervals(const MassFunction& m, Subset event);

// --- conditioning operators ----------------------------------------------

// Dempster conditioning: combination with the categorical mass on `event`.
// Throws EmptyEvent, and TotalConflict when pl(event) vanishes.
MassFunction dempster_condition(const MassFunction& m, Subset event);

// Lower/upper envelopes of the conditional probabilities (credal
// conditioning).  The mass function is recovered by Moebius inversion of the
// lower envelope restricted to subsets of the event; it is present whenever
// the inversion yields nonnegative masses.  Throws EmptyEvent, TotalConflict
// when pl(event) vanishes, and UndefinedDenominator(A) when some event's
// ratio is 0/0.
struct CredalConditional {
  IntervalAssignment intervals;
  std::optional<MassFunction> mass;
};
CredalConditional credal_condition(const MassFunction& m, Subset event);

// Geometric conditioning: belief ratios b(A n B)/b(B).  Throws EmptyEvent
// and ZeroBelief when b(event) vanishes.
struct SuppesConditional {
  IntervalAssignment intervals;
  MassFunction mass;
};
SuppesConditional suppes_geometric_condition(const MassFunction& m,
                                             Subset event);

// Open-world conditioning: mass outside the event collapses onto its trace
// inside, conflict staying on the empty set.  Never fails for a nonempty
// event; the empty-set mass is reported, not an error.
UnnormalizedMass conjunctive_condition(const MassFunction& m, Subset event);

// Disjunctive conditioning: combination-by-union with the categorical mass
// on `event`; focal elements are inflated to contain the event.
MassFunction disjunctive_condition(const MassFunction& m, Subset event);

// --- ordering of the operator family --------------------------------------

struct ChainReport {
  bool ok = false;
  double worst_slack = 0.0;  // most negative margin seen (0 when all hold)
  Subset worst_event = kEmptySet;
  int worst_link = -1;  // index into the 7 inequalities, belief end first
};

// Checks, for every event A, the two-sided ordering
//   disjunctive <= credal <= Dempster <= conjunctive   (belief values)
//   conjunctive <= Dempster <= credal <= disjunctive   (plausibility values)
// joined in the middle by bel <= pl of the conjunctive pair.  The middle
// link is a theorem only when no mass lies strictly outside the conditioning
// event (zero conjunctive conflict); with conflict present the report simply
// comes back negative.  Requires b(event) > 0 and pl(event) > 0 so that all
// operators are defined.
ChainReport nested_chain_check(const MassFunction& m, Subset event);

}  // namespace belcond
