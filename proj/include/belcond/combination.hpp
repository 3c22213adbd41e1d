#pragma once

#include "belcond/mass.hpp"

namespace belcond {

// Mass killed by pairwise conflict during a conjunctive combination.
struct ConflictReport {
  double kappa = 0.0;
};

struct DempsterResult {
  MassFunction mass;
  ConflictReport conflict;
};

// Dempster's rule of combination: conjunctive intersection of focal elements
// followed by renormalization.  Throws TotalConflict when the surviving mass
// 1 - kappa falls below 1e-12.
DempsterResult dempster_sum(const MassFunction& a, const MassFunction& b);

// Open-world conjunctive combination: like Dempster's rule but the conflict
// stays as explicit mass on the empty set and nothing is rescaled.
UnnormalizedMass conjunctive_combine(const MassFunction& a,
                                     const MassFunction& b);

// Disjunctive combination: products accumulate on unions of focal elements.
// Never produces conflict.
MassFunction disjunctive_combine(const MassFunction& a, const MassFunction& b);

// Conditioning rules that return a unique mass function and can therefore
// drive a conditional-embedding combination.
enum class ConditioningRule { kL2, kDempster, kSuppesGeometric, kConjunctive };

// Combination through conditioning: sum_A m_prime(A) * (b conditioned on A).
// Every focal element A of m_prime must satisfy the chosen rule's
// preconditions; otherwise UndefinedConditional(A) is thrown.
MassFunction conditioning_induced_combine(ConditioningRule rule,
                                          const MassFunction& b,
                                          const MassFunction& m_prime);

struct DecompositionReport {
  bool ok = false;
  double max_deviation = 0.0;
};

// Verifies that the Dempster sum decomposes as a mixture of Dempster
// conditionals: b (+) b' == sum_A mu(A) * (b | A) with weights
// mu(A) proportional to m'(A) * pl_b(A).  Reports the largest entrywise
// deviation between the two sides.
DecompositionReport dempster_decomposition_check(const MassFunction& b,
                                                 const MassFunction& m_prime);

}  // namespace belcond
