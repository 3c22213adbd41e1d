#include "belcond/combination.hpp"

#include <cmath>
#include <string>

#include "belcond/conditioning.hpp"
#include "belcond/lp_conditioning.hpp"

namespace belcond {

UnnormalizedMass conjunctive_combine(const MassFunction& a,
                                     const MassFunction& b) {
  require_same_frame(a.frame(), b.frame(), "conjunctive_combine");
  std::vector<double> dense(a.frame().subset_count(), 0.0);
  for (Subset x : a.focal()) {
    for (Subset y : b.focal()) {
      dense[x & y] += a[x] * b[y];
    }
  }
  return UnnormalizedMass(a.frame(), std::move(dense));
}

DempsterResult dempster_sum(const MassFunction& a, const MassFunction& b) {
  const UnnormalizedMass joint = conjunctive_combine(a, b);
  const double kappa = joint.empty_mass();
  if (1.0 - kappa < tol::kStrict) {
    throw TotalConflict("operands are totally conflicting (kappa = " +
                        std::to_string(kappa) + ")");
  }
  return DempsterResult{joint.normalized(), ConflictReport{kappa}};
}

MassFunction disjunctive_combine(const MassFunction& a,
                                 const MassFunction& b) {
  require_same_frame(a.frame(), b.frame(), "disjunctive_combine");
  std::vector<double> dense(a.frame().subset_count(), 0.0);
  for (Subset x : a.focal()) {
    for (Subset y : b.focal()) {
      dense[x | y] += a[x] * b[y];
    }
  }
  return MassFunction(a.frame(), std::move(dense));
}

namespace {

// The unique conditional mass of `b` given `event` under `rule`; throws
// UndefinedConditional when the rule's precondition fails at `event`.
MassFunction rule_conditional(ConditioningRule rule, const MassFunction& b,
                              Subset event) {
  const std::string key = b.frame().subset_key(event);
  try {
    switch (rule) {
      case ConditioningRule::kL2:
        return l2_condition(b, event);
      case ConditioningRule::kDempster:
        return dempster_condition(b, event);
      case ConditioningRule::kSuppesGeometric:
        return suppes_geometric_condition(b, event).mass;
      case ConditioningRule::kConjunctive: {
        const UnnormalizedMass u = conjunctive_condition(b, event);
        if (!u.is_proper()) {
          throw UndefinedConditional(
              event, "conjunctive conditional on '" + key + "' leaves mass " +
                         std::to_string(u.empty_mass()) +
                         " on the empty set; a mass function requires zero");
        }
        return u.to_mass_function();
      }
    }
    throw Error("unknown conditioning rule");
  } catch (const UndefinedConditional&) {
    throw;
  } catch (const TotalConflict&) {
    throw UndefinedConditional(
        event, "conditional on '" + key + "' undefined: pl('" + key +
                   "') = 0, nothing survives the conditioning event");
  } catch (const ZeroBelief&) {
    throw UndefinedConditional(
        event, "conditional on '" + key + "' undefined: b('" + key +
                   "') = 0, the event has zero belief");
  }
}

}  // namespace

MassFunction conditioning_induced_combine(ConditioningRule rule,
                                          const MassFunction& b,
                                          const MassFunction& m_prime) {
  require_same_frame(b.frame(), m_prime.frame(), "conditioning_induced_combine");
  std::vector<double> dense(b.frame().subset_count(), 0.0);
  for (Subset a : m_prime.focal()) {
    const MassFunction conditional = rule_conditional(rule, b, a);
    const double w = m_prime[a];
    for (Subset x : conditional.focal()) dense[x] += w * conditional[x];
  }
  return MassFunction(b.frame(), std::move(dense));
}

DecompositionReport dempster_decomposition_check(const MassFunction& b,
                                                 const MassFunction& m_prime) {
  require_same_frame(b.frame(), m_prime.frame(), "dempster_decomposition_check");
  const MassFunction lhs = dempster_sum(b, m_prime).mass;

  const PlausibilityVector pl = plausibility_of(b);
  double wsum = 0.0;
  for (Subset a : m_prime.focal()) wsum += m_prime[a] * pl[a];
  // wsum equals 1 - kappa, so dempster_sum succeeding guarantees wsum > 0.
  std::vector<double> rhs(b.frame().subset_count(), 0.0);
  for (Subset a : m_prime.focal()) {
    const double w = m_prime[a] * pl[a] / wsum;
    if (w == 0.0) continue;
    const MassFunction conditional = dempster_condition(b, a);
    for (Subset x : conditional.focal()) rhs[x] += w * conditional[x];
  }

  DecompositionReport report;
  for (Subset a = 1; a < rhs.size(); ++a) {
    report.max_deviation =
        std::max(report.max_deviation, std::abs(rhs[a] - lhs[a]));
  }
  report.ok = report.max_deviation <= tol::kAnalytic;
  return report;
}

}  // namespace belcond
