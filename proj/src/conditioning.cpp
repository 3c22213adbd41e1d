#include "belcond/conditioning.hpp"

#include <cmath>
#include <string>

#include "belcond/combination.hpp"

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

IntervalAssignment blank(const Frame& frame, Subset event) {
  return IntervalAssignment{frame, event,
                            std::vector<double>(frame.subset_count(), 0.0),
                            std::vector<double>(frame.subset_count(), 0.0)};
}

// Moebius inversion of `values` over the subsets of `within` only; entries
// off the subalgebra are ignored.  Returns the dense mass vector.
std::vector<double> moebius_within(const Frame& frame,
                                   const std::vector<double>& values,
                                   Subset within) {
  std::vector<double> out(frame.subset_count(), 0.0);
  for (Subset a : nonempty_subsets_of(within)) {
    // m(a) = sum over subsets d of a of (-1)^{|a \ d|} f(d); f(empty) = 0.
    double acc = 0.0;
    for (Subset d = (a & (~a + 1));; d = (d - a) & a) {
      const int parity = subset_size(a) - subset_size(d);
      acc += ((parity & 1) ? -1.0 : 1.0) * values[d];
      if (d == a) break;
    }
    out[a] = acc;
  }
  return out;
}

}  // namespace

bool IntervalAssignment::is_consistent() const {
  for (std::size_t a = 0; a < belief.size(); ++a) {
    if (belief[a] < -tol::kAnalytic) return false;
    if (plaus[a] > 1.0 + tol::kAnalytic) return false;
    if (belief[a] > plaus[a] + tol::kAnalytic) return false;
  }
  return std::abs(belief[event] - 1.0) <= tol::kAnalytic;
}

IntervalAssignment dempster_intervals(const MassFunction& m, Subset event) {
  require_event(m.frame(), event, "dempster_intervals");
  const PlausibilityVector pl = plausibility_of(m);
  if (pl[event] <= tol::kStrict) {
    throw TotalConflict("dempster conditioning undefined: pl('" +
                        m.frame().subset_key(event) + "') = 0");
  }
  IntervalAssignment ia = blank(m.frame(), event);
  for (Subset a = 0; a < ia.belief.size(); ++a) {
    ia.belief[a] = (pl[event] - pl[event & ~a]) / pl[event];
    ia.plaus[a] = pl[a & event] / pl[event];
  }
  return ia;
}

IntervalAssignment credal_intervals(const MassFunction& m, Subset event) {
  require_event(m.frame(), event, "credal_intervals");
  const BeliefVector b = mass_to_belief(m);
  const PlausibilityVector pl = plausibility_of(m);
  if (pl[event] <= tol::kStrict) {
    throw TotalConflict("credal conditioning undefined: pl('" +
                        m.frame().subset_key(event) + "') = 0");
  }
  IntervalAssignment ia = blank(m.frame(), event);
  for (Subset a = 0; a < ia.belief.size(); ++a) {
    const Subset in = a & event;
    const Subset out = m.frame().complement(a) & event;
    const double bel_den = b[in] + pl[out];
    const double pl_den = pl[in] + b[out];
    if (bel_den <= tol::kStrict || pl_den <= tol::kStrict) {
      throw UndefinedDenominator(
          static_cast<Subset>(a),
          "credal conditional undefined at event '" +
              m.frame().subset_key(static_cast<Subset>(a)) +
              "': zero denominator");
    }
    ia.belief[a] = b[in] / bel_den;
    ia.plaus[a] = pl[in] / pl_den;
  }
  return ia;
}

IntervalAssignment suppes_geometric_intervals(const MassFunction& m,
                                              Subset event) {
  require_event(m.frame(), event, "suppes_geometric_intervals");
  const BeliefVector b = mass_to_belief(m);
  if (b[event] <= tol::kStrict) {
    throw ZeroBelief("geometric conditioning undefined: b('" +
                     m.frame().subset_key(event) + "') = 0");
  }
  IntervalAssignment ia = blank(m.frame(), event);
  for (Subset a = 0; a < ia.belief.size(); ++a) {
    ia.belief[a] = b[a & event] / b[event];
    ia.plaus[a] = (b[event] - b[event & ~a]) / b[event];
  }
  return ia;
}

IntervalAssignment conjunctive_intervals(const MassFunction& m, Subset event) {
  require_event(m.frame(), event, "conjunctive_intervals");
  const BeliefVector b = mass_to_belief(m);
  const PlausibilityVector pl = plausibility_of(m);
  IntervalAssignment ia = blank(m.frame(), event);
  const Subset outside = m.frame().complement(event);
  for (Subset a = 0; a < ia.belief.size(); ++a) {
    ia.belief[a] = intersects(a, event) ? b[(a & event) | outside] : 0.0;
    ia.plaus[a] = subset_contains(a, event) ? 1.0 : pl[a & event];
  }
  return ia;
}

IntervalAssignment disjunctive_intervals(const MassFunction& m, Subset event) {
  require_event(m.frame(), event, "disjunctive_intervals");
  const BeliefVector b = mass_to_belief(m);
  const PlausibilityVector pl = plausibility_of(m);
  IntervalAssignment ia = blank(m.frame(), event);
  for (Subset a = 0; a < ia.belief.size(); ++a) {
    ia.belief[a] = subset_contains(a, event) ? b[a] : 0.0;
    ia.plaus[a] = intersects(a, event) ? 1.0 : pl[a];
  }
  return ia;
}

MassFunction dempster_condition(const MassFunction& m, Subset event) {
  require_event(m.frame(), event, "dempster_condition");
  return dempster_sum(m, categorical(m.frame(), event)).mass;
}

CredalConditional credal_condition(const MassFunction& m, Subset event) {
  CredalConditional out{credal_intervals(m, event), std::nullopt};
  std::vector<double> lower(m.frame().subset_count(), 0.0);
  for (Subset a : nonempty_subsets_of(event)) lower[a] = out.intervals.belief[a];
  std::vector<double> mass = moebius_within(m.frame(), lower, event);
  bool admissible = true;
  for (Subset a : nonempty_subsets_of(event)) {
    if (mass[a] < -tol::kAnalytic) {
      admissible = false;
      break;
    }
    if (mass[a] < 0.0) mass[a] = 0.0;
  }
  if (admissible) out.mass = MassFunction(m.frame(), std::move(mass));
  return out;
}

SuppesConditional suppes_geometric_condition(const MassFunction& m,
                                             Subset event) {
  IntervalAssignment ia = suppes_geometric_intervals(m, event);
  std::vector<double> lower(m.frame().subset_count(), 0.0);
  for (Subset a : nonempty_subsets_of(event)) lower[a] = ia.belief[a];
  std::vector<double> mass = moebius_within(m.frame(), lower, event);
  for (Subset a : nonempty_subsets_of(event)) {
    if (mass[a] < 0.0) mass[a] = 0.0;  // rounding residue; true value m(a)/b(B)
  }
  MassFunction mf(m.frame(), std::move(mass));
  return SuppesConditional{std::move(ia), std::move(mf)};
}

UnnormalizedMass conjunctive_condition(const MassFunction& m, Subset event) {
  require_event(m.frame(), event, "conjunctive_condition");
  std::vector<double> dense(m.frame().subset_count(), 0.0);
  for (Subset x : m.focal()) dense[x & event] += m[x];
  return UnnormalizedMass(m.frame(), std::move(dense));
}

MassFunction disjunctive_condition(const MassFunction& m, Subset event) {
  require_event(m.frame(), event, "disjunctive_condition");
  return disjunctive_combine(m, categorical(m.frame(), event));
}

ChainReport nested_chain_check(const MassFunction& m, Subset event) {
  const IntervalAssignment dis = disjunctive_intervals(m, event);
  const IntervalAssignment cre = credal_intervals(m, event);
  const IntervalAssignment dem = dempster_intervals(m, event);
  const IntervalAssignment con = conjunctive_intervals(m, event);
  // Geometric conditioning shares the operators' preconditions even though
  // it sits outside the ordered family; requiring it keeps "all defined".
  suppes_geometric_intervals(m, event);

  ChainReport report;
  report.ok = true;
  report.worst_slack = 0.0;
  for (Subset a = 0; a < m.frame().subset_count(); ++a) {
    const double chain[8] = {dis.belief[a], cre.belief[a], dem.belief[a],
                             con.belief[a], con.plaus[a],  dem.plaus[a],
                             cre.plaus[a],  dis.plaus[a]};
    for (int link = 0; link < 7; ++link) {
      const double slack = chain[link + 1] - chain[link];
      if (slack < report.worst_slack) {
        report.worst_slack = slack;
        report.worst_event = a;
        report.worst_link = link;
      }
    }
  }
  report.ok = report.worst_slack >= -tol::kAnalytic;
  return report;
}

}  // namespace belcond
