#include "belcond/lp_conditioning.hpp"

#include <algorithm>
#include <cmath>
#include <string>

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

// Mass sitting strictly outside the event: total and maximum.
struct OutsideMass {
  double sum = 0.0;
  double max = 0.0;
};

OutsideMass outside_mass(const MassFunction& m, Subset event) {
  OutsideMass o;
  for (Subset c : m.focal()) {
    if (!subset_contains(event, c)) {
      o.sum += m[c];
      o.max = std::max(o.max, m[c]);
    }
  }
  return o;
}

SignedMassFunction mean_of(const Frame& frame,
                           const std::vector<ConditionalVertex>& vertices) {
  std::vector<double> acc(frame.subset_count(), 0.0);
  for (const ConditionalVertex& v : vertices) {
    const std::vector<double>& d = v.mass.dense();
    for (std::size_t a = 0; a < acc.size(); ++a) acc[a] += d[a];
  }
  const double k = static_cast<double>(vertices.size());
  for (double& x : acc) x /= k;
  return SignedMassFunction(frame, std::move(acc));
}

}  // namespace

ConditioningSimplex conditioning_simplex(const Frame& frame, Subset event) {
  require_event(frame, event, "conditioning_simplex");
  return ConditioningSimplex{event, nonempty_subsets_of(event)};
}

bool ConditionalSimplex::all_admissible() const {
  return std::all_of(vertices.begin(), vertices.end(),
                     [](const ConditionalVertex& v) { return v.admissible; });
}

ConditionalSimplex l1_condition(const MassFunction& m, Subset event) {
  require_event(m.frame(), event, "l1_condition");
  const std::vector<Subset> gens = nonempty_subsets_of(event);
  const double missing = outside_mass(m, event).sum;  // equals 1 - b(event)

  std::vector<ConditionalVertex> vertices;
  vertices.reserve(gens.size());
  for (Subset g : gens) {
    std::vector<double> dense(m.frame().subset_count(), 0.0);
    for (Subset b : gens) dense[b] = m[b];
    dense[g] += missing;
    SignedMassFunction vertex(m.frame(), std::move(dense));
    const bool admissible = vertex.is_admissible();
    vertices.push_back(ConditionalVertex{g, std::move(vertex), admissible});
  }
  SignedMassFunction barycenter = mean_of(m.frame(), vertices);
  return ConditionalSimplex{event, ConditionalKind::kL1Simplex,
                            std::move(vertices), std::move(barycenter)};
}

MassFunction l2_condition(const MassFunction& m, Subset event) {
  require_event(m.frame(), event, "l2_condition");
  const std::vector<Subset> gens = nonempty_subsets_of(event);
  const double share =
      outside_mass(m, event).sum / static_cast<double>(gens.size());
  std::vector<double> dense(m.frame().subset_count(), 0.0);
  for (Subset b : gens) dense[b] = m[b] + share;
  return MassFunction(m.frame(), std::move(dense));
}

bool l1_barycenter_equals_l2(const MassFunction& m, Subset event) {
  const SignedMassFunction bary = l1_condition(m, event).barycenter;
  const MassFunction l2 = l2_condition(m, event);
  for (std::size_t a = 0; a < bary.dense().size(); ++a) {
    if (std::abs(bary.dense()[a] - l2.dense()[a]) > tol::kStrict) return false;
  }
  return true;
}

ConditionalSimplex linf_condition(const MassFunction& m, Subset event) {
  require_event(m.frame(), event, "linf_condition");
  const std::vector<Subset> gens = nonempty_subsets_of(event);
  const double k = static_cast<double>(gens.size());
  const OutsideMass o = outside_mass(m, event);

  if (o.max >= o.sum / k) {
    // One outside mass dominates: a simplex of (possibly signed) solutions.
    std::vector<ConditionalVertex> vertices;
    vertices.reserve(gens.size());
    for (Subset g : gens) {
      std::vector<double> dense(m.frame().subset_count(), 0.0);
      for (Subset b : gens) dense[b] = m[b] + o.max;
      dense[g] = m[g] + o.sum - (k - 1.0) * o.max;
      SignedMassFunction vertex(m.frame(), std::move(dense));
      const bool admissible = vertex.is_admissible();
      vertices.push_back(ConditionalVertex{g, std::move(vertex), admissible});
    }
    SignedMassFunction barycenter = mean_of(m.frame(), vertices);
    return ConditionalSimplex{event, ConditionalKind::kLinfSimplex,
                              std::move(vertices), std::move(barycenter)};
  }
  // Outside mass is spread thin: the unique minimizer is the L2 conditional.
  SignedMassFunction point(l2_condition(m, event));
  return ConditionalSimplex{event, ConditionalKind::kLinfPoint, {},
                            std::move(point)};
}

double linf_norm_value(const MassFunction& m, Subset event) {
  require_event(m.frame(), event, "linf_norm_value");
  const OutsideMass o = outside_mass(m, event);
  const double k =
      static_cast<double>((std::size_t{1} << subset_size(event)) - 1);
  return o.max >= o.sum / k ? o.max : o.sum / k;
}

bool l1_set_contains(const MassFunction& m, Subset event,
                     const SignedMassFunction& candidate) {
  require_event(m.frame(), event, "l1_set_contains");
  require_same_frame(m.frame(), candidate.frame(), "l1_set_contains");
  if (!subset_contains(event, candidate.core())) return false;
  for (Subset b : nonempty_subsets_of(event)) {
    if (candidate[b] < m[b] - tol::kAnalytic) return false;
  }
  return true;
}

SignedMassFunction l2_condition_belief_space(const MassFunction& m,
                                             Subset event) {
  require_event(m.frame(), event, "l2_condition_belief_space");
  const std::vector<Subset> outside = nonempty_subsets_of(
      m.frame().complement(event));

  // Shared correction term: sum over nonempty C outside of m(C) 2^-|C|.
  double correction = 0.0;
  for (Subset c : outside) correction += m[c] * std::ldexp(1.0, -subset_size(c));

  std::vector<double> dense(m.frame().subset_count(), 0.0);
  double spent = 0.0;
  for (Subset b : nonempty_subsets_of(event)) {
    if (b == event) continue;  // the event coordinate closes the budget
    double value = m[b];
    for (Subset c : outside) value += m[b | c] * std::ldexp(1.0, -subset_size(c));
    value += (subset_size(b) % 2 == 1 ? correction : -correction);
    dense[b] = value;
    spent += value;
  }
  dense[event] = 1.0 - spent;
  return SignedMassFunction(m.frame(), std::move(dense));
}

SignedMassFunction linf_barycentre_belief_space(const MassFunction& m,
                                                Subset event) {
  require_event(m.frame(), event, "linf_barycentre_belief_space");
  const std::vector<Subset> outside = nonempty_subsets_of(
      m.frame().complement(event));

  double outside_belief = 0.0;  // b(~A): mass wholly outside the event
  for (Subset c : outside) outside_belief += m[c];

  std::vector<double> dense(m.frame().subset_count(), 0.0);
  double spent = 0.0;
  for (Subset b : nonempty_subsets_of(event)) {
    if (b == event) continue;
    double value = m[b];
    for (Subset c : outside) value += 0.5 * m[b | c];
    value += (subset_size(b) % 2 == 1 ? 0.5 : -0.5) * outside_belief;
    dense[b] = value;
    spent += value;
  }
  dense[event] = 1.0 - spent;
  return SignedMassFunction(m.frame(), std::move(dense));
}

}  // namespace belcond
