#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "belcond/lp_conditioning.hpp"
#include "belcond/oracle.hpp"
#include "belcond/random.hpp"
#include "test_support.hpp"

using namespace belcond;
using namespace belcond::testing;

namespace {

// Sum and maximum of the mass lying outside `event`.
std::pair<double, double> outside_sum_max(const MassFunction& m, Subset event) {
  double sum = 0.0, best = 0.0;
  for (Subset c : m.focal()) {
    if (subset_contains(event, c)) continue;
    sum += m[c];
    best = std::max(best, m[c]);
  }
  return {sum, best};
}

// Independent check of the belief-space projection: minimize the squared
// belief-coordinate distance to the span of the categorical masses on the
// event's subsets, under the affine constraint that coefficients sum to one.
// Solved as a KKT system with a single multiplier.
SignedMassFunction belief_space_least_squares(const MassFunction& m,
                                              Subset event) {
  const Frame& f = m.frame();
  const std::vector<Subset> gens = nonempty_subsets_of(event);
  const std::size_t d = gens.size();
  const BeliefVector target = mass_to_belief(m);

  std::vector<double> mat((d + 1) * (d + 1), 0.0);
  std::vector<double> rhs(d + 1, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      // Gram entry: how many events contain both generators.  The belief of
      // a categorical mass on B is the indicator of "contains B".
      double dot = 0.0;
      for (Subset x = 1; x < f.subset_count(); ++x) {
        if (subset_contains(x, gens[i]) && subset_contains(x, gens[j])) {
          dot += 1.0;
        }
      }
      mat[i * (d + 1) + j] = dot;
    }
    double dot = 0.0;
    for (Subset x = 1; x < f.subset_count(); ++x) {
      if (subset_contains(x, gens[i])) dot += target[x];
    }
    rhs[i] = dot;
    mat[i * (d + 1) + d] = 1.0;
    mat[d * (d + 1) + i] = 1.0;
  }
  rhs[d] = 1.0;

  const std::vector<double> sol = solve_dense(std::move(mat), std::move(rhs));
  std::vector<double> dense(f.subset_count(), 0.0);
  for (std::size_t i = 0; i < d; ++i) dense[gens[i]] = sol[i];
  return SignedMassFunction(f, std::move(dense));
}

}  // namespace

TEST_CASE("conditioning simplex enumerates the event's subsets in order") {
  const Frame f = ternary_frame();
  const ConditioningSimplex s = conditioning_simplex(f, 0b011);
  REQUIRE(s.generators.size() == 3);
  CHECK(s.generators[0] == 0b001);
  CHECK(s.generators[1] == 0b010);
  CHECK(s.generators[2] == 0b011);
  CHECK_THROWS_AS(conditioning_simplex(f, kEmptySet), EmptyEvent);
}

TEST_CASE("ternary example: L1 conditional simplex") {
  const MassFunction m = ternary_example();
  const ConditionalSimplex s = l1_condition(m, 0b011);
  CHECK(s.kind == ConditionalKind::kL1Simplex);
  REQUIRE(s.vertices.size() == 3);

  // Vertices ordered by generator; coordinates on ({x},{y},{x,y}).
  const double expected[3][3] = {
      {0.7, 0.3, 0.0}, {0.2, 0.8, 0.0}, {0.2, 0.3, 0.5}};
  const Subset slots[3] = {0b001, 0b010, 0b011};
  for (int v = 0; v < 3; ++v) {
    CHECK(s.vertices[v].generator == slots[v]);
    CHECK(s.vertices[v].admissible);
    for (int c = 0; c < 3; ++c) {
      CHECK(close(s.vertices[v].mass[slots[c]], expected[v][c], 1e-12));
    }
    // Nothing outside the event.
    CHECK(s.vertices[v].mass[0b100] == 0.0);
    CHECK(s.vertices[v].mass[0b101] == 0.0);
    CHECK(s.vertices[v].mass[0b110] == 0.0);
    CHECK(s.vertices[v].mass[0b111] == 0.0);
  }
  CHECK(s.all_admissible());

  // Barycenter = the L2 conditional = (11/30, 14/30, 5/30).
  CHECK(close(s.barycenter[0b001], 11.0 / 30.0, 1e-12));
  CHECK(close(s.barycenter[0b010], 14.0 / 30.0, 1e-12));
  CHECK(close(s.barycenter[0b011], 5.0 / 30.0, 1e-12));
}

TEST_CASE("ternary example: L2 conditional point") {
  const MassFunction m = ternary_example();
  const MassFunction c = l2_condition(m, 0b011);
  CHECK(close(c[0b001], 11.0 / 30.0, 1e-12));
  CHECK(close(c[0b010], 14.0 / 30.0, 1e-12));
  CHECK(close(c[0b011], 5.0 / 30.0, 1e-12));
  CHECK(l1_barycenter_equals_l2(m, 0b011));
}

TEST_CASE("ternary example: L-infinity conditional simplex") {
  const MassFunction m = ternary_example();
  const ConditionalSimplex s = linf_condition(m, 0b011);
  CHECK(s.kind == ConditionalKind::kLinfSimplex);
  REQUIRE(s.vertices.size() == 3);

  const double expected[3][3] = {
      {-0.3, 0.8, 0.5}, {0.7, -0.2, 0.5}, {0.7, 0.8, -0.5}};
  const Subset slots[3] = {0b001, 0b010, 0b011};
  for (int v = 0; v < 3; ++v) {
    CHECK(s.vertices[v].generator == slots[v]);
    CHECK(!s.vertices[v].admissible);  // each vertex has a negative entry
    double sum = 0.0;
    for (int c = 0; c < 3; ++c) {
      CHECK(close(s.vertices[v].mass[slots[c]], expected[v][c], 1e-12));
      sum += s.vertices[v].mass[slots[c]];
    }
    CHECK(close(sum, 1.0, 1e-12));
    CHECK(!s.vertices[v].mass.is_admissible());
  }
  CHECK(!s.all_admissible());

  // Barycenter again the L2 point; minimal distance is the dominant outside
  // mass, and every vertex actually sits at that distance here.
  CHECK(close(s.barycenter[0b001], 11.0 / 30.0, 1e-12));
  CHECK(close(s.barycenter[0b010], 14.0 / 30.0, 1e-12));
  CHECK(close(s.barycenter[0b011], 5.0 / 30.0, 1e-12));
  CHECK(close(linf_norm_value(m, 0b011), 0.5, 1e-12));
  for (const ConditionalVertex& v : s.vertices) {
    CHECK(close(lp_distance(m, v.mass, Norm::kLinf), 0.5, 1e-12));
  }
}

TEST_CASE("membership in the L1 minimizer set") {
  const MassFunction m = ternary_example();
  const Frame f = m.frame();
  const Subset a = 0b011;

  auto candidate = [&](double x, double y, double xy) {
    std::vector<double> dense(f.subset_count(), 0.0);
    dense[0b001] = x;
    dense[0b010] = y;
    dense[0b011] = xy;
    return SignedMassFunction(f, std::move(dense));
  };
  CHECK(l1_set_contains(m, a, candidate(0.45, 0.3, 0.25)));
  CHECK(!l1_set_contains(m, a, candidate(0.1, 0.6, 0.3)));  // drops below m(x)

  const ConditionalSimplex s = l1_condition(m, a);
  for (const ConditionalVertex& v : s.vertices) {
    CHECK(l1_set_contains(m, a, v.mass));
  }
  CHECK(l1_set_contains(m, a, s.barycenter));

  // The L-infinity vertices carry negative coordinates: outside the L1 set.
  for (const ConditionalVertex& v : linf_condition(m, a).vertices) {
    CHECK(!l1_set_contains(m, a, v.mass));
  }
}

TEST_CASE("L1 conditional: admissible, equidistant, centered on L2") {
  InstanceStream stream(501);
  for (int trial = 0; trial < 200; ++trial) {
    const MassFunction m = stream.next_mass();
    const Frame& f = m.frame();
    const Subset a = stream.next_event(f);
    const auto [s_out, m_out] = outside_sum_max(m, a);
    (void)m_out;

    const ConditionalSimplex s = l1_condition(m, a);
    CHECK(s.vertices.size() == nonempty_subsets_of(a).size());
    const MassFunction l2 = l2_condition(m, a);

    Subset prev = 0;
    for (const ConditionalVertex& v : s.vertices) {
      CHECK(v.generator > prev);  // strictly ascending generators
      prev = v.generator;
      CHECK(v.admissible);
      CHECK(v.mass.is_admissible());
      double sum = 0.0;
      for (Subset x = 1; x < f.subset_count(); ++x) {
        if (!subset_contains(a, x)) CHECK(v.mass[x] == 0.0);
        sum += v.mass[x];
      }
      CHECK(close(sum, 1.0, 1e-12));
      // Every vertex at L1 distance exactly twice the displaced mass.
      CHECK(close(lp_distance(m, v.mass, Norm::kL1), 2.0 * s_out, 1e-12));
      CHECK(l1_set_contains(m, a, v.mass));
    }
    for (Subset x = 1; x < f.subset_count(); ++x) {
      CHECK(close(s.barycenter[x], l2[x], 1e-12));
    }
    CHECK(l1_barycenter_equals_l2(m, a));
  }
}

TEST_CASE("L-infinity conditional: case split, distances, barycenter") {
  InstanceStream stream(502);
  int simplex_cases = 0, point_cases = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const MassFunction m = stream.next_mass();
    const Frame& f = m.frame();
    const Subset a = stream.next_event(f);
    const auto [s_out, m_out] = outside_sum_max(m, a);
    const double k = static_cast<double>(nonempty_subsets_of(a).size());

    const ConditionalSimplex s = linf_condition(m, a);
    const MassFunction l2 = l2_condition(m, a);
    const double norm = linf_norm_value(m, a);

    if (m_out >= s_out / k) {
      ++simplex_cases;
      CHECK(s.kind == ConditionalKind::kLinfSimplex);
      CHECK(s.vertices.size() == static_cast<std::size_t>(k));
      CHECK(close(norm, m_out, 1e-12));
      for (const ConditionalVertex& v : s.vertices) {
        double sum = 0.0;
        for (Subset x = 1; x < f.subset_count(); ++x) {
          if (!subset_contains(a, x)) CHECK(v.mass[x] == 0.0);
          sum += v.mass[x];
        }
        CHECK(close(sum, 1.0, 1e-12));
        CHECK(v.admissible == v.mass.is_admissible());
        // The vertex deviates by the dominant outside mass everywhere except
        // at its own generator slot, which absorbs the leftover.  It is a
        // genuine minimizer exactly when that leftover stays within the
        // dominant mass; otherwise it overshoots the optimum (see the
        // dedicated dominant-mass test below).
        const double generator_dev = std::abs(s_out - (k - 1.0) * m_out);
        const double at_vertex = lp_distance(m, v.mass, Norm::kLinf);
        CHECK(close(at_vertex, std::max(m_out, generator_dev), 1e-12));
      }
    } else {
      ++point_cases;
      CHECK(s.kind == ConditionalKind::kLinfPoint);
      CHECK(s.vertices.empty());
      CHECK(close(norm, s_out / k, 1e-12));
    }
    // In both cases the barycenter is the L2 point and achieves the minimum.
    for (Subset x = 1; x < f.subset_count(); ++x) {
      CHECK(close(s.barycenter[x], l2[x], 1e-12));
    }
    CHECK(close(lp_distance(m, s.barycenter, Norm::kLinf), norm, 1e-12));
  }
  CHECK(simplex_cases >= 100);  // random masses mostly have a dominant chunk
  CHECK(simplex_cases + point_cases == 200);
}

TEST_CASE("L-infinity point case on constructed even-spread instances") {
  Rng rng(503);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(2));
    const Frame f = InstanceStream::frame_of(n);
    const Subset a = 0b011;
    std::vector<Subset> outside;
    for (Subset s = 1; s < f.subset_count(); ++s) {
      if (!subset_contains(a, s)) outside.push_back(s);
    }
    // Near-even weights across every outside subset keep the maximum well
    // under a third of their sum, forcing the single-point case.
    std::vector<double> dense(f.subset_count(), 0.0);
    double total = 0.0;
    for (Subset s : outside) {
      dense[s] = 0.9 + 0.2 * rng.uniform();
      total += dense[s];
    }
    const double inside = 0.3 + 0.4 * rng.uniform();  // scaled below
    for (Subset s : outside) dense[s] *= (1.0 - inside) / total;
    dense[0b001] = 0.5 * inside;
    dense[0b010] = 0.3 * inside;
    dense[0b011] = 0.2 * inside;
    const MassFunction m(f, std::move(dense));

    const auto [s_out, m_out] = outside_sum_max(m, a);
    REQUIRE(m_out < s_out / 3.0);
    const ConditionalSimplex s = linf_condition(m, a);
    CHECK(s.kind == ConditionalKind::kLinfPoint);
    CHECK(s.vertices.empty());
    const MassFunction l2 = l2_condition(m, a);
    for (Subset x = 1; x < f.subset_count(); ++x) {
      CHECK(close(s.barycenter[x], l2[x], 1e-12));
    }
    CHECK(close(linf_norm_value(m, a), s_out / 3.0, 1e-12));
    CHECK(close(lp_distance(m, s.barycenter, Norm::kLinf), s_out / 3.0, 1e-12));
  }
}

TEST_CASE("a dominant outside mass on a large event defeats the vertex form") {
  // Event with seven generators, a single half-weight focal element outside:
  // the simplex vertices push one coordinate six steps down and land at
  // distance 2.5, five times the true optimum of 0.5.  The barycenter still
  // attains the optimum, and the sampling oracle tells the two apart.
  const Frame f = InstanceStream::frame_of(4);
  const Subset a = 0b0111;
  const MassFunction m = make_mass(f, {{"x", 0.5}, {"w", 0.5}});

  const ConditionalSimplex s = linf_condition(m, a);
  CHECK(s.kind == ConditionalKind::kLinfSimplex);
  REQUIRE(s.vertices.size() == 7);
  CHECK(close(linf_norm_value(m, a), 0.5, 1e-12));
  for (const ConditionalVertex& v : s.vertices) {
    CHECK(close(lp_distance(m, v.mass, Norm::kLinf), 2.5, 1e-12));
  }
  CHECK(close(lp_distance(m, s.barycenter, Norm::kLinf), 0.5, 1e-12));

  std::vector<SignedMassFunction> vertex_candidates;
  for (const ConditionalVertex& v : s.vertices) {
    vertex_candidates.push_back(v.mass);
  }
  const NonImprovementReport refuted =
      sampled_nonimprovement(m, a, Norm::kLinf, vertex_candidates, 2000, 77);
  CHECK(!refuted.ok);
  CHECK(refuted.witness.has_value());

  const NonImprovementReport confirmed = sampled_nonimprovement(
      m, a, Norm::kLinf, {s.barycenter}, 2000, 77);
  CHECK(confirmed.ok);
}

TEST_CASE("conditioning is the identity once the core sits inside the event") {
  InstanceStream stream(504);
  for (int trial = 0; trial < 60; ++trial) {
    const MassFunction m = stream.next_mass();
    const Frame& f = m.frame();
    const Subset a = m.core() |
                     stream.next_event(f);  // anything enclosing the core
    const ConditionalSimplex l1 = l1_condition(m, a);
    const ConditionalSimplex li = linf_condition(m, a);
    const MassFunction l2 = l2_condition(m, a);
    for (Subset x = 1; x < f.subset_count(); ++x) {
      CHECK(close(l2[x], m[x], 1e-12));
      CHECK(close(l1.barycenter[x], m[x], 1e-12));
      CHECK(close(li.barycenter[x], m[x], 1e-12));
      for (const ConditionalVertex& v : l1.vertices) {
        CHECK(close(v.mass[x], m[x], 1e-12));
      }
      for (const ConditionalVertex& v : li.vertices) {
        CHECK(close(v.mass[x], m[x], 1e-12));
      }
    }
    CHECK(close(linf_norm_value(m, a), 0.0, 1e-12));
  }
}

TEST_CASE("narrowing twice equals narrowing once to the smaller event") {
  InstanceStream stream(505);
  for (int trial = 0; trial < 200; ++trial) {
    const MassFunction m = stream.next_mass();
    const Frame& f = m.frame();
    const Subset a = stream.next_event(f);
    // Random nonempty sub-event of a.
    Subset inner = 0;
    while (inner == 0) {
      for (Subset bit = 1; bit <= a; bit <<= 1) {
        if ((a & bit) && stream.rng().below(2) == 1) inner |= bit;
      }
    }
    const MassFunction once = l2_condition(m, inner);
    const MassFunction twice = l2_condition(l2_condition(m, a), inner);
    for (Subset x = 1; x < f.subset_count(); ++x) {
      CHECK(close(once[x], twice[x], 1e-12));
    }
  }
}

TEST_CASE("belief-coordinate conditioning on the ternary example") {
  const MassFunction m = ternary_example();
  const Subset a = 0b011;

  const SignedMassFunction l2b = l2_condition_belief_space(m, a);
  CHECK(close(l2b[0b001], 0.45, 1e-12));
  CHECK(close(l2b[0b010], 0.30, 1e-12));
  CHECK(close(l2b[0b011], 0.25, 1e-12));
  CHECK(l2b.is_admissible());

  // On a three-element frame the complement of a two-element event is a
  // singleton, which makes the two belief-coordinate conditionals coincide.
  const SignedMassFunction libary = linf_barycentre_belief_space(m, a);
  CHECK(close(libary[0b001], 0.45, 1e-12));
  CHECK(close(libary[0b010], 0.30, 1e-12));
  CHECK(close(libary[0b011], 0.25, 1e-12));

  // Independent confirmation by constrained least squares.
  const SignedMassFunction ls = belief_space_least_squares(m, a);
  for (Subset x = 1; x < m.frame().subset_count(); ++x) {
    CHECK(close(ls[x], l2b[x], 1e-9));
  }
}

TEST_CASE("belief-coordinate L2 conditional matches constrained least squares") {
  InstanceStream stream(506, 5);
  for (int trial = 0; trial < 80; ++trial) {
    const MassFunction m = stream.next_mass();
    const Subset a = stream.next_event(m.frame());
    const SignedMassFunction closed = l2_condition_belief_space(m, a);
    const SignedMassFunction ls = belief_space_least_squares(m, a);
    for (Subset x = 1; x < m.frame().subset_count(); ++x) {
      CHECK(close(closed[x], ls[x], 1e-9));
    }
  }
}

TEST_CASE("belief-coordinate conditionals: budget and identity properties") {
  InstanceStream stream(507);
  for (int trial = 0; trial < 150; ++trial) {
    const MassFunction m = stream.next_mass();
    const Frame& f = m.frame();
    const Subset a = stream.next_event(f);

    const SignedMassFunction l2b = l2_condition_belief_space(m, a);
    const SignedMassFunction libary = linf_barycentre_belief_space(m, a);
    double sum2 = 0.0, sumi = 0.0;
    for (Subset x = 1; x < f.subset_count(); ++x) {
      if (!subset_contains(a, x)) {
        CHECK(l2b[x] == 0.0);
        CHECK(libary[x] == 0.0);
      }
      sum2 += l2b[x];
      sumi += libary[x];
    }
    CHECK(close(sum2, 1.0, 1e-9));
    CHECK(close(sumi, 1.0, 1e-9));

    if (subset_contains(a, m.core())) {
      for (Subset x = 1; x < f.subset_count(); ++x) {
        CHECK(close(l2b[x], m[x], 1e-12));
        CHECK(close(libary[x], m[x], 1e-12));
      }
    }
  }
}
