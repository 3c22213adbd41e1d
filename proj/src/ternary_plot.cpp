#include "belcond/ternary_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace belcond {

namespace {

constexpr double kHeight = 0.86602540378443865;  // sqrt(3)/2

std::string fixed6(double v) {
  if (std::abs(v) < 5e-7) v = 0.0;  // keep "-0.000000" out of the output
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

TernaryScene ternary_scene(const MassFunction& m, Subset event,
                           bool include_belief_space) {
  if (m.frame().size() != 3) {
    throw WrongDimensions("ternary rendering needs a three-element frame");
  }
  if (subset_size(event) != 2) {
    throw WrongDimensions("ternary rendering needs a two-element event");
  }
  const std::vector<Subset> gens = nonempty_subsets_of(event);  // s1, s2, event

  auto chart = [&](const std::vector<double>& dense) {
    const double b = dense[gens[1]];
    const double c = dense[gens[2]];
    return std::pair<double, double>{b + 0.5 * c, c * kHeight};
  };
  TernaryScene scene{m.frame(), event, {}};
  auto add = [&](const std::string& label, const std::string& kind,
                 const std::vector<double>& dense, bool admissible) {
    const auto [x, y] = chart(dense);
    scene.points.push_back(PlotPoint{label, kind, x, y, admissible});
  };

  for (Subset g : gens) {
    std::vector<double> corner(m.frame().subset_count(), 0.0);
    corner[g] = 1.0;
    add("corner:" + m.frame().subset_key(g), "reference", corner, true);
  }

  const ConditionalSimplex l1 = l1_condition(m, event);
  for (const ConditionalVertex& v : l1.vertices) {
    add("l1:" + m.frame().subset_key(v.generator), "l1-vertex",
        v.mass.dense(), v.admissible);
  }

  add("l2", "l2-point", l2_condition(m, event).dense(), true);

  const ConditionalSimplex linf = linf_condition(m, event);
  if (linf.kind == ConditionalKind::kLinfSimplex) {
    for (const ConditionalVertex& v : linf.vertices) {
      add("linf:" + m.frame().subset_key(v.generator), "linf-vertex",
          v.mass.dense(), v.admissible);
    }
  } else {
    add("linf", "linf-point", linf.barycenter.dense(),
        linf.barycenter.is_admissible());
  }

  if (include_belief_space) {
    const SignedMassFunction l2b = l2_condition_belief_space(m, event);
    add("l2-belief", "l2-belief", l2b.dense(), l2b.is_admissible());
    const SignedMassFunction linfb = linf_barycentre_belief_space(m, event);
    add("linf-bary-belief", "linf-bary-belief", linfb.dense(),
        linfb.is_admissible());
  }
  return scene;
}

std::string scene_to_csv(const TernaryScene& scene) {
  std::string out = "label,kind,x,y,admissible\n";
  for (const PlotPoint& p : scene.points) {
    out += p.label + "," + p.kind + "," + fixed6(p.x) + "," + fixed6(p.y) +
           "," + (p.admissible ? "true" : "false") + "\n";
  }
  return out;
}

std::string scene_to_svg(const TernaryScene& scene) {
  // Fit all points with a margin; fixed canvas keeps output deterministic.
  double min_x = 0.0, max_x = 1.0, min_y = 0.0, max_y = kHeight;
  for (const PlotPoint& p : scene.points) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double margin = 0.08 * std::max(max_x - min_x, max_y - min_y);
  min_x -= margin;
  max_x += margin;
  min_y -= margin;
  max_y += margin;
  const double w = 640.0;
  const double scale = w / (max_x - min_x);
  const double h = (max_y - min_y) * scale;
  auto px = [&](double x) { return (x - min_x) * scale; };
  auto py = [&](double y) { return h - (y - min_y) * scale; };

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    fixed6(w) + "\" height=\"" + fixed6(h) + "\" viewBox=\"0 0 " +
                    fixed6(w) + " " + fixed6(h) + "\">\n";
  auto polygon = [&](const std::string& kind, const std::string& color) {
    std::string pts;
    for (const PlotPoint& p : scene.points) {
      if (p.kind != kind) continue;
      if (!pts.empty()) pts += ' ';
      pts += fixed6(px(p.x)) + "," + fixed6(py(p.y));
    }
    if (!pts.empty()) {
      svg += "  <polygon points=\"" + pts + "\" fill=\"none\" stroke=\"" +
             color + "\" stroke-width=\"1.5\"/>\n";
    }
  };
  polygon("reference", "#888888");
  polygon("l1-vertex", "#cc2222");
  polygon("linf-vertex", "#22aa44");

  for (const PlotPoint& p : scene.points) {
    std::string color = "#444444";
    if (p.kind == "l1-vertex") color = "#cc2222";
    if (p.kind == "l2-point") color = "#cc2222";
    if (p.kind == "linf-vertex" || p.kind == "linf-point") color = "#22aa44";
    if (p.kind == "l2-belief" || p.kind == "linf-bary-belief") {
      color = "#dd66aa";
    }
    const bool square = p.kind == "l2-point" || p.kind == "l2-belief" ||
                        p.kind == "linf-bary-belief";
    if (square) {
      svg += "  <rect x=\"" + fixed6(px(p.x) - 4) + "\" y=\"" +
             fixed6(py(p.y) - 4) + "\" width=\"8\" height=\"8\" fill=\"" +
             color + "\"/>\n";
    } else {
      svg += "  <circle cx=\"" + fixed6(px(p.x)) + "\" cy=\"" +
             fixed6(py(p.y)) + "\" r=\"4\" fill=\"" + color + "\"/>\n";
    }
    svg += "  <text x=\"" + fixed6(px(p.x) + 6) + "\" y=\"" +
           fixed6(py(p.y) - 6) + "\" font-size=\"11\" fill=\"#222222\">" +
           p.label + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace belcond
