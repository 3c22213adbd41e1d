#pragma once

#include <string>

#include "belcond/lp_conditioning.hpp"

namespace belcond {

// A point of the two-dimensional rendering of the conditioning simplex for a
// two-element event on a three-element frame.  Coordinates come from the
// affine chart sending the generators (first singleton, second singleton,
// event) to (0,0), (1,0), (1/2, sqrt(3)/2).
struct PlotPoint {
  std::string label;
  std::string kind;
  double x = 0.0;
  double y = 0.0;
  bool admissible = true;
};

struct TernaryScene {
  Frame frame;
  Subset event = kEmptySet;
  std::vector<PlotPoint> points;
};

// Builds the scene: the simplex corners (kind "reference"), the L1 vertices
// ("l1-vertex"), the L2 point ("l2-point"), the L-infinity solution
// ("linf-vertex" rows, or one "linf-point" row when it degenerates), and,
// when requested, the belief-coordinate points ("l2-belief" and
// "linf-bary-belief").  Throws WrongDimensions unless the frame has three
// elements and the event two.
TernaryScene ternary_scene(const MassFunction& m, Subset event,
                           bool include_belief_space);

// CSV with header "label,kind,x,y,admissible"; coordinates use six decimals.
std::string scene_to_csv(const TernaryScene& scene);

// A minimal static SVG rendering of the same scene.
std::string scene_to_svg(const TernaryScene& scene);

}  // namespace belcond
