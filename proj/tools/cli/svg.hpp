#ifndef CLARR_CLI_SVG_HPP
#define CLARR_CLI_SVG_HPP

#include <string>
#include <string_view>

#include "clarr/arrangement.hpp"
#include "clarr/rational.hpp"

namespace clarr::cli {

/// Affine window in the chart z = 1.
struct Window {
  Rational xmin;
  Rational xmax;
  Rational ymin;
  Rational ymax;
};

/// "xmin,xmax,ymin,ymax" with rational entries such as -25/2.
Window parse_window(std::string_view text);

/// SVG 1.1 drawing of the affine part of the arrangement: one element per
/// visible component (a segment for a line, an ellipse or sampled path for a
/// conic), clipped to the window. Throws kDegenerateWindow on an empty window.
std::string render_svg(const Arrangement& arrangement, const Window& window,
                       double pixels_per_unit = 20.0);

}  // namespace clarr::cli

#endif  // CLARR_CLI_SVG_HPP
