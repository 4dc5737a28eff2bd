#ifndef SHAPEFLOW_IO_HPP
#define SHAPEFLOW_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "shapeflow/dynamics.hpp"
#include "shapeflow/scan.hpp"

namespace shapeflow {

struct ParseError : Error {
    using Error::Error;
};

/// One vertex per line as "x y"; blank lines and '#' comments ignored.
ConvexPolygon parse_polygon_text(std::string_view text);

/// JSON array of [x, y] pairs.
ConvexPolygon parse_polygon_json(std::string_view text);

/// Dispatches on content: a leading '[' means JSON, otherwise text.
ConvexPolygon read_polygon_file(const std::string& path);

std::string format_polygon_text(const ConvexPolygon& poly);

/// Orbit CSV: step,x_or_alpha,beta,diameter_pre_norm,min_ratio,
/// rect_multiplicity,dist_to_prev. Angles in degrees; for triangles the
/// second column is the parameter of the similarity class instead of
/// alpha. The cycle report goes into '#'-prefixed footer lines.
std::string orbit_csv(const Orbit& orb, const CycleReport& cycle, double lambda = 1.0);

/// Portrait CSV: mesh_alpha,mesh_beta,orbit_index,step,alpha,beta in
/// degrees, 9 significant digits.
std::string portrait_csv(const PhasePortrait& portrait);

/// Scalar triangle-map trajectory: step,x,abs_err columns.
std::string triangle_map_csv(const std::vector<double>& xs, double x0);

/// SVG with one path element per polygon, drawn in a horizontal strip.
/// The mathematical y-up frame maps to the SVG y-down viewport by the
/// single flip y -> -y applied when path data is emitted.
std::string svg_polygon_strip(const std::vector<ConvexPolygon>& polys);

/// SVG of a polygon with overlays (extremal rectangles drawn as paths).
std::string svg_polygon_with_rects(const ConvexPolygon& poly,
                                   const std::vector<CircumRect>& rects);

/// SVG scatter of portrait points in the (alpha, beta) plane, degrees.
std::string svg_portrait_scatter(const PhasePortrait& portrait);

void write_file(const std::string& path, std::string_view content);

}  // namespace shapeflow

#endif
