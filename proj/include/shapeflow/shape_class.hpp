#ifndef SHAPEFLOW_SHAPE_CLASS_HPP
#define SHAPEFLOW_SHAPE_CLASS_HPP

#include "shapeflow/affinity.hpp"
#include "shapeflow/geometry.hpp"

namespace shapeflow {

/// A similarity class represented by a canonical polygon: centroid at the
/// origin, diameter 1, pose fixed over a finite candidate set (every vertex
/// anchored to the positive x-axis, with and without reflection) by taking
/// the lexicographically smallest vertex stream on a 1e-9 grid.
struct ShapeClass {
    ConvexPolygon rep;
    int n_vertices = 0;
};

ShapeClass canonicalize(const ConvexPolygon& poly);

/// Hausdorff distance between the diameter-normalized bodies, minimized
/// over vertex-to-vertex rotational alignments and both reflections, with
/// golden-section refinement around each alignment candidate. A symmetric
/// pseudometric; zero (up to the numerical floor) iff the inputs are
/// similar.
double shape_distance(const ConvexPolygon& lhs, const ConvexPolygon& rhs);

bool is_similar(const ConvexPolygon& lhs, const ConvexPolygon& rhs, double tol);

/// Parameter of a triangle in the canonical family with vertices similar
/// to (0,0), (1,0), (x, lambda): x in (0, 1/2], lambda = altitude / base.
struct TriangleParam {
    double x = 0.0;
    double lambda = 1.0;
};

/// Extracts x for a triangle that has a side whose opposite altitude is
/// lambda times that side's length (within 1e-9 on the ratio). The foot of
/// the altitude is reflected into (0, 1/2] if needed.
TriangleParam triangle_param(const ConvexPolygon& tri, double lambda);

/// Hausdorff distance between two convex polygons as point sets.
double hausdorff_distance(const ConvexPolygon& lhs, const ConvexPolygon& rhs);

/// Mirror image across the x-axis, as a valid (counterclockwise) polygon.
ConvexPolygon mirror_x(const ConvexPolygon& poly);

/// Polygon rotated about the origin by the given angle.
ConvexPolygon rotated(const ConvexPolygon& poly, double angle);

}  // namespace shapeflow

#endif
