#ifndef SHAPEFLOW_AFFINITY_HPP
#define SHAPEFLOW_AFFINITY_HPP

#include "shapeflow/calipers.hpp"
#include "shapeflow/geometry.hpp"

namespace shapeflow {

struct Mat2 {
    double m00 = 1.0, m01 = 0.0;
    double m10 = 0.0, m11 = 1.0;

    Vec2 apply(Vec2 v) const { return {m00 * v.x + m01 * v.y, m10 * v.x + m11 * v.y}; }
    double det() const { return m00 * m11 - m01 * m10; }
};

struct AffineMap {
    Mat2 linear;
    Vec2 translation{0.0, 0.0};

    Vec2 operator()(Vec2 v) const { return linear.apply(v) + translation; }
    double det() const { return linear.det(); }

    static AffineMap identity() { return {}; }
};

/// Orthogonal affinity with axis through the origin in direction `axis`:
/// lengths along the axis are preserved, distances from it scale by ratio.
AffineMap orthogonal_affinity(Direction axis, double ratio);

/// The squash map of a circumscribed rectangle: axis parallel to the short
/// sides, ratio a/b, so the rectangle maps to a square of side a. The
/// identity when the rectangle is a square.
AffineMap squash_map(const CircumRect& rect);

/// One-parameter generalization of the squash map: same axis, ratio
/// (a/b)/lambda, mapping the rectangle to an a x a/lambda rectangle
/// (similar to an a x lambda*a one). lambda = 1 recovers squash_map.
AffineMap lambda_map(const CircumRect& rect, double lambda);

/// Vertex-wise image, re-validated as convex and re-oriented if needed.
ConvexPolygon apply_map(const AffineMap& map, const ConvexPolygon& poly);

/// Translate the centroid to the origin and scale the diameter to 1.
ConvexPolygon normalize(const ConvexPolygon& poly);

}  // namespace shapeflow

#endif
