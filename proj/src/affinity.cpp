#include "shapeflow/affinity.hpp"

#include <cmath>

namespace shapeflow {

AffineMap orthogonal_affinity(Direction axis, double ratio) {
    // u u^T + ratio * (u_perp u_perp^T) for the unit axis vector u.
    const Vec2 u = axis.unit();
    const Vec2 w = u.perp();
    AffineMap m;
    m.linear.m00 = u.x * u.x + ratio * w.x * w.x;
    m.linear.m01 = u.x * u.y + ratio * w.x * w.y;
    m.linear.m10 = m.linear.m01;
    m.linear.m11 = u.y * u.y + ratio * w.y * w.y;
    return m;
}

AffineMap squash_map(const CircumRect& rect) {
    if (rect.b - rect.a <= 1e-12 * rect.b) return AffineMap::identity();
    return orthogonal_affinity(rect.direction, rect.ratio());
}

AffineMap lambda_map(const CircumRect& rect, double lambda) {
    if (!(lambda > 0)) throw InvalidParameter("lambda must be positive");
    const double ratio = rect.ratio() / lambda;
    if (std::abs(ratio - 1.0) <= 1e-12) return AffineMap::identity();
    return orthogonal_affinity(rect.direction, ratio);
}

ConvexPolygon apply_map(const AffineMap& map, const ConvexPolygon& poly) {
    std::vector<Vec2> image;
    image.reserve(poly.size());
    for (const Vec2& v : poly.vertices()) image.push_back(map(v));
    return ConvexPolygon::make(std::move(image));
}

ConvexPolygon normalize(const ConvexPolygon& poly) {
    const Vec2 c = poly.centroid();
    const double inv = 1.0 / poly.diameter();
    std::vector<Vec2> out;
    out.reserve(poly.size());
    for (const Vec2& v : poly.vertices()) out.push_back((v - c) * inv);
    return ConvexPolygon::make(std::move(out));
}

}  // namespace shapeflow
