#include "shapeflow/shape_class.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace shapeflow {

namespace {

constexpr double kStreamGrid = 1e-9;

ConvexPolygon transformed(const ConvexPolygon& poly, double angle, bool reflect) {
    const double c = std::cos(angle), s = std::sin(angle);
    std::vector<Vec2> out;
    out.reserve(poly.size());
    for (Vec2 v : poly.vertices()) {
        if (reflect) v.y = -v.y;
        out.push_back({c * v.x - s * v.y, s * v.x + c * v.y});
    }
    return ConvexPolygon::make(std::move(out));
}

// Vertex stream rounded onto the comparison grid, starting at `anchor` and
// proceeding counterclockwise.
std::vector<std::int64_t> rounded_stream(const ConvexPolygon& poly, std::size_t anchor) {
    std::vector<std::int64_t> key;
    key.reserve(2 * poly.size());
    for (std::size_t k = 0; k < poly.size(); ++k) {
        const Vec2 v = poly.vertex(anchor + k);
        key.push_back(std::llround(v.x / kStreamGrid));
        key.push_back(std::llround(v.y / kStreamGrid));
    }
    return key;
}

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 ab = b - a;
    const double len_sq = ab.norm_sq();
    double t = len_sq > 0 ? (p - a).dot(ab) / len_sq : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return (p - (a + ab * t)).norm();
}

double point_polygon_distance(Vec2 p, const ConvexPolygon& poly) {
    if (poly.contains(p)) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < poly.size(); ++i)
        best = std::min(best, point_segment_distance(p, poly.vertex(i), poly.vertex(i + 1)));
    return best;
}

double directed_hausdorff(const ConvexPolygon& from, const ConvexPolygon& to) {
    // The farthest point of a convex set from another convex set is a vertex.
    double worst = 0.0;
    for (const Vec2& v : from.vertices()) worst = std::max(worst, point_polygon_distance(v, to));
    return worst;
}

double aligned_distance(const ConvexPolygon& fixed, const ConvexPolygon& moving, double angle) {
    const ConvexPolygon img = rotated(moving, angle);
    return hausdorff_distance(fixed, img);
}

// Golden-section minimization of the alignment distance on [lo, hi],
// reporting the best value seen at any probe.
double refine_rotation(const ConvexPolygon& fixed, const ConvexPolygon& moving, double lo,
                       double hi) {
    constexpr double kInvPhi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = aligned_distance(fixed, moving, x1);
    double f2 = aligned_distance(fixed, moving, x2);
    double best = std::min(f1, f2);
    for (int it = 0; it < 40 && b - a > 1e-12; ++it) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = aligned_distance(fixed, moving, x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = aligned_distance(fixed, moving, x2);
        }
        best = std::min(best, std::min(f1, f2));
    }
    return best;
}

double shape_distance_ordered(const ConvexPolygon& a, const ConvexPolygon& b) {
    // Vertex-to-vertex alignments catch exact similarity overlays; a
    // uniform rotation grid catches minima far from any vertex alignment,
    // which do occur for dissimilar pairs. The best few candidates get a
    // golden-section polish.
    constexpr int kGrid = 720;
    constexpr int kRefine = 8;
    const double window = 2.0 * kPi / 180.0;
    const ConvexPolygon na = normalize(a);
    double best = std::numeric_limits<double>::infinity();
    for (bool reflect : {false, true}) {
        const ConvexPolygon nb = reflect ? mirror_x(normalize(b)) : normalize(b);
        std::vector<std::pair<double, double>> scored;  // (distance, angle)
        scored.reserve(na.size() * nb.size() + kGrid);
        for (const Vec2& va : na.vertices()) {
            for (const Vec2& vb : nb.vertices()) {
                const double phi = std::atan2(va.y, va.x) - std::atan2(vb.y, vb.x);
                scored.emplace_back(aligned_distance(na, nb, phi), phi);
            }
        }
        for (int k = 0; k < kGrid; ++k) {
            const double phi = 2.0 * kPi * k / kGrid;
            scored.emplace_back(aligned_distance(na, nb, phi), phi);
        }
        std::sort(scored.begin(), scored.end());
        best = std::min(best, scored.front().first);
        for (std::size_t i = 0; i < std::min<std::size_t>(kRefine, scored.size()); ++i) {
            best = std::min(best, refine_rotation(na, nb, scored[i].second - window,
                                                  scored[i].second + window));
        }
    }
    return best;
}

}  // namespace

ConvexPolygon mirror_x(const ConvexPolygon& poly) {
    std::vector<Vec2> out;
    out.reserve(poly.size());
    for (const Vec2& v : poly.vertices()) out.push_back({v.x, -v.y});
    return ConvexPolygon::make(std::move(out));
}

ConvexPolygon rotated(const ConvexPolygon& poly, double angle) {
    return transformed(poly, angle, false);
}

double hausdorff_distance(const ConvexPolygon& lhs, const ConvexPolygon& rhs) {
    return std::max(directed_hausdorff(lhs, rhs), directed_hausdorff(rhs, lhs));
}

ShapeClass canonicalize(const ConvexPolygon& poly) {
    const ConvexPolygon base = normalize(poly);
    bool have_best = false;
    std::vector<std::int64_t> best_key;
    std::vector<Vec2> best_verts;

    std::vector<std::int64_t> key;
    for (bool reflect : {false, true}) {
        // mirror_x rebuilds the hull, so the reflected copy is CCW again.
        const ConvexPolygon oriented = reflect ? mirror_x(base) : base;
        const std::vector<Vec2>& vs = oriented.vertices();
        const std::size_t n = vs.size();
        for (std::size_t i = 0; i < n; ++i) {
            const double c = std::cos(-std::atan2(vs[i].y, vs[i].x));
            const double s = std::sin(-std::atan2(vs[i].y, vs[i].x));
            std::vector<Vec2> posed(n);
            key.clear();
            for (std::size_t k = 0; k < n; ++k) {
                const Vec2 v = vs[(i + k) % n];
                posed[k] = {c * v.x - s * v.y, s * v.x + c * v.y};
                key.push_back(std::llround(posed[k].x / kStreamGrid));
                key.push_back(std::llround(posed[k].y / kStreamGrid));
            }
            if (!have_best || key < best_key) {
                have_best = true;
                best_key = key;
                best_verts = std::move(posed);
            }
        }
    }
    ConvexPolygon rep = ConvexPolygon::make(std::move(best_verts));
    const int n = static_cast<int>(rep.size());
    return ShapeClass{std::move(rep), n};
}

double shape_distance(const ConvexPolygon& lhs, const ConvexPolygon& rhs) {
    // Evaluate in a canonical argument order so the result is symmetric
    // bitwise.
    auto order_key = [](const ConvexPolygon& p) {
        const ConvexPolygon n = normalize(p);
        std::vector<std::int64_t> key{static_cast<std::int64_t>(n.size())};
        auto stream = rounded_stream(n, 0);
        key.insert(key.end(), stream.begin(), stream.end());
        return key;
    };
    if (order_key(lhs) <= order_key(rhs)) return shape_distance_ordered(lhs, rhs);
    return shape_distance_ordered(rhs, lhs);
}

bool is_similar(const ConvexPolygon& lhs, const ConvexPolygon& rhs, double tol) {
    if (!(tol > 0)) throw InvalidParameter("similarity tolerance must be positive");
    return shape_distance(lhs, rhs) < tol;
}

TriangleParam triangle_param(const ConvexPolygon& tri, double lambda) {
    if (tri.size() != 3) throw NotATriangle("triangle_param needs a 3-gon");
    if (!(lambda > 0)) throw InvalidParameter("lambda must be positive");

    const double twice_area = 2.0 * tri.area();
    double best_err = std::numeric_limits<double>::infinity();
    std::size_t base = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        const double side = tri.edge(i).norm();
        const double altitude = twice_area / side;
        const double err = std::abs(altitude / side - lambda);
        if (err < best_err) {
            best_err = err;
            base = i;
        }
    }
    if (best_err > 1e-9)
        throw NotInCanonicalFamily("no side has altitude/base ratio lambda");

    const Vec2 a = tri.vertex(base);
    const Vec2 e = tri.edge(base);
    const Vec2 apex = tri.vertex(base + 2);
    double x = (apex - a).dot(e) / e.norm_sq();
    if (x > 0.5) x = 1.0 - x;
    if (!(x > 0.0)) throw NotInCanonicalFamily("altitude foot falls outside the base");
    return TriangleParam{x, lambda};
}

}  // namespace shapeflow
