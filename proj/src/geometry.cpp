#include "shapeflow/geometry.hpp"

#include <algorithm>
#include <limits>

namespace shapeflow {

namespace {

double cross3(Vec2 o, Vec2 a, Vec2 b) { return (a - o).cross(b - o); }

double bbox_diagonal(const std::vector<Vec2>& pts) {
    double xmin = pts[0].x, xmax = pts[0].x, ymin = pts[0].y, ymax = pts[0].y;
    for (const Vec2& p : pts) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    return std::hypot(xmax - xmin, ymax - ymin);
}

bool lex_less(Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

}  // namespace

ConvexPolygon ConvexPolygon::make(std::vector<Vec2> points) {
    if (points.size() < 3) throw DegenerateInput("need at least 3 points");
    for (const Vec2& p : points) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw DegenerateInput("non-finite coordinate");
    }

    std::sort(points.begin(), points.end(), lex_less);
    // Scale-invariant collinearity threshold on the doubled triangle area.
    const double diag = bbox_diagonal(points);
    if (diag == 0.0) throw DegenerateInput("all points coincide");
    const double eps = 1e-12 * diag * diag;

    // Andrew monotone chain; cross <= eps pops collinear vertices.
    const std::size_t n = points.size();
    std::vector<Vec2> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross3(hull[k - 2], hull[k - 1], points[i]) <= eps) --k;
        hull[k++] = points[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross3(hull[k - 2], hull[k - 1], points[i]) <= eps) --k;
        hull[k++] = points[i];
    }
    hull.resize(k - 1);  // last point equals the first

    if (hull.size() < 3) throw DegenerateInput("hull has fewer than 3 vertices");
    return ConvexPolygon(std::move(hull));
}

ConvexPolygon make_convex_polygon(std::vector<Vec2> points) {
    return ConvexPolygon::make(std::move(points));
}

double ConvexPolygon::area() const {
    double twice = 0.0;
    for (std::size_t i = 0; i < verts_.size(); ++i) twice += vertex(i).cross(vertex(i + 1));
    return 0.5 * twice;
}

Vec2 ConvexPolygon::centroid() const {
    double twice_area = 0.0;
    Vec2 acc{0.0, 0.0};
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        const Vec2 a = vertex(i), b = vertex(i + 1);
        const double w = a.cross(b);
        twice_area += w;
        acc = acc + (a + b) * w;
    }
    return acc * (1.0 / (3.0 * twice_area));
}

double ConvexPolygon::diameter() const {
    double best = 0.0;
    for (std::size_t i = 0; i < verts_.size(); ++i)
        for (std::size_t j = i + 1; j < verts_.size(); ++j)
            best = std::max(best, (verts_[i] - verts_[j]).norm_sq());
    return std::sqrt(best);
}

double ConvexPolygon::scale() const { return bbox_diagonal(verts_); }

bool ConvexPolygon::contains(Vec2 p, double tol) const {
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        if (edge(i).cross(p - vertex(i)) < -tol) return false;
    }
    return true;
}

double support(const ConvexPolygon& poly, Vec2 u) {
    double best = -std::numeric_limits<double>::infinity();
    for (const Vec2& v : poly.vertices()) best = std::max(best, v.dot(u));
    return best;
}

double width(const ConvexPolygon& poly, Direction d) {
    const Vec2 u = d.unit();
    return support(poly, u) + support(poly, -u);
}

double chord_length_at_offset(const ConvexPolygon& poly, Direction d, double offset) {
    const Vec2 u = d.unit();
    const Vec2 w = u.perp();
    const double eps = 1e-12 * poly.scale();
    double smin = std::numeric_limits<double>::infinity();
    double smax = -smin;
    bool hit = false;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 p = poly.vertex(i), q = poly.vertex(i + 1);
        const double a = p.dot(w) - offset, b = q.dot(w) - offset;
        if (std::abs(a) <= eps) {
            smin = std::min(smin, p.dot(u));
            smax = std::max(smax, p.dot(u));
            hit = true;
        }
        if ((a < -eps && b > eps) || (a > eps && b < -eps)) {
            const double s = p.dot(u) + (q.dot(u) - p.dot(u)) * a / (a - b);
            smin = std::min(smin, s);
            smax = std::max(smax, s);
            hit = true;
        }
    }
    return hit ? std::max(0.0, smax - smin) : 0.0;
}

double longest_chord_length(const ConvexPolygon& poly, Direction d) {
    // The chord length is a concave piecewise-linear function of the
    // transverse offset, so the maximum sits at a vertex offset.
    const Vec2 w = d.unit().perp();
    double best = 0.0;
    for (const Vec2& v : poly.vertices())
        best = std::max(best, chord_length_at_offset(poly, d, v.dot(w)));
    return best;
}

namespace {

// Vertex list rotated so it starts at the lowest (then leftmost) vertex;
// from there the CCW edge angles are increasing in [0, 2*pi).
std::vector<Vec2> from_bottom_most(const std::vector<Vec2>& verts) {
    std::size_t start = 0;
    for (std::size_t i = 1; i < verts.size(); ++i) {
        if (verts[i].y < verts[start].y ||
            (verts[i].y == verts[start].y && verts[i].x < verts[start].x))
            start = i;
    }
    std::vector<Vec2> out(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) out[i] = verts[(start + i) % verts.size()];
    return out;
}

double edge_angle(Vec2 e) {
    double a = std::atan2(e.y, e.x);
    if (a < 0) a += 2 * kPi;
    return a;
}

}  // namespace

ConvexPolygon central_symmetral(const ConvexPolygon& poly) {
    // Minkowski sum K + (-K) by the sorted edge-vector merge, halved.
    std::vector<Vec2> a = from_bottom_most(poly.vertices());
    std::vector<Vec2> neg;
    neg.reserve(poly.size());
    for (const Vec2& v : poly.vertices()) neg.push_back(-v);
    std::vector<Vec2> b = from_bottom_most(neg);

    const std::size_t n = a.size(), m = b.size();
    std::vector<Vec2> sum;
    sum.reserve(n + m);
    Vec2 cur = a[0] + b[0];
    std::size_t i = 0, j = 0;
    while (i < n || j < m) {
        sum.push_back(cur);
        if (j >= m) {
            cur = cur + (a[(i + 1) % n] - a[i]);
            ++i;
        } else if (i >= n) {
            cur = cur + (b[(j + 1) % m] - b[j]);
            ++j;
        } else {
            const Vec2 ea = a[(i + 1) % n] - a[i];
            const Vec2 eb = b[(j + 1) % m] - b[j];
            if (edge_angle(ea) <= edge_angle(eb)) {
                cur = cur + ea;
                ++i;
            } else {
                cur = cur + eb;
                ++j;
            }
        }
    }
    for (Vec2& v : sum) v = v * 0.5;
    return ConvexPolygon::make(std::move(sum));
}

bool has_fourfold_symmetry(const ConvexPolygon& poly, double tol) {
    const auto& vs = poly.vertices();
    auto matches = [&](Vec2 target) {
        for (const Vec2& w : vs)
            if ((w - target).norm() <= tol) return true;
        return false;
    };
    for (const Vec2& v : vs) {
        if (!matches(-v)) throw NotOriginSymmetric("polygon is not origin-symmetric");
    }
    for (const Vec2& v : vs) {
        if (!matches(v.perp())) return false;
    }
    return true;
}

}  // namespace shapeflow
