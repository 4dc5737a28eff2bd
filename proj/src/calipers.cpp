#include "shapeflow/calipers.hpp"

#include <algorithm>
#include <cmath>

namespace shapeflow {

namespace {

constexpr double kAngleEps = 1e-12;

double half_pi_wrap(double theta) {
    double a = std::fmod(theta, kPi / 2);
    if (a < 0) a += kPi / 2;
    if (a >= kPi / 2) a = 0.0;
    return a;
}

}  // namespace

CircumRect circumscribed_rectangle(const ConvexPolygon& poly, Direction d) {
    const Vec2 u = d.unit();
    const Vec2 w = u.perp();

    const auto& vs = poly.vertices();
    double smin = vs[0].dot(u), smax = smin, tmin = vs[0].dot(w), tmax = tmin;
    for (const Vec2& v : vs) {
        smin = std::min(smin, v.dot(u));
        smax = std::max(smax, v.dot(u));
        tmin = std::min(tmin, v.dot(w));
        tmax = std::max(tmax, v.dot(w));
    }
    const double wu = smax - smin;  // extent along u
    const double ww = tmax - tmin;  // extent along w

    CircumRect rect;
    if (wu <= ww) {
        rect.a = wu;
        rect.b = ww;
        rect.direction = d;
    } else {
        rect.a = ww;
        rect.b = wu;
        rect.direction = d.perp();
    }
    if (std::abs(wu - ww) <= kAngleEps * std::max(wu, ww))
        rect.direction = Direction(half_pi_wrap(d.theta()));

    const Vec2 c00 = u * smin + w * tmin;
    const Vec2 c10 = u * smax + w * tmin;
    const Vec2 c11 = u * smax + w * tmax;
    const Vec2 c01 = u * smin + w * tmax;
    rect.corners = {c00, c10, c11, c01};

    // Contact vertices per side: bottom, right, top, left in (u, w) frame.
    const double tol = 1e-10 * std::max(poly.scale(), 1e-300);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const double s = vs[i].dot(u), t = vs[i].dot(w);
        if (t - tmin <= tol) rect.contacts[0].push_back(static_cast<int>(i));
        if (smax - s <= tol) rect.contacts[1].push_back(static_cast<int>(i));
        if (tmax - t <= tol) rect.contacts[2].push_back(static_cast<int>(i));
        if (s - smin <= tol) rect.contacts[3].push_back(static_cast<int>(i));
    }
    return rect;
}

std::vector<Direction> candidate_directions(const ConvexPolygon& poly) {
    std::vector<double> thetas;
    thetas.reserve(2 * poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Direction edge_dir = Direction::of_vector(poly.edge(i));
        thetas.push_back(edge_dir.perp().theta());  // edge normal
        thetas.push_back(edge_dir.theta());         // normal rotated by pi/2
    }
    std::sort(thetas.begin(), thetas.end());
    std::vector<Direction> out;
    for (double t : thetas) {
        if (!out.empty() && t - out.back().theta() <= kAngleEps) continue;
        if (!out.empty() && kPi - t + out.front().theta() <= kAngleEps) continue;
        out.push_back(Direction(t));
    }
    return out;
}

ExtremalSet extremal_rectangles(const ConvexPolygon& poly, double tol) {
    if (!(tol > 0)) throw InvalidParameter("ratio tolerance must be positive");

    // A rectangle is determined by its orientation mod pi/2; fold the
    // candidates so each rectangle is evaluated once.
    std::vector<double> folded;
    for (const Direction& d : candidate_directions(poly)) folded.push_back(half_pi_wrap(d.theta()));
    std::sort(folded.begin(), folded.end());
    std::vector<double> unique;
    for (double t : folded) {
        if (!unique.empty() && t - unique.back() <= kAngleEps) continue;
        if (!unique.empty() && kPi / 2 - t + unique.front() <= kAngleEps) continue;
        unique.push_back(t);
    }

    std::vector<CircumRect> rects;
    rects.reserve(unique.size());
    double min_ratio = 2.0, max_ratio = 0.0;
    for (double t : unique) {
        rects.push_back(circumscribed_rectangle(poly, Direction(t)));
        min_ratio = std::min(min_ratio, rects.back().ratio());
        max_ratio = std::max(max_ratio, rects.back().ratio());
    }

    ExtremalSet set;
    set.min_ratio = min_ratio;
    for (CircumRect& r : rects) {
        if (r.ratio() <= min_ratio + tol) set.rects.push_back(std::move(r));
    }
    std::sort(set.rects.begin(), set.rects.end(),
              [](const CircumRect& l, const CircumRect& r) {
                  return l.direction.theta() < r.direction.theta();
              });

    if (max_ratio - min_ratio < tol) {
        double grid_min = 2.0, grid_max = 0.0;
        for (const auto& [d, ratio] : ratio_profile(poly, 720)) {
            grid_min = std::min(grid_min, ratio);
            grid_max = std::max(grid_max, ratio);
        }
        set.all_directions_flag = grid_max - grid_min < tol;
    }
    return set;
}

std::vector<std::pair<Direction, double>> ratio_profile(const ConvexPolygon& poly, int n) {
    if (n < 4) throw InvalidParameter("ratio profile needs at least 4 samples");
    std::vector<std::pair<Direction, double>> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const Direction d(kPi * k / n);
        const double w1 = width(poly, d);
        const double w2 = width(poly, d.perp());
        out.emplace_back(d, std::min(w1, w2) / std::max(w1, w2));
    }
    return out;
}

}  // namespace shapeflow
