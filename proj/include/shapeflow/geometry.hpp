#ifndef SHAPEFLOW_GEOMETRY_HPP
#define SHAPEFLOW_GEOMETRY_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "shapeflow/errors.hpp"

namespace shapeflow {

inline constexpr double kPi = 3.14159265358979323846;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator-() const { return {-x, -y}; }

    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double cross(Vec2 o) const { return x * o.y - y * o.x; }
    double norm() const { return std::hypot(x, y); }
    double norm_sq() const { return x * x + y * y; }

    // Counterclockwise quarter turn.
    Vec2 perp() const { return {-y, x}; }
    Vec2 rotated(double angle) const {
        const double c = std::cos(angle), s = std::sin(angle);
        return {c * x - s * y, s * x + c * y};
    }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }

using Point2 = Vec2;

/// An undirected direction of the plane: u and -u are identified, so the
/// angle lives in [0, pi).
class Direction {
  public:
    Direction() = default;
    explicit Direction(double theta) : theta_(wrap(theta)) {}

    static Direction of_vector(Vec2 v) { return Direction(std::atan2(v.y, v.x)); }

    double theta() const { return theta_; }
    Vec2 unit() const { return {std::cos(theta_), std::sin(theta_)}; }
    Direction perp() const {
        return Direction(theta_ >= kPi / 2 ? theta_ - kPi / 2 : theta_ + kPi / 2);
    }

    static double wrap(double theta) {
        double a = std::fmod(theta, kPi);
        if (a < 0) a += kPi;
        if (a >= kPi) a = 0.0;
        return a;
    }

  private:
    double theta_ = 0.0;
};

/// Strictly convex polygon, counterclockwise vertex order, first vertex at
/// the lexicographic (x, y) minimum. Immutable value type; construction
/// takes the convex hull of the input and drops collinear vertices.
class ConvexPolygon {
  public:
    static ConvexPolygon make(std::vector<Vec2> points);

    const std::vector<Vec2>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }
    const Vec2& operator[](std::size_t i) const { return verts_[i]; }
    Vec2 vertex(std::size_t i) const { return verts_[i % verts_.size()]; }
    Vec2 edge(std::size_t i) const { return vertex(i + 1) - vertex(i); }

    double area() const;
    Vec2 centroid() const;
    double diameter() const;
    /// Bounding-box diagonal; the length scale used by tolerances.
    double scale() const;

    bool contains(Vec2 p, double tol = 0.0) const;

  private:
    explicit ConvexPolygon(std::vector<Vec2> verts) : verts_(std::move(verts)) {}
    std::vector<Vec2> verts_;
};

ConvexPolygon make_convex_polygon(std::vector<Vec2> points);

/// Support function h_K(u) = max_{v in K} <v, u>. u need not be unit length.
double support(const ConvexPolygon& poly, Vec2 u);

/// Width in direction d: distance between the two supporting lines
/// orthogonal to d, i.e. h(u) + h(-u) for u = d.unit().
double width(const ConvexPolygon& poly, Direction d);

/// Length of a longest chord of the polygon in direction d.
double longest_chord_length(const ConvexPolygon& poly, Direction d);

/// Chord length cut by the line {p : <p, d.unit().perp()> = offset}.
double chord_length_at_offset(const ConvexPolygon& poly, Direction d, double offset);

/// Central symmetral (K - K)/2: origin-symmetric, same width function as K.
ConvexPolygon central_symmetral(const ConvexPolygon& poly);

/// True iff rotating the vertex set by pi/2 about the origin reproduces it
/// within tol. Throws NotOriginSymmetric unless -K == K within tol.
bool has_fourfold_symmetry(const ConvexPolygon& poly, double tol);

}  // namespace shapeflow

#endif
