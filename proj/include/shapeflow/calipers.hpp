#ifndef SHAPEFLOW_CALIPERS_HPP
#define SHAPEFLOW_CALIPERS_HPP

#include <array>
#include <utility>
#include <vector>

#include "shapeflow/geometry.hpp"

namespace shapeflow {

/// Rectangle circumscribed about a polygon. `direction` is the orientation
/// of the SHORT side pair, so width(K, direction) == a; for squares it is
/// canonicalized into [0, pi/2). Corners are counterclockwise; contacts[i]
/// lists the polygon vertices lying on the side corners[i] -> corners[i+1].
struct CircumRect {
    Direction direction;
    double a = 0.0;  // short side length
    double b = 0.0;  // long side length
    std::array<Vec2, 4> corners{};
    std::array<std::vector<int>, 4> contacts{};

    double ratio() const { return a / b; }
};

/// All circumscribed rectangles attaining the minimum side ratio a/b,
/// sorted by direction angle. all_directions_flag is set when the ratio
/// profile is constant over candidates and a 720-point verification grid
/// (every circumscribed rectangle is then a square).
struct ExtremalSet {
    std::vector<CircumRect> rects;
    double min_ratio = 0.0;
    bool all_directions_flag = false;
};

/// The unique rectangle with sides parallel/perpendicular to d that
/// circumscribes the polygon.
CircumRect circumscribed_rectangle(const ConvexPolygon& poly, Direction d);

/// Directions where the width ratio can attain its minimum: edge normals
/// and their perpendiculars, deduplicated mod pi. Between consecutive
/// caliper events both widths are single sinusoids, so their ratio is
/// monotone there and the global minimum lands on an event direction.
std::vector<Direction> candidate_directions(const ConvexPolygon& poly);

ExtremalSet extremal_rectangles(const ConvexPolygon& poly, double tol = 1e-9);

/// Width ratio a/b sampled at n uniform directions in [0, pi); the
/// brute-force oracle for the candidate-direction reduction.
std::vector<std::pair<Direction, double>> ratio_profile(const ConvexPolygon& poly, int n);

}  // namespace shapeflow

#endif
