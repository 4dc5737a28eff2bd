#ifndef SHAPEFLOW_TRIANGLE_FLOW_HPP
#define SHAPEFLOW_TRIANGLE_FLOW_HPP

#include "shapeflow/geometry.hpp"

namespace shapeflow {

/// Scalar form of one squash step on the canonical triangle family
/// (0,0), (1,0), (x,1): f(x) = (1-x) / (1 + (1-x)^2), for x in (0, 1/2].
double triangle_map(double x);

/// The unique fixed parameter x0 of triangle_map: the single real root of
/// x^3 - 2x^2 + 3x - 1, evaluated in closed form and polished on the cubic.
double triangle_fixed_point();

/// One step of the lambda-dynamics on the family (0,0), (1,0), (x,lambda),
/// computed geometrically: build the triangle, squash it by the lambda-map
/// of its extremal rectangle, and read the image's parameter back.
double lambda_triangle_map(double x, double lambda);

/// Fixed parameter of the lambda-dynamics for lambda >= sqrt(3)/2: the real
/// root of x^3 - 2x^2 + (2 + lambda^2) x - 1, evaluated in closed form,
/// polished, and verified against lambda_triangle_map.
double lambda_fixed_point(double lambda);

/// Orbits of the lambda-dynamics fall into four regimes, split by the
/// parameter thresholds sqrt(3)/2, 1/sqrt(2) and sqrt((sqrt(5)-1)/2).
enum class LambdaRegimeTag {
    Fixed,               // the start is a fixed point
    ConvergeInterior,    // x_k -> lambda_fixed_point(lambda), never reached
    ConvergeBoundary,    // x_k -> 1 - sqrt(1 - lambda^2), never reached
    EventuallyConstant,  // the orbit freezes after finitely many steps
};

struct LambdaRegime {
    LambdaRegimeTag tag = LambdaRegimeTag::Fixed;
    double limit_x = 0.0;
};

/// Labels the orbit of (lambda, x) by iterating lambda_triangle_map 200
/// times and matching the observed behavior; the thresholds above are not
/// trusted as ground truth.
LambdaRegime classify_lambda_regime(double lambda, double x);

/// Parameter value 1 - sqrt(1 - lambda^2) for lambda in (0, 1]: the point
/// where the unit base ties with the slant side as the longest side. At
/// larger parameters the step map is the identity.
double boundary_parameter(double lambda);

/// Parameter value 1 - lambda^2 / sqrt(1 - lambda^2): starts below it jump
/// past the boundary in a single reflected step and freeze.
double one_step_freeze_threshold(double lambda);

/// The unique invariant triangle (0,0), (1,0), (x0,1).
ConvexPolygon t0_triangle();

/// The central symmetral of t0_triangle: the one weakly invariant
/// origin-symmetric hexagon up to similarity.
ConvexPolygon h0_hexagon();

}  // namespace shapeflow

#endif
