#include "shapeflow/triangle_flow.hpp"

#include <cmath>
#include <vector>

#include "shapeflow/affinity.hpp"
#include "shapeflow/calipers.hpp"
#include "shapeflow/shape_class.hpp"

namespace shapeflow {

namespace {

// Root of x^3 - 2x^2 + (2 + lambda^2) x - 1 near the closed-form seed,
// polished by Newton steps. The depressed cubic has p > 0, so there is
// exactly one real root.
double polished_cubic_root(double lambda_sq, double seed) {
    double x = seed;
    for (int i = 0; i < 8; ++i) {
        const double f = ((x - 2.0) * x + 2.0 + lambda_sq) * x - 1.0;
        const double df = (3.0 * x - 4.0) * x + 2.0 + lambda_sq;
        const double next = x - f / df;
        if (next == x) break;
        x = next;
    }
    return x;
}

double cardano_seed(double lambda_sq) {
    const double radicand =
        9.0 + lambda_sq * (-12.0 + lambda_sq * (60.0 + 12.0 * lambda_sq));
    if (radicand < 0) return 0.4;  // fixed-point polish takes over
    const double u = 28.0 - 72.0 * lambda_sq + 12.0 * std::sqrt(radicand);
    const double c = std::cbrt(u);
    return c / 6.0 - (4.0 / 3.0 + 2.0 * lambda_sq) / c + 2.0 / 3.0;
}

}  // namespace

double triangle_map(double x) {
    if (!(x > 0.0) || x > 0.5) throw DomainError("triangle parameter must lie in (0, 1/2]");
    const double t = 1.0 - x;
    return t / (1.0 + t * t);
}

double triangle_fixed_point() {
    // x0 = 2/3 - cbrt(44 + 12*sqrt(69))/6 + 10 / (3 cbrt(44 + 12*sqrt(69)))
    const double c = std::cbrt(44.0 + 12.0 * std::sqrt(69.0));
    const double radical = 2.0 / 3.0 - c / 6.0 + 10.0 / (3.0 * c);
    const double x0 = polished_cubic_root(1.0, radical);
    if (std::abs(x0 - radical) > 1e-10)
        throw InternalInconsistency("closed form disagrees with the cubic root");
    if (std::abs(((x0 - 2.0) * x0 + 3.0) * x0 - 1.0) > 1e-12)
        throw InternalInconsistency("fixed point fails its cubic");
    return x0;
}

double lambda_triangle_map(double x, double lambda) {
    if (!(x > 0.0) || x > 0.5) throw DomainError("triangle parameter must lie in (0, 1/2]");
    if (!(lambda > 0)) throw InvalidParameter("lambda must be positive");
    const ConvexPolygon tri = ConvexPolygon::make({{0.0, 0.0}, {1.0, 0.0}, {x, lambda}});
    const ExtremalSet extremal = extremal_rectangles(tri);
    const ConvexPolygon img = apply_map(lambda_map(extremal.rects.front(), lambda), tri);
    return triangle_param(img, lambda).x;
}

double lambda_fixed_point(double lambda) {
    constexpr double kSqrt3Half = 0.8660254037844386;
    if (!(lambda >= kSqrt3Half - 1e-12))
        throw DomainError("fixed parameter exists only for lambda >= sqrt(3)/2");
    const double lambda_sq = lambda * lambda;
    const double x = polished_cubic_root(lambda_sq, cardano_seed(lambda_sq));
    if (std::abs(lambda_triangle_map(std::min(x, 0.5), lambda) - x) > 1e-8)
        throw InternalInconsistency("closed-form parameter is not a fixed point of the map");
    return x;
}

double boundary_parameter(double lambda) {
    if (!(lambda > 0.0) || lambda > 1.0) throw DomainError("boundary needs lambda in (0, 1]");
    return 1.0 - std::sqrt(1.0 - lambda * lambda);
}

double one_step_freeze_threshold(double lambda) {
    if (!(lambda > 0.0) || !(lambda < 1.0))
        throw DomainError("freeze threshold needs lambda in (0, 1)");
    return 1.0 - lambda * lambda / std::sqrt(1.0 - lambda * lambda);
}

LambdaRegime classify_lambda_regime(double lambda, double x) {
    constexpr int kSteps = 200;
    constexpr double kFreezeEps = 1e-12;
    constexpr double kLimitTol = 1e-6;
    constexpr double kSqrt3Half = 0.8660254037844386;

    std::vector<double> xs;
    xs.reserve(kSteps + 1);
    xs.push_back(x);
    for (int k = 0; k < kSteps; ++k) xs.push_back(lambda_triangle_map(xs.back(), lambda));

    bool moved = false;
    for (int k = 0; k < kSteps; ++k) moved = moved || std::abs(xs[k + 1] - xs[k]) > kFreezeEps;
    if (!moved) return {LambdaRegimeTag::Fixed, x};

    const double tail = xs.back();
    if (lambda >= kSqrt3Half - 1e-12) {
        const double interior = lambda_fixed_point(lambda);
        if (std::abs(tail - interior) < kLimitTol)
            return {LambdaRegimeTag::ConvergeInterior, interior};
    }
    if (lambda <= kSqrt3Half + 1e-12) {
        const double edge = boundary_parameter(lambda);
        if (std::abs(tail - edge) < kLimitTol) return {LambdaRegimeTag::ConvergeBoundary, edge};
    }
    // The orbit settled on a plain frozen value inside the identity region.
    return {LambdaRegimeTag::EventuallyConstant, tail};
}

ConvexPolygon t0_triangle() {
    return ConvexPolygon::make({{0.0, 0.0}, {1.0, 0.0}, {triangle_fixed_point(), 1.0}});
}

ConvexPolygon h0_hexagon() { return central_symmetral(t0_triangle()); }

}  // namespace shapeflow
