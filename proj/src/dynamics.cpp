#include "shapeflow/dynamics.hpp"

#include <algorithm>

namespace shapeflow {

std::vector<ConvexPolygon> step(const ConvexPolygon& poly, const StepPolicy& policy) {
    const ExtremalSet extremal = extremal_rectangles(poly, policy.ratio_tol);
    std::vector<ConvexPolygon> images;
    for (const CircumRect& rect : extremal.rects) {
        ConvexPolygon img = normalize(apply_map(lambda_map(rect, policy.lambda), poly));
        bool duplicate = false;
        for (const ConvexPolygon& seen : images) {
            if (is_similar(seen, img, 1e-9)) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) images.push_back(std::move(img));
        if (policy.branch_mode == BranchMode::First) break;
    }
    return images;
}

Orbit orbit(const ConvexPolygon& poly, int n_steps, const StepPolicy& policy) {
    if (n_steps < 1) throw InvalidParameter("orbit needs at least one step");
    if (policy.branch_mode != BranchMode::First)
        throw InvalidParameter("orbit follows a single path; use step() for branching");

    Orbit orb;
    orb.states.reserve(static_cast<std::size_t>(n_steps) + 1);
    orb.states.push_back(canonicalize(poly));
    for (int k = 0; k < n_steps; ++k) {
        const ConvexPolygon& current = orb.states.back().rep;
        const ExtremalSet extremal = extremal_rectangles(current, policy.ratio_tol);
        orb.rect_multiplicity.push_back(static_cast<int>(extremal.rects.size()));
        ConvexPolygon img =
            normalize(apply_map(lambda_map(extremal.rects.front(), policy.lambda), current));
        orb.states.push_back(canonicalize(img));
    }
    orb.rect_multiplicity.push_back(
        static_cast<int>(extremal_rectangles(orb.states.back().rep, policy.ratio_tol).rects.size()));
    return orb;
}

CycleReport detect_cycle(const Orbit& orb, int burn_in, int max_period, double tol) {
    const int len = static_cast<int>(orb.states.size());
    if (burn_in < 0 || max_period < 1 || burn_in + 2 * max_period > len)
        throw InsufficientOrbit("orbit too short for the requested burn-in and period");

    CycleReport report;
    for (int p = 1; p <= max_period; ++p) {
        double residual = 0.0;
        for (int k = burn_in; k + p < len; ++k) {
            residual = std::max(residual,
                                shape_distance(orb.states[k].rep, orb.states[k + p].rep));
            if (residual >= tol) break;
        }
        if (residual < tol) {
            report.found = true;
            report.period = p;
            report.onset = burn_in;
            report.residual = residual;
            for (int k = burn_in; k < burn_in + p; ++k) report.cycle_reps.push_back(orb.states[k]);
            return report;
        }
    }
    return report;
}

bool strong_invariance(const ConvexPolygon& poly, double tol) {
    if (!(tol > 0)) throw InvalidParameter("tolerance must be positive");
    const bool profile_flat = extremal_rectangles(poly, tol).all_directions_flag;
    const bool symmetral_fourfold = has_fourfold_symmetry(central_symmetral(poly), tol);
    if (profile_flat != symmetral_fourfold)
        throw InternalInconsistency("ratio-profile and symmetral criteria disagree");
    return profile_flat;
}

bool weak_invariance(const ConvexPolygon& poly, double tol) {
    StepPolicy policy;
    policy.branch_mode = BranchMode::All;
    for (const ConvexPolygon& img : step(poly, policy)) {
        if (is_similar(img, poly, tol)) return true;
    }
    return false;
}

bool invariance(const ConvexPolygon& poly, double tol) {
    StepPolicy policy;
    policy.branch_mode = BranchMode::All;
    for (const ConvexPolygon& img : step(poly, policy)) {
        if (!is_similar(img, poly, tol)) return false;
    }
    return true;
}

}  // namespace shapeflow
