#ifndef SHAPEFLOW_DYNAMICS_HPP
#define SHAPEFLOW_DYNAMICS_HPP

#include <vector>

#include "shapeflow/shape_class.hpp"

namespace shapeflow {

enum class BranchMode {
    First,  // lowest-angle extremal rectangle, reproducible single path
    All,    // every extremal rectangle; used by the invariance classifiers
};

struct StepPolicy {
    BranchMode branch_mode = BranchMode::First;
    double lambda = 1.0;
    double ratio_tol = 1e-9;
};

/// One step of the dynamics: for each extremal rectangle R of K (just the
/// first under BranchMode::First), the normalized image of K under the
/// squash map (lambda-map for lambda != 1). Branches that land in the same
/// similarity class (is_similar at 1e-9) are merged.
std::vector<ConvexPolygon> step(const ConvexPolygon& poly, const StepPolicy& policy = {});

struct Orbit {
    std::vector<ShapeClass> states;         // states[0] is the input class
    std::vector<int> rect_multiplicity;     // extremal-set size per state
};

/// Iterates the first-branch step n_steps times from the canonicalized
/// input; each state is the canonicalized image of the previous state's
/// representative.
Orbit orbit(const ConvexPolygon& poly, int n_steps, const StepPolicy& policy = {});

struct CycleReport {
    bool found = false;
    int period = 0;
    int onset = 0;
    double residual = 0.0;
    std::vector<ShapeClass> cycle_reps;
};

/// Smallest period p <= max_period such that shape_distance(states[k],
/// states[k+p]) < tol for every k in the post-burn-in window.
CycleReport detect_cycle(const Orbit& orb, int burn_in = 10, int max_period = 12,
                         double tol = 1e-7);

/// Every circumscribed rectangle is a square. Evaluated through the ratio
/// profile and cross-checked against 4-fold symmetry of the central
/// symmetral; the two must agree.
bool strong_invariance(const ConvexPolygon& poly, double tol);

/// Some branch of the exhaustive step is similar to the input.
bool weak_invariance(const ConvexPolygon& poly, double tol);

/// Every branch of the exhaustive step is similar to the input.
bool invariance(const ConvexPolygon& poly, double tol);

}  // namespace shapeflow

#endif
