#ifndef SHAPEFLOW_SCAN_HPP
#define SHAPEFLOW_SCAN_HPP

#include <array>
#include <span>
#include <vector>

#include "shapeflow/dynamics.hpp"

namespace shapeflow {

/// Maximum-area triangle spanned by polygon vertices. alpha <= beta are its
/// two smallest angles (radians); together they coordinatize the similarity
/// class within the affine class, since the triangle's identity is
/// preserved by affine maps of the polygon.
struct InscribedTriangle {
    std::array<int, 3> vertex_indices{};
    double area = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    bool unique = true;
};

/// Brute force over all vertex triples; ties within 1e-9 relative area set
/// unique = false and are broken by the lexicographically smallest triple.
InscribedTriangle max_area_inscribed_triangle(const ConvexPolygon& poly);

struct TriangleScanSample {
    double x_start = 0.0;
    int step = 0;
    double x = 0.0;
};

/// Iterates the scalar triangle map from each grid value and records the
/// post-burn-in tail. lambda != 1 uses the geometric lambda-dynamics.
std::vector<TriangleScanSample> scan_triangle_phase_space(std::span<const double> x_grid,
                                                          int n_steps, int burn_in,
                                                          double lambda = 1.0);

/// Uniform (alpha, beta) mesh in degrees. Meshpoints violating
/// alpha <= beta <= beta_cap - alpha (beta_cap keeps every angle at least
/// spacing away from degeneracy) are skipped and counted.
struct GridSpec {
    double alpha_min_deg = 5.0;
    double alpha_max_deg = 85.0;
    double beta_min_deg = 5.0;
    double beta_max_deg = 175.0;
    double spacing_deg = 5.0;
};

struct PortraitPoint {
    double mesh_alpha = 0.0;  // radians
    double mesh_beta = 0.0;
    int orbit_index = 0;
    int step = 0;
    double alpha = 0.0;
    double beta = 0.0;
};

struct PhasePortrait {
    std::vector<PortraitPoint> points;
    GridSpec grid;
    int burn_in = 0;
    int n_steps = 0;
    int skipped_meshpoints = 0;
};

/// For each realizable meshpoint, maps the polygon's inscribed triangle
/// onto a triangle with the mesh angles by the unique affine map on its
/// vertices, runs the orbit, and records the post-burn-in (alpha, beta)
/// trail. Meshpoints run concurrently (capped by SHAPEFLOW_THREADS when
/// n_threads == 0) with a gather order fixed by meshpoint index.
PhasePortrait scan_polygon_phase_space(const ConvexPolygon& poly, const GridSpec& grid,
                                       int n_steps, int burn_in, const StepPolicy& policy = {},
                                       int n_threads = 0);

struct PortraitCluster {
    double alpha = 0.0;  // coordinate-wise median of the members
    double beta = 0.0;
    int size = 0;
};

/// Greedy clustering of portrait points in the (alpha, beta) plane:
/// points join the first cluster whose seed point is within tol.
std::vector<PortraitCluster> portrait_clusters(std::span<const PortraitPoint> points,
                                               double tol);

}  // namespace shapeflow

#endif
