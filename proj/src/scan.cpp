#include "shapeflow/scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "shapeflow/triangle_flow.hpp"

namespace shapeflow {

namespace {

// Interior angle at b in the triangle (a, b, c).
double angle_at(Vec2 a, Vec2 b, Vec2 c) {
    const Vec2 u = a - b, v = c - b;
    return std::atan2(std::abs(u.cross(v)), u.dot(v));
}

int thread_cap() {
    if (const char* env = std::getenv("SHAPEFLOW_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// The triangle (0,0), (1,0), apex with interior angles alpha at the origin
// and beta at (1,0).
std::array<Vec2, 3> triangle_with_angles(double alpha, double beta) {
    const double ta = std::tan(alpha), tb = std::tan(beta);
    Vec2 apex;
    if (!std::isfinite(tb) || std::abs(beta - kPi / 2) < 1e-12) {
        apex = {1.0, ta};
    } else if (!std::isfinite(ta) || std::abs(alpha - kPi / 2) < 1e-12) {
        apex = {0.0, tb};
    } else {
        const double x = tb / (ta + tb);
        apex = {x, x * ta};
    }
    return {Vec2{0.0, 0.0}, Vec2{1.0, 0.0}, apex};
}

// Affine map sending triangle src to triangle dst vertex-by-vertex.
AffineMap triangle_to_triangle(const std::array<Vec2, 3>& src, const std::array<Vec2, 3>& dst) {
    const Vec2 e1 = src[1] - src[0], e2 = src[2] - src[0];
    const Vec2 f1 = dst[1] - dst[0], f2 = dst[2] - dst[0];
    const double det = e1.cross(e2);
    Mat2 inv{e2.y / det, -e2.x / det, -e1.y / det, e1.x / det};
    AffineMap m;
    m.linear.m00 = f1.x * inv.m00 + f2.x * inv.m10;
    m.linear.m01 = f1.x * inv.m01 + f2.x * inv.m11;
    m.linear.m10 = f1.y * inv.m00 + f2.y * inv.m10;
    m.linear.m11 = f1.y * inv.m01 + f2.y * inv.m11;
    m.translation = dst[0] - m.linear.apply(src[0]);
    return m;
}

}  // namespace

InscribedTriangle max_area_inscribed_triangle(const ConvexPolygon& poly) {
    const auto& vs = poly.vertices();
    const int n = static_cast<int>(vs.size());
    InscribedTriangle best;
    best.area = -1.0;
    bool tie = false;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                const double area = 0.5 * std::abs((vs[j] - vs[i]).cross(vs[k] - vs[i]));
                if (area > best.area * (1.0 + 1e-9)) {
                    best.area = area;
                    best.vertex_indices = {i, j, k};
                    tie = false;
                } else if (area > best.area * (1.0 - 1e-9)) {
                    tie = true;
                }
            }
        }
    }
    best.unique = !tie;

    const auto [i, j, k] = best.vertex_indices;
    double angles[3] = {angle_at(vs[j], vs[i], vs[k]), angle_at(vs[i], vs[j], vs[k]),
                        angle_at(vs[i], vs[k], vs[j])};
    std::sort(angles, angles + 3);
    best.alpha = angles[0];
    best.beta = angles[1];
    return best;
}

std::vector<TriangleScanSample> scan_triangle_phase_space(std::span<const double> x_grid,
                                                          int n_steps, int burn_in,
                                                          double lambda) {
    if (n_steps < 1 || burn_in < 0 || burn_in >= n_steps)
        throw InvalidParameter("need n_steps > burn_in >= 0");
    std::vector<TriangleScanSample> out;
    for (double x0 : x_grid) {
        double x = x0;
        for (int k = 1; k <= n_steps; ++k) {
            x = lambda == 1.0 ? triangle_map(x) : lambda_triangle_map(x, lambda);
            if (k >= burn_in) out.push_back({x0, k, x});
        }
    }
    return out;
}

PhasePortrait scan_polygon_phase_space(const ConvexPolygon& poly, const GridSpec& grid,
                                       int n_steps, int burn_in, const StepPolicy& policy,
                                       int n_threads) {
    if (n_steps <= burn_in || burn_in < 0) throw InvalidParameter("need n_steps > burn_in >= 0");
    const double deg = kPi / 180.0;

    struct Mesh {
        double alpha, beta;
    };
    std::vector<Mesh> meshes;
    PhasePortrait portrait;
    portrait.grid = grid;
    portrait.burn_in = burn_in;
    portrait.n_steps = n_steps;
    for (double a = grid.alpha_min_deg; a <= grid.alpha_max_deg + 1e-9; a += grid.spacing_deg) {
        for (double b = grid.beta_min_deg; b <= grid.beta_max_deg + 1e-9; b += grid.spacing_deg) {
            // Realizable meshpoints: alpha <= beta <= beta_max - alpha, so
            // the third angle stays at least 180 - beta_max degrees wide.
            if (b < a - 1e-9 || a + b > grid.beta_max_deg + 1e-9) {
                ++portrait.skipped_meshpoints;
                continue;
            }
            meshes.push_back({a * deg, b * deg});
        }
    }

    const InscribedTriangle seed = max_area_inscribed_triangle(poly);
    const auto& vs = poly.vertices();
    const std::array<Vec2, 3> src = {vs[seed.vertex_indices[0]], vs[seed.vertex_indices[1]],
                                     vs[seed.vertex_indices[2]]};

    std::vector<std::vector<PortraitPoint>> results(meshes.size());
    auto run_mesh = [&](std::size_t m) {
        const auto dst = triangle_with_angles(meshes[m].alpha, meshes[m].beta);
        const ConvexPolygon start = apply_map(triangle_to_triangle(src, dst), poly);
        const Orbit orb = orbit(start, n_steps, policy);
        for (int k = burn_in; k <= n_steps; ++k) {
            const InscribedTriangle tri = max_area_inscribed_triangle(orb.states[k].rep);
            results[m].push_back({meshes[m].alpha, meshes[m].beta, static_cast<int>(m), k,
                                  tri.alpha, tri.beta});
        }
    };

    const int workers = std::min<int>(n_threads >= 1 ? n_threads : thread_cap(),
                                      static_cast<int>(meshes.size()));
    if (workers <= 1) {
        for (std::size_t m = 0; m < meshes.size(); ++m) run_mesh(m);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t m = static_cast<std::size_t>(w); m < meshes.size();
                         m += static_cast<std::size_t>(workers))
                        run_mesh(m);
                } catch (...) {
                    errors[static_cast<std::size_t>(w)] = std::current_exception();
                }
            });
        }
        for (std::thread& t : pool) t.join();
        for (const std::exception_ptr& e : errors)
            if (e) std::rethrow_exception(e);
    }

    for (const auto& r : results)
        portrait.points.insert(portrait.points.end(), r.begin(), r.end());
    return portrait;
}

std::vector<PortraitCluster> portrait_clusters(std::span<const PortraitPoint> points,
                                               double tol) {
    std::vector<std::array<double, 2>> seeds;
    std::vector<std::vector<double>> alphas, betas;
    for (const PortraitPoint& p : points) {
        bool found = false;
        for (std::size_t c = 0; c < seeds.size(); ++c) {
            if (std::hypot(p.alpha - seeds[c][0], p.beta - seeds[c][1]) <= tol) {
                alphas[c].push_back(p.alpha);
                betas[c].push_back(p.beta);
                found = true;
                break;
            }
        }
        if (!found) {
            seeds.push_back({p.alpha, p.beta});
            alphas.push_back({p.alpha});
            betas.push_back({p.beta});
        }
    }
    std::vector<PortraitCluster> out;
    out.reserve(seeds.size());
    for (std::size_t c = 0; c < seeds.size(); ++c) {
        std::sort(alphas[c].begin(), alphas[c].end());
        std::sort(betas[c].begin(), betas[c].end());
        out.push_back({alphas[c][alphas[c].size() / 2], betas[c][betas[c].size() / 2],
                       static_cast<int>(alphas[c].size())});
    }
    return out;
}

}  // namespace shapeflow
