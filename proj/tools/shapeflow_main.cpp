#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shapeflow/io.hpp"
#include "shapeflow/triangle_flow.hpp"

namespace sf = shapeflow;

namespace {

struct RunConfig {
    std::string input_path;
    std::string out_prefix = "out";
    std::string config_path;
    int n_steps = 60;
    int burn_in = 10;
    int max_period = 12;
    double lambda = 1.0;
    double tol = 1e-7;
    double grid_spacing_deg = 5.0;
    double x = 0.1;
};

void add_common(CLI::App* cmd, RunConfig& cfg, bool with_input) {
    if (with_input) cmd->add_option("input", cfg.input_path, "polygon file (text or JSON)")
        ->required();
    cmd->add_option("--out", cfg.out_prefix, "output file prefix");
    cmd->add_option("--lambda", cfg.lambda, "affinity ratio multiplier");
    cmd->add_option("--tol", cfg.tol, "tolerance");
    cmd->add_option("--config", cfg.config_path, "flat key=value config file");
}

std::string trimmed(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

// Flat key=value config mirroring the flags; explicit command-line flags
// win over file values. Returns false on a malformed or unknown entry.
bool apply_config(const CLI::App* cmd, RunConfig& cfg) {
    std::ifstream in(cfg.config_path);
    if (!in) {
        std::fprintf(stderr, "error: cannot open config %s\n", cfg.config_path.c_str());
        return false;
    }
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        if (trimmed(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            std::fprintf(stderr, "error: config line is not key=value: %s\n", line.c_str());
            return false;
        }
        const std::string key = trimmed(line.substr(0, eq));
        const std::string value = trimmed(line.substr(eq + 1));
        const std::string flag = "--" + key;
        if (cmd->get_option_no_throw(flag) == nullptr) {
            std::fprintf(stderr, "error: unknown config key '%s'\n", key.c_str());
            return false;
        }
        if (cmd->count(flag) > 0) continue;  // command line wins

        std::istringstream parse(value);
        bool ok = false;
        if (key == "steps") ok = static_cast<bool>(parse >> cfg.n_steps);
        else if (key == "burn-in") ok = static_cast<bool>(parse >> cfg.burn_in);
        else if (key == "max-period") ok = static_cast<bool>(parse >> cfg.max_period);
        else if (key == "lambda") ok = static_cast<bool>(parse >> cfg.lambda);
        else if (key == "tol") ok = static_cast<bool>(parse >> cfg.tol);
        else if (key == "grid-spacing") ok = static_cast<bool>(parse >> cfg.grid_spacing_deg);
        else if (key == "x") ok = static_cast<bool>(parse >> cfg.x);
        else if (key == "out") { cfg.out_prefix = value; ok = !value.empty(); }
        if (!ok) {
            std::fprintf(stderr, "error: bad config value for '%s'\n", key.c_str());
            return false;
        }
    }
    return true;
}

int validate(const RunConfig& cfg) {
    if (cfg.n_steps <= cfg.burn_in || cfg.burn_in < 0) {
        std::fprintf(stderr, "error: need steps > burn-in >= 0\n");
        return 3;
    }
    if (!(cfg.lambda > 0) || !(cfg.tol > 0) || cfg.max_period < 1 ||
        !(cfg.grid_spacing_deg > 0)) {
        std::fprintf(stderr, "error: lambda, tol, max-period and grid-spacing must be positive\n");
        return 3;
    }
    return 0;
}

int run_orbit(const RunConfig& cfg) {
    if (int rc = validate(cfg)) return rc;
    const sf::ConvexPolygon poly = sf::read_polygon_file(cfg.input_path);
    sf::StepPolicy policy;
    policy.lambda = cfg.lambda;
    const sf::Orbit orb = sf::orbit(poly, cfg.n_steps, policy);
    sf::CycleReport cycle;
    try {
        cycle = sf::detect_cycle(orb, cfg.burn_in, cfg.max_period, cfg.tol);
    } catch (const sf::InsufficientOrbit& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    sf::write_file(cfg.out_prefix + "_orbit.csv", sf::orbit_csv(orb, cycle, cfg.lambda));
    std::vector<sf::ConvexPolygon> shapes;
    shapes.reserve(orb.states.size());
    for (const sf::ShapeClass& s : orb.states) shapes.push_back(s.rep);
    sf::write_file(cfg.out_prefix + "_orbit.svg", sf::svg_polygon_strip(shapes));
    if (cycle.found)
        std::printf("cycle found: period=%d onset=%d residual=%.3g\n", cycle.period,
                    cycle.onset, cycle.residual);
    else
        std::printf("no cycle with period <= %d at tol %.3g\n", cfg.max_period, cfg.tol);
    return 0;
}

int run_scan(const RunConfig& cfg) {
    if (int rc = validate(cfg)) return rc;
    const sf::ConvexPolygon poly = sf::read_polygon_file(cfg.input_path);
    sf::GridSpec grid;
    grid.spacing_deg = cfg.grid_spacing_deg;
    sf::StepPolicy policy;
    policy.lambda = cfg.lambda;
    const sf::PhasePortrait portrait =
        sf::scan_polygon_phase_space(poly, grid, cfg.n_steps, cfg.burn_in, policy);
    sf::write_file(cfg.out_prefix + "_portrait.csv", sf::portrait_csv(portrait));
    sf::write_file(cfg.out_prefix + "_portrait.svg", sf::svg_portrait_scatter(portrait));
    const auto clusters = sf::portrait_clusters(portrait.points, 1e-3);
    const int support = static_cast<int>(portrait.points.size() / 100);
    int attractors = 0, transient = 0;
    for (const sf::PortraitCluster& cl : clusters) {
        if (cl.size >= support) ++attractors;
        else ++transient;
    }
    std::printf("portrait: %zu points, %d meshpoints skipped, "
                "%d clusters at 1e-3 rad (+%d transient)\n",
                portrait.points.size(), portrait.skipped_meshpoints, attractors, transient);
    return 0;
}

int run_invariance(const RunConfig& cfg) {
    if (!(cfg.tol > 0)) {
        std::fprintf(stderr, "error: tol must be positive\n");
        return 3;
    }
    const sf::ConvexPolygon poly = sf::read_polygon_file(cfg.input_path);
    const bool weak = sf::weak_invariance(poly, cfg.tol);
    const bool inv = sf::invariance(poly, cfg.tol);
    const bool strong = sf::strong_invariance(poly, cfg.tol);
    std::printf("weakly_invariant=%s invariant=%s strongly_invariant=%s\n",
                weak ? "true" : "false", inv ? "true" : "false", strong ? "true" : "false");
    const sf::ExtremalSet set = sf::extremal_rectangles(poly);
    std::printf("extremal: min_ratio=%.9g multiplicity=%zu all_directions=%s\n", set.min_ratio,
                set.rects.size(), set.all_directions_flag ? "true" : "false");
    for (const sf::CircumRect& r : set.rects)
        std::printf("  rect: direction=%.9g a=%.9g b=%.9g\n", r.direction.theta(), r.a, r.b);
    return 0;
}

int run_triangle_map(const RunConfig& cfg) {
    if (int rc = validate(cfg)) return rc;
    if (!(cfg.x > 0) || cfg.x > 0.5) {
        std::fprintf(stderr, "error: x must lie in (0, 1/2]\n");
        return 3;
    }
    // abs_err is measured against the orbit's own predicted limit; for
    // lambda = 1 that is the interior fixed parameter.
    const double x0 = cfg.lambda == 1.0
                          ? sf::triangle_fixed_point()
                          : sf::classify_lambda_regime(cfg.lambda, cfg.x).limit_x;
    std::vector<double> xs{cfg.x};
    for (int k = 0; k < cfg.n_steps; ++k) {
        const double next = cfg.lambda == 1.0 ? sf::triangle_map(xs.back())
                                              : sf::lambda_triangle_map(xs.back(), cfg.lambda);
        xs.push_back(next);
    }
    const std::string csv = sf::triangle_map_csv(xs, x0);
    sf::write_file(cfg.out_prefix + "_triangle_map.csv", csv);
    std::fputs(csv.c_str(), stdout);
    return 0;
}

int run_render(const RunConfig& cfg) {
    if (!(cfg.tol > 0)) {
        std::fprintf(stderr, "error: tol must be positive\n");
        return 3;
    }
    const sf::ConvexPolygon poly = sf::read_polygon_file(cfg.input_path);
    const sf::ExtremalSet set = sf::extremal_rectangles(poly);
    sf::write_file(cfg.out_prefix + "_render.svg", sf::svg_polygon_with_rects(poly, set.rects));
    std::printf("rendered %zu extremal rectangle(s), min_ratio=%.9g\n", set.rects.size(),
                set.min_ratio);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"shapeflow: convex-polygon shape evolution under squash affinities"};
    app.require_subcommand(1);
    RunConfig cfg;

    CLI::App* orbit = app.add_subcommand("orbit", "iterate a polygon and detect its cycle");
    add_common(orbit, cfg, true);
    orbit->add_option("--steps", cfg.n_steps, "number of iterations");
    orbit->add_option("--burn-in", cfg.burn_in, "iterates dropped before cycle search");
    orbit->add_option("--max-period", cfg.max_period, "largest period searched");

    CLI::App* scan = app.add_subcommand("scan", "phase-space portrait over an angle grid");
    add_common(scan, cfg, true);
    scan->add_option("--steps", cfg.n_steps, "orbit length per meshpoint");
    scan->add_option("--burn-in", cfg.burn_in, "iterates dropped from the portrait");
    scan->add_option("--grid-spacing", cfg.grid_spacing_deg, "mesh spacing in degrees");

    CLI::App* invariance = app.add_subcommand("invariance", "classify a polygon's invariance");
    add_common(invariance, cfg, true);

    CLI::App* tmap = app.add_subcommand("triangle-map", "iterate the scalar triangle map");
    add_common(tmap, cfg, false);
    tmap->add_option("--x", cfg.x, "start parameter in (0, 1/2]")->required();
    tmap->add_option("--steps", cfg.n_steps, "number of iterations");

    CLI::App* render = app.add_subcommand("render", "draw a polygon with its extremal rectangles");
    add_common(render, cfg, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    if (!cfg.config_path.empty()) {
        const CLI::App* active = app.get_subcommands().front();
        if (!apply_config(active, cfg)) return 3;
    }

    try {
        if (app.got_subcommand(orbit)) return run_orbit(cfg);
        if (app.got_subcommand(scan)) return run_scan(cfg);
        if (app.got_subcommand(invariance)) return run_invariance(cfg);
        if (app.got_subcommand(tmap)) return run_triangle_map(cfg);
        if (app.got_subcommand(render)) return run_render(cfg);
    } catch (const sf::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const sf::DegenerateInput& e) {
        std::fprintf(stderr, "error: degenerate input: %s\n", e.what());
        return 4;
    } catch (const sf::InvalidParameter& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const sf::DomainError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
