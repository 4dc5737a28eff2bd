#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "shapeflow/dynamics.hpp"
#include "shapeflow/io.hpp"
#include "shapeflow/scan.hpp"
#include "shapeflow/triangle_flow.hpp"

namespace py = pybind11;
using namespace shapeflow;

namespace {

ConvexPolygon polygon_from_pairs(const std::vector<std::pair<double, double>>& pts) {
    std::vector<Vec2> v;
    v.reserve(pts.size());
    for (const auto& [x, y] : pts) v.push_back({x, y});
    return ConvexPolygon::make(std::move(v));
}

std::vector<std::pair<double, double>> vertices_as_pairs(const ConvexPolygon& poly) {
    std::vector<std::pair<double, double>> out;
    out.reserve(poly.size());
    for (const Vec2& v : poly.vertices()) out.emplace_back(v.x, v.y);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Convex-polygon shape evolution under squash affinities";

    py::register_exception<DegenerateInput>(m, "DegenerateInputError", PyExc_ValueError);
    py::register_exception<NotOriginSymmetric>(m, "NotOriginSymmetricError", PyExc_ValueError);
    py::register_exception<NotATriangle>(m, "NotATriangleError", PyExc_ValueError);
    py::register_exception<NotInCanonicalFamily>(m, "NotInCanonicalFamilyError",
                                                 PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<InvalidParameter>(m, "InvalidParameterError", PyExc_ValueError);
    py::register_exception<InsufficientOrbit>(m, "InsufficientOrbitError", PyExc_ValueError);
    py::register_exception<InternalInconsistency>(m, "InternalInconsistencyError",
                                                  PyExc_RuntimeError);

    py::class_<Direction>(m, "Direction")
        .def(py::init<double>(), py::arg("theta"))
        .def_property_readonly("theta", &Direction::theta)
        .def("perp", &Direction::perp)
        .def("__repr__", [](const Direction& d) {
            return "Direction(" + std::to_string(d.theta()) + ")";
        });

    py::class_<ConvexPolygon>(m, "Polygon")
        .def(py::init(&polygon_from_pairs), py::arg("points"))
        .def_property_readonly("vertices", &vertices_as_pairs)
        .def("__len__", &ConvexPolygon::size)
        .def("area", &ConvexPolygon::area)
        .def("diameter", &ConvexPolygon::diameter)
        .def("centroid",
             [](const ConvexPolygon& p) {
                 const Vec2 c = p.centroid();
                 return std::make_pair(c.x, c.y);
             })
        .def("contains", [](const ConvexPolygon& p, double x, double y) {
            return p.contains({x, y});
        });

    m.def("support", [](const ConvexPolygon& p, double ux, double uy) {
        return support(p, {ux, uy});
    });
    m.def("width", [](const ConvexPolygon& p, double theta) {
        return width(p, Direction(theta));
    });
    m.def("longest_chord_length", [](const ConvexPolygon& p, double theta) {
        return longest_chord_length(p, Direction(theta));
    });
    m.def("central_symmetral", &central_symmetral);
    m.def("has_fourfold_symmetry", &has_fourfold_symmetry, py::arg("polygon"), py::arg("tol"));

    py::class_<CircumRect>(m, "CircumRect")
        .def_readonly("a", &CircumRect::a)
        .def_readonly("b", &CircumRect::b)
        .def_property_readonly("direction",
                               [](const CircumRect& r) { return r.direction.theta(); })
        .def_property_readonly("corners",
                               [](const CircumRect& r) {
                                   std::vector<std::pair<double, double>> out;
                                   for (const Vec2& c : r.corners) out.emplace_back(c.x, c.y);
                                   return out;
                               })
        .def_readonly("contacts", &CircumRect::contacts)
        .def("ratio", &CircumRect::ratio);

    py::class_<ExtremalSet>(m, "ExtremalSet")
        .def_readonly("rects", &ExtremalSet::rects)
        .def_readonly("min_ratio", &ExtremalSet::min_ratio)
        .def_readonly("all_directions_flag", &ExtremalSet::all_directions_flag);

    m.def("circumscribed_rectangle", [](const ConvexPolygon& p, double theta) {
        return circumscribed_rectangle(p, Direction(theta));
    });
    m.def("candidate_directions", [](const ConvexPolygon& p) {
        std::vector<double> out;
        for (const Direction& d : candidate_directions(p)) out.push_back(d.theta());
        return out;
    });
    m.def("extremal_rectangles", &extremal_rectangles, py::arg("polygon"),
          py::arg("tol") = 1e-9);
    m.def("ratio_profile", [](const ConvexPolygon& p, int n) {
        std::vector<std::pair<double, double>> out;
        for (const auto& [d, r] : ratio_profile(p, n)) out.emplace_back(d.theta(), r);
        return out;
    });

    py::class_<AffineMap>(m, "AffineMap")
        .def_property_readonly("matrix",
                               [](const AffineMap& m_) {
                                   return std::make_tuple(m_.linear.m00, m_.linear.m01,
                                                          m_.linear.m10, m_.linear.m11);
                               })
        .def_property_readonly("translation",
                               [](const AffineMap& m_) {
                                   return std::make_pair(m_.translation.x, m_.translation.y);
                               })
        .def("det", &AffineMap::det)
        .def("__call__", [](const AffineMap& m_, double x, double y) {
            const Vec2 p = m_({x, y});
            return std::make_pair(p.x, p.y);
        });

    m.def("squash_map", &squash_map);
    m.def("lambda_map", &lambda_map, py::arg("rect"), py::arg("lambda_"));
    m.def("apply_map", &apply_map);
    m.def("normalize", &normalize);

    py::class_<ShapeClass>(m, "ShapeClass")
        .def_readonly("rep", &ShapeClass::rep)
        .def_readonly("n_vertices", &ShapeClass::n_vertices);

    m.def("canonicalize", &shapeflow::canonicalize);
    m.def("shape_distance", &shape_distance);
    m.def("is_similar", &is_similar, py::arg("lhs"), py::arg("rhs"), py::arg("tol"));
    m.def("triangle_param", [](const ConvexPolygon& tri, double lambda) {
        const TriangleParam p = triangle_param(tri, lambda);
        return std::make_pair(p.x, p.lambda);
    });

    py::enum_<BranchMode>(m, "BranchMode")
        .value("FIRST", BranchMode::First)
        .value("ALL", BranchMode::All);

    py::class_<StepPolicy>(m, "StepPolicy")
        .def(py::init([](BranchMode mode, double lambda, double ratio_tol) {
                 StepPolicy p;
                 p.branch_mode = mode;
                 p.lambda = lambda;
                 p.ratio_tol = ratio_tol;
                 return p;
             }),
             py::arg("branch_mode") = BranchMode::First, py::arg("lambda_") = 1.0,
             py::arg("ratio_tol") = 1e-9)
        .def_readwrite("lambda_", &StepPolicy::lambda)
        .def_readwrite("ratio_tol", &StepPolicy::ratio_tol)
        .def_readwrite("branch_mode", &StepPolicy::branch_mode);

    m.def("step", &step, py::arg("polygon"), py::arg("policy") = StepPolicy{});

    py::class_<Orbit>(m, "Orbit")
        .def_readonly("states", &Orbit::states)
        .def_readonly("rect_multiplicity", &Orbit::rect_multiplicity);

    m.def("orbit", &orbit, py::arg("polygon"), py::arg("n_steps"),
          py::arg("policy") = StepPolicy{});

    py::class_<CycleReport>(m, "CycleReport")
        .def_readonly("found", &CycleReport::found)
        .def_readonly("period", &CycleReport::period)
        .def_readonly("onset", &CycleReport::onset)
        .def_readonly("residual", &CycleReport::residual)
        .def_readonly("cycle_reps", &CycleReport::cycle_reps);

    m.def("detect_cycle", &detect_cycle, py::arg("orbit"), py::arg("burn_in") = 10,
          py::arg("max_period") = 12, py::arg("tol") = 1e-7);

    m.def("strong_invariance", &strong_invariance, py::arg("polygon"), py::arg("tol"));
    m.def("weak_invariance", &weak_invariance, py::arg("polygon"), py::arg("tol"));
    m.def("invariance", &invariance, py::arg("polygon"), py::arg("tol"));

    m.def("triangle_map", &triangle_map, py::arg("x"));
    m.def("triangle_fixed_point", &triangle_fixed_point);
    m.def("lambda_triangle_map", &lambda_triangle_map, py::arg("x"), py::arg("lambda_"));
    m.def("lambda_fixed_point", &lambda_fixed_point, py::arg("lambda_"));
    m.def("boundary_parameter", &boundary_parameter, py::arg("lambda_"));
    m.def("one_step_freeze_threshold", &one_step_freeze_threshold, py::arg("lambda_"));
    m.def("t0_triangle", &t0_triangle);
    m.def("h0_hexagon", &h0_hexagon);

    py::enum_<LambdaRegimeTag>(m, "LambdaRegimeTag")
        .value("FIXED", LambdaRegimeTag::Fixed)
        .value("CONVERGE_INTERIOR", LambdaRegimeTag::ConvergeInterior)
        .value("CONVERGE_BOUNDARY", LambdaRegimeTag::ConvergeBoundary)
        .value("EVENTUALLY_CONSTANT", LambdaRegimeTag::EventuallyConstant);

    py::class_<LambdaRegime>(m, "LambdaRegime")
        .def_readonly("tag", &LambdaRegime::tag)
        .def_readonly("limit_x", &LambdaRegime::limit_x);

    m.def("classify_lambda_regime", &classify_lambda_regime, py::arg("lambda_"), py::arg("x"));

    py::class_<InscribedTriangle>(m, "InscribedTriangle")
        .def_readonly("vertex_indices", &InscribedTriangle::vertex_indices)
        .def_readonly("area", &InscribedTriangle::area)
        .def_readonly("alpha", &InscribedTriangle::alpha)
        .def_readonly("beta", &InscribedTriangle::beta)
        .def_readonly("unique", &InscribedTriangle::unique);

    m.def("max_area_inscribed_triangle", &max_area_inscribed_triangle);

    m.def("scan_triangle_phase_space",
          [](const std::vector<double>& grid, int n_steps, int burn_in, double lambda) {
              std::vector<std::tuple<double, int, double>> out;
              for (const TriangleScanSample& s :
                   scan_triangle_phase_space(grid, n_steps, burn_in, lambda))
                  out.emplace_back(s.x_start, s.step, s.x);
              return out;
          },
          py::arg("x_grid"), py::arg("n_steps"), py::arg("burn_in"), py::arg("lambda_") = 1.0);

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init<>())
        .def_readwrite("alpha_min_deg", &GridSpec::alpha_min_deg)
        .def_readwrite("alpha_max_deg", &GridSpec::alpha_max_deg)
        .def_readwrite("beta_min_deg", &GridSpec::beta_min_deg)
        .def_readwrite("beta_max_deg", &GridSpec::beta_max_deg)
        .def_readwrite("spacing_deg", &GridSpec::spacing_deg);

    py::class_<PortraitPoint>(m, "PortraitPoint")
        .def_readonly("mesh_alpha", &PortraitPoint::mesh_alpha)
        .def_readonly("mesh_beta", &PortraitPoint::mesh_beta)
        .def_readonly("orbit_index", &PortraitPoint::orbit_index)
        .def_readonly("step", &PortraitPoint::step)
        .def_readonly("alpha", &PortraitPoint::alpha)
        .def_readonly("beta", &PortraitPoint::beta);

    py::class_<PhasePortrait>(m, "PhasePortrait")
        .def_readonly("points", &PhasePortrait::points)
        .def_readonly("burn_in", &PhasePortrait::burn_in)
        .def_readonly("n_steps", &PhasePortrait::n_steps)
        .def_readonly("skipped_meshpoints", &PhasePortrait::skipped_meshpoints);

    m.def("scan_polygon_phase_space", &scan_polygon_phase_space, py::arg("polygon"),
          py::arg("grid") = GridSpec{}, py::arg("n_steps") = 60, py::arg("burn_in") = 10,
          py::arg("policy") = StepPolicy{}, py::arg("n_threads") = 0);

    py::class_<PortraitCluster>(m, "PortraitCluster")
        .def_readonly("alpha", &PortraitCluster::alpha)
        .def_readonly("beta", &PortraitCluster::beta)
        .def_readonly("size", &PortraitCluster::size);

    m.def("portrait_clusters",
          [](const PhasePortrait& portrait, double tol) {
              return portrait_clusters(portrait.points, tol);
          },
          py::arg("portrait"), py::arg("tol"));

    m.def("read_polygon_file", &read_polygon_file);
    m.def("parse_polygon_text", [](const std::string& s) { return parse_polygon_text(s); });
    m.def("format_polygon_text", &format_polygon_text);
}
