#include "shapeflow/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace shapeflow {

namespace {

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

double to_deg(double rad) { return rad * 180.0 / kPi; }

// Parameter of a triangle's similarity class. States produced by the
// squash dynamics sit in the unit altitude/base family, where this is the
// same x the scalar map iterates; other triangles fall back to the
// altitude-foot ratio on a longest side, reflected into (0, 1/2].
double triangle_class_parameter(const ConvexPolygon& tri) {
    try {
        return triangle_param(tri, 1.0).x;
    } catch (const NotInCanonicalFamily&) {
    }
    std::size_t longest = 0;
    for (std::size_t i = 1; i < 3; ++i)
        if (tri.edge(i).norm_sq() > tri.edge(longest).norm_sq()) longest = i;
    const Vec2 e = tri.edge(longest);
    double x = (tri.vertex(longest + 2) - tri.vertex(longest)).dot(e) / e.norm_sq();
    return x > 0.5 ? 1.0 - x : x;
}

struct Frame {
    double xmin, xmax, ymin, ymax;
};

Frame frame_of(const std::vector<Vec2>& pts) {
    Frame f{pts[0].x, pts[0].x, pts[0].y, pts[0].y};
    for (const Vec2& p : pts) {
        f.xmin = std::min(f.xmin, p.x);
        f.xmax = std::max(f.xmax, p.x);
        f.ymin = std::min(f.ymin, p.y);
        f.ymax = std::max(f.ymax, p.y);
    }
    return f;
}

// The single y-up to y-down flip: mathematical (x, y) is emitted as
// (x, -y) and the viewBox is adjusted to match.
std::string path_element(const ConvexPolygon& poly, const char* stroke) {
    std::string d;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        d += (i == 0 ? "M " : "L ");
        d += fmt("%.6g", poly[i].x) + ' ' + fmt("%.6g", -poly[i].y) + ' ';
    }
    d += 'Z';
    return "  <path d=\"" + d + "\" fill=\"none\" stroke=\"" + stroke +
           "\" stroke-width=\"0.01\"/>\n";
}

std::string svg_open(double xmin, double ymin, double w, double h) {
    std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" +
         fmt("%.6g", xmin) + ' ' + fmt("%.6g", ymin) + ' ' + fmt("%.6g", w) + ' ' +
         fmt("%.6g", h) + "\">\n";
    return s;
}

}  // namespace

ConvexPolygon parse_polygon_text(std::string_view text) {
    std::vector<Vec2> pts;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream row(line);
        double x, y;
        if (row >> x >> y) {
            std::string rest;
            if (row >> rest)
                throw ParseError("line " + std::to_string(lineno) + ": trailing junk");
            pts.push_back({x, y});
        } else {
            std::string rest;
            row.clear();
            row.seekg(0);
            if (row >> rest)
                throw ParseError("line " + std::to_string(lineno) + ": expected 'x y'");
        }
    }
    if (pts.size() < 3) throw ParseError("polygon file needs at least 3 vertices");
    return ConvexPolygon::make(std::move(pts));
}

ConvexPolygon parse_polygon_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_array()) throw ParseError("expected a JSON array of [x, y] pairs");
    std::vector<Vec2> pts;
    for (const auto& item : doc) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number())
            throw ParseError("expected a JSON array of [x, y] pairs");
        pts.push_back({item[0].get<double>(), item[1].get<double>()});
    }
    if (pts.size() < 3) throw ParseError("polygon needs at least 3 vertices");
    return ConvexPolygon::make(std::move(pts));
}

ConvexPolygon read_polygon_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError(path + " is empty");
    return text[first] == '[' ? parse_polygon_json(text) : parse_polygon_text(text);
}

std::string format_polygon_text(const ConvexPolygon& poly) {
    std::string out;
    for (const Vec2& v : poly.vertices())
        out += fmt("%.17g", v.x) + ' ' + fmt("%.17g", v.y) + '\n';
    return out;
}

std::string orbit_csv(const Orbit& orb, const CycleReport& cycle, double lambda) {
    std::string out = "step,x_or_alpha,beta,diameter_pre_norm,min_ratio,rect_multiplicity,"
                      "dist_to_prev\n";
    for (std::size_t k = 0; k < orb.states.size(); ++k) {
        const ConvexPolygon& rep = orb.states[k].rep;
        const InscribedTriangle tri = max_area_inscribed_triangle(rep);
        const double x_or_alpha =
            rep.size() == 3 ? triangle_class_parameter(rep) : to_deg(tri.alpha);

        double diameter_pre_norm = 1.0;
        if (k > 0) {
            const ConvexPolygon& prev = orb.states[k - 1].rep;
            const ExtremalSet es = extremal_rectangles(prev);
            diameter_pre_norm =
                apply_map(lambda_map(es.rects.front(), lambda), prev).diameter();
        }
        const double min_ratio = extremal_rectangles(rep).min_ratio;
        const double dist_to_prev =
            k > 0 ? shape_distance(orb.states[k - 1].rep, rep) : 0.0;

        out += std::to_string(k) + ',' + fmt("%.9g", x_or_alpha) + ',' +
               fmt("%.9g", to_deg(tri.beta)) + ',' + fmt("%.9g", diameter_pre_norm) + ',' +
               fmt("%.9g", min_ratio) + ',' + std::to_string(orb.rect_multiplicity[k]) + ',' +
               fmt("%.9g", dist_to_prev) + '\n';
    }
    out += "# cycle_found=" + std::string(cycle.found ? "1" : "0") + '\n';
    if (cycle.found) {
        out += "# period=" + std::to_string(cycle.period) + '\n';
        out += "# onset=" + std::to_string(cycle.onset) + '\n';
        out += "# residual=" + fmt("%.9g", cycle.residual) + '\n';
    }
    return out;
}

std::string portrait_csv(const PhasePortrait& portrait) {
    std::string out = "mesh_alpha,mesh_beta,orbit_index,step,alpha,beta\n";
    for (const PortraitPoint& p : portrait.points) {
        out += fmt("%.9g", to_deg(p.mesh_alpha)) + ',' + fmt("%.9g", to_deg(p.mesh_beta)) + ',' +
               std::to_string(p.orbit_index) + ',' + std::to_string(p.step) + ',' +
               fmt("%.9g", to_deg(p.alpha)) + ',' + fmt("%.9g", to_deg(p.beta)) + '\n';
    }
    return out;
}

std::string triangle_map_csv(const std::vector<double>& xs, double x0) {
    std::string out = "step,x,abs_err\n";
    for (std::size_t k = 0; k < xs.size(); ++k) {
        out += std::to_string(k) + ',' + fmt("%.17g", xs[k]) + ',' +
               fmt("%.9g", std::abs(xs[k] - x0)) + '\n';
    }
    return out;
}

std::string svg_polygon_strip(const std::vector<ConvexPolygon>& polys) {
    // Each shape sits in its own unit cell, scaled by its own frame.
    const double cell = 1.2;
    std::string body;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        const Frame f = frame_of(polys[i].vertices());
        const double span = std::max(f.xmax - f.xmin, f.ymax - f.ymin);
        const double s = 1.0 / span;
        std::vector<Vec2> placed;
        placed.reserve(polys[i].size());
        for (const Vec2& v : polys[i].vertices())
            placed.push_back({(v.x - f.xmin) * s + cell * static_cast<double>(i) + 0.1,
                              (v.y - f.ymin) * s + 0.1});
        body += path_element(ConvexPolygon::make(std::move(placed)), "black");
    }
    std::string out = svg_open(0, -cell, cell * static_cast<double>(polys.size()), cell);
    out += body;
    out += "</svg>\n";
    return out;
}

std::string svg_polygon_with_rects(const ConvexPolygon& poly,
                                   const std::vector<CircumRect>& rects) {
    std::vector<Vec2> all(poly.vertices());
    std::string body = path_element(poly, "black");
    for (const CircumRect& r : rects) {
        all.insert(all.end(), r.corners.begin(), r.corners.end());
        body += path_element(ConvexPolygon::make({r.corners.begin(), r.corners.end()}), "red");
    }
    Frame f = frame_of(all);
    const double margin = 0.05 * std::max(f.xmax - f.xmin, f.ymax - f.ymin);
    std::string out = svg_open(f.xmin - margin, -f.ymax - margin,
                               f.xmax - f.xmin + 2 * margin, f.ymax - f.ymin + 2 * margin);
    out += body;
    out += "</svg>\n";
    return out;
}

std::string svg_portrait_scatter(const PhasePortrait& portrait) {
    std::string out = svg_open(0, -180, 180, 180);
    out += "  <rect x=\"0\" y=\"-180\" width=\"180\" height=\"180\" fill=\"white\"/>\n";
    for (const PortraitPoint& p : portrait.points) {
        out += "  <circle cx=\"" + fmt("%.6g", to_deg(p.alpha)) + "\" cy=\"" +
               fmt("%.6g", -to_deg(p.beta)) + "\" r=\"0.6\" fill=\"black\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

void write_file(const std::string& path, std::string_view content) {
    const std::filesystem::path parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(parent, ec);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
    if (!out) throw Error("failed writing " + path);
}

}  // namespace shapeflow
