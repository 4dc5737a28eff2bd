#include <doctest.h>

#include <sstream>
#include <string>

#include "shapeflow/io.hpp"
#include "shapeflow/triangle_flow.hpp"
#include "test_helpers.hpp"

using namespace shapeflow;
using namespace shapeflow::testing;

namespace {

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
    std::size_t count = 0, pos = 0;
    while ((pos = hay.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

}  // namespace

TEST_CASE("polygon text parsing") {
    const ConvexPolygon poly = parse_polygon_text("# a comment\n0 0\n1 0  # inline\n\n0.5 1\n");
    CHECK(poly.size() == 3);
    CHECK_THROWS_AS(parse_polygon_text("0 0\n1 junk\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_polygon_text("0 0\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_polygon_text("0 0 7\n1 0\n0 1\n"), ParseError);
}

TEST_CASE("polygon JSON parsing") {
    const ConvexPolygon poly = parse_polygon_json("[[0,0],[1,0],[1,1],[0,1]]");
    CHECK(poly.size() == 4);
    CHECK_THROWS_AS(parse_polygon_json("{\"a\": 1}"), ParseError);
    CHECK_THROWS_AS(parse_polygon_json("[[0,0],[1]]"), ParseError);
    CHECK_THROWS_AS(parse_polygon_json("[[0,0],[1,\"x\"],[0,1]]"), ParseError);
    CHECK_THROWS_AS(parse_polygon_json("not json"), ParseError);
}

TEST_CASE("text format round trip") {
    Rng rng(7701);
    for (int trial = 0; trial < 20; ++trial) {
        const ConvexPolygon poly = random_polygon(rng);
        const ConvexPolygon back = parse_polygon_text(format_polygon_text(poly));
        REQUIRE(back.size() == poly.size());
        for (std::size_t i = 0; i < poly.size(); ++i) {
            CHECK(back[i].x == poly[i].x);
            CHECK(back[i].y == poly[i].y);
        }
    }
}

TEST_CASE("orbit CSV layout") {
    const Orbit orb = orbit(ConvexPolygon::make({{0, 0}, {1, 0}, {0.1, 1}}), 50);
    const CycleReport cycle = detect_cycle(orb, 25, 12, 1e-6);
    const std::string csv = orbit_csv(orb, cycle);
    CHECK(csv.rfind("step,x_or_alpha,beta,", 0) == 0);
    CHECK(count_occurrences(csv, "\n") >= 52);
    CHECK(csv.find("# cycle_found=1") != std::string::npos);
    CHECK(csv.find("# period=1") != std::string::npos);

    const std::string again = orbit_csv(orb, cycle);
    CHECK(csv == again);

    // For triangle orbits the second column is the scalar parameter.
    std::istringstream rows(csv);
    std::string line;
    std::getline(rows, line);  // header
    double expect = 0.1;
    while (std::getline(rows, line) && line[0] != '#') {
        const auto first_comma = line.find(',');
        const double column = std::stod(line.substr(first_comma + 1));
        CHECK(std::abs(column - expect) < 1e-8);
        expect = triangle_map(expect);
    }
}

TEST_CASE("portrait CSV layout") {
    GridSpec grid;
    grid.alpha_min_deg = 30;
    grid.alpha_max_deg = 60;
    grid.beta_min_deg = 30;
    grid.beta_max_deg = 120;
    grid.spacing_deg = 30;
    const PhasePortrait portrait =
        scan_polygon_phase_space(ConvexPolygon::make({{0, 0}, {1, 0}, {0.2, 0.9}}), grid, 8, 5);
    const std::string csv = portrait_csv(portrait);
    CHECK(csv.rfind("mesh_alpha,mesh_beta,orbit_index,step,alpha,beta\n", 0) == 0);
    CHECK(count_occurrences(csv, "\n") == portrait.points.size() + 1);
}

TEST_CASE("SVG emitters produce one path per polygon") {
    Rng rng(7702);
    std::vector<ConvexPolygon> shapes;
    for (int i = 0; i < 5; ++i) shapes.push_back(random_polygon(rng));
    const std::string strip = svg_polygon_strip(shapes);
    CHECK(strip.rfind("<?xml", 0) == 0);
    CHECK(count_occurrences(strip, "<path") == 5);
    CHECK(count_occurrences(strip, "</svg>") == 1);

    const ConvexPolygon tri = ConvexPolygon::make({{0, 0}, {1, 0}, {0, 1}});
    const ExtremalSet set = extremal_rectangles(tri);
    const std::string render = svg_polygon_with_rects(tri, set.rects);
    CHECK(count_occurrences(render, "<path") == 1 + set.rects.size());

    GridSpec grid;
    grid.alpha_min_deg = 30;
    grid.alpha_max_deg = 60;
    grid.beta_min_deg = 30;
    grid.beta_max_deg = 120;
    grid.spacing_deg = 30;
    const PhasePortrait portrait = scan_polygon_phase_space(tri, grid, 8, 6);
    const std::string scatter = svg_portrait_scatter(portrait);
    CHECK(scatter.rfind("<?xml", 0) == 0);
    CHECK(count_occurrences(scatter, "<circle") == portrait.points.size());
}
