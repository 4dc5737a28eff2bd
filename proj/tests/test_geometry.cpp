#include <doctest.h>

#include <cmath>

#include "shapeflow/geometry.hpp"
#include "test_helpers.hpp"

using namespace shapeflow;
using namespace shapeflow::testing;

namespace {
const double kSqrt2 = std::sqrt(2.0);
}

TEST_CASE("make_convex_polygon basics") {
    const ConvexPolygon tri = ConvexPolygon::make({{0, 0}, {1, 0}, {0, 1}});
    CHECK(tri.size() == 3);
    CHECK(tri.area() == doctest::Approx(0.5).epsilon(1e-14));

    const ConvexPolygon square =
        ConvexPolygon::make({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}});
    CHECK(square.size() == 4);  // interior point dropped
    CHECK(square.area() == doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(ConvexPolygon::make({{0, 0}, {1, 1}, {2, 2}}), DegenerateInput);
    CHECK_THROWS_AS(ConvexPolygon::make({{0, 0}, {1, 1}}), DegenerateInput);
    CHECK_THROWS_AS(ConvexPolygon::make({{0, 0}, {0, 0}, {0, 0}, {0, 0}}), DegenerateInput);
}

TEST_CASE("construction is counterclockwise, starts at lex-min, idempotent") {
    Rng rng(7001);
    for (int trial = 0; trial < 50; ++trial) {
        const ConvexPolygon poly = random_polygon(rng);
        CHECK(poly.area() > 0.0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            CHECK(poly.edge(i).cross(poly.edge(i + 1)) > 0.0);
            if (i > 0) {
                const bool lex_min_first = poly[0].x < poly[i].x ||
                                           (poly[0].x == poly[i].x && poly[0].y < poly[i].y);
                CHECK(lex_min_first);
            }
        }
        const ConvexPolygon rebuilt = ConvexPolygon::make(poly.vertices());
        REQUIRE(rebuilt.size() == poly.size());
        for (std::size_t i = 0; i < poly.size(); ++i) {
            CHECK(rebuilt[i].x == poly[i].x);
            CHECK(rebuilt[i].y == poly[i].y);
        }
    }
}

TEST_CASE("support function") {
    const ConvexPolygon square = axis_rectangle(1, 1);
    CHECK(support(square, {1, 0}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(support(square, {-1, 0}) == doctest::Approx(0.0).epsilon(1e-15));

    const ConvexPolygon tri = ConvexPolygon::make({{0, 0}, {1, 0}, {0, 1}});
    const double inv_sqrt2 = 1.0 / kSqrt2;
    CHECK(support(tri, {inv_sqrt2, inv_sqrt2}) == doctest::Approx(inv_sqrt2).epsilon(1e-14));
}

TEST_CASE("width") {
    const ConvexPolygon square = axis_rectangle(1, 1);
    CHECK(width(square, Direction(0)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(width(square, Direction(kPi / 4)) == doctest::Approx(kSqrt2).epsilon(1e-14));

    const ConvexPolygon tri = ConvexPolygon::make({{0, 0}, {1, 0}, {0, 1}});
    CHECK(width(tri, Direction(kPi / 4)) == doctest::Approx(1.0 / kSqrt2).epsilon(1e-14));

    Rng rng(7002);
    for (int trial = 0; trial < 20; ++trial) {
        const ConvexPolygon poly = random_polygon(rng);
        for (int k = 0; k < 10; ++k) {
            const double theta = uniform(rng, 0, 10 * kPi);
            CHECK(width(poly, Direction(theta)) ==
                  doctest::Approx(width(poly, Direction(theta + kPi))).epsilon(1e-13));
        }
    }
}

TEST_CASE("central symmetral has the same width function") {
    Rng rng(7003);
    for (int trial = 0; trial < 20; ++trial) {
        const ConvexPolygon poly = random_polygon(rng);
        const ConvexPolygon sym = central_symmetral(poly);
        for (int k = 0; k < 40; ++k) {
            const Direction d(uniform(rng, 0, kPi));
            CHECK(std::abs(width(sym, d) - width(poly, d)) < 1e-12 * poly.scale());
        }
    }
}

TEST_CASE("longest chord") {
    const ConvexPolygon square = axis_rectangle(1, 1);
    CHECK(longest_chord_length(square, Direction(0)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(longest_chord_length(square, Direction(kPi / 4)) ==
          doctest::Approx(kSqrt2).epsilon(1e-14));

    // For a triangle, chord length is a tent function of the offset, so
    // max-chord times the transverse width equals twice the area.
    Rng rng(7004);
    for (int trial = 0; trial < 200; ++trial) {
        const ConvexPolygon tri = random_triangle(rng);
        const Direction d(uniform(rng, 0, kPi));
        const double lhs = longest_chord_length(tri, d) * width(tri, d.perp());
        CHECK(lhs == doctest::Approx(2.0 * tri.area()).epsilon(1e-10));
    }

    // A chord never exceeds the width in its own direction.
    for (int trial = 0; trial < 50; ++trial) {
        const ConvexPolygon poly = random_polygon(rng);
        const Direction d(uniform(rng, 0, kPi));
        CHECK(longest_chord_length(poly, d) <= width(poly, d) + 1e-12);
    }
}

TEST_CASE("longest chord of an origin-symmetric polygon passes through the origin") {
    Rng rng(7005);
    for (int trial = 0; trial < 50; ++trial) {
        const ConvexPolygon sym = central_symmetral(random_polygon(rng));
        const Direction d(uniform(rng, 0, kPi));
        const double through_origin = chord_length_at_offset(sym, d, 0.0);
        CHECK(longest_chord_length(sym, d) <= through_origin + 1e-12 * sym.scale());
    }
}

TEST_CASE("diameter equals the maximal width") {
    const ConvexPolygon square = axis_rectangle(1, 1);
    CHECK(square.diameter() == doctest::Approx(kSqrt2).epsilon(1e-14));
    const ConvexPolygon tri = ConvexPolygon::make({{0, 0}, {1, 0}, {0, 1}});
    CHECK(tri.diameter() == doctest::Approx(kSqrt2).epsilon(1e-14));
    const double x = 0.43016;
    const ConvexPolygon slanted = ConvexPolygon::make({{0, 0}, {1, 0}, {x, 1}});
    CHECK(slanted.diameter() == doctest::Approx(std::hypot(1.0 - x, 1.0)).epsilon(1e-14));

    Rng rng(7006);
    for (int trial = 0; trial < 10; ++trial) {
        const ConvexPolygon poly = random_polygon(rng);
        double max_width = 0.0;
        const int grid = 100000;
        for (int k = 0; k < grid; ++k)
            max_width = std::max(max_width, width(poly, Direction(kPi * k / grid)));
        CHECK(poly.diameter() == doctest::Approx(max_width).epsilon(1e-9));
    }
}

TEST_CASE("area") {
    Rng rng(7007);
    for (int trial = 0; trial < 20; ++trial) {
        const double x = uniform(rng, -2, 2);
        const ConvexPolygon tri = ConvexPolygon::make({{0, 0}, {1, 0}, {x, 1}});
        CHECK(tri.area() == doctest::Approx(0.5).epsilon(1e-13));
    }
}

TEST_CASE("central symmetral of a triangle") {
    Rng rng(7008);
    for (int trial = 0; trial < 20; ++trial) {
        const double x = uniform(rng, 0.05, 0.5);
        const ConvexPolygon tri = ConvexPolygon::make({{0, 0}, {1, 0}, {x, 1}});
        const ConvexPolygon sym = central_symmetral(tri);
        REQUIRE(sym.size() == 6);
        const ConvexPolygon expected = ConvexPolygon::make({{0.5, 0},
                                                            {x / 2, 0.5},
                                                            {(x - 1) / 2, 0.5},
                                                            {-0.5, 0},
                                                            {-x / 2, -0.5},
                                                            {(1 - x) / 2, -0.5}});
        CHECK(same_vertex_set(sym, expected, 1e-12));
    }
}

TEST_CASE("central symmetral of a square is the centered square") {
    const ConvexPolygon square = axis_rectangle(1, 1, {3.25, -7.5});
    const ConvexPolygon sym = central_symmetral(square);
    CHECK(same_vertex_set(sym, axis_rectangle(1, 1, {-0.5, -0.5}), 1e-12));
}

TEST_CASE("central symmetral matches the pairwise-difference oracle") {
    Rng rng(7009);
    for (int trial = 0; trial < 50; ++trial) {
        const ConvexPolygon poly = random_polygon(rng);
        CHECK(same_vertex_set(central_symmetral(poly), symmetral_oracle(poly),
                              1e-12 * poly.scale()));
    }
}

TEST_CASE("fourfold symmetry") {
    CHECK(has_fourfold_symmetry(axis_rectangle(1, 1, {-0.5, -0.5}), 1e-9));
    CHECK_FALSE(has_fourfold_symmetry(axis_rectangle(1, 2, {-0.5, -1}), 1e-9));
    CHECK(has_fourfold_symmetry(regular_polygon(8), 1e-9));
    CHECK_FALSE(has_fourfold_symmetry(regular_polygon(6), 1e-9));
    CHECK_THROWS_AS(has_fourfold_symmetry(axis_rectangle(1, 1), 1e-9), NotOriginSymmetric);
}
