#include <doctest.h>

#include <cmath>

#include "shapeflow/affinity.hpp"
#include "shapeflow/shape_class.hpp"
#include "test_helpers.hpp"

using namespace shapeflow;
using namespace shapeflow::testing;

TEST_CASE("squash map of a square rectangle is the identity") {
    const CircumRect rect = circumscribed_rectangle(axis_rectangle(1, 1), Direction(0));
    const AffineMap m = squash_map(rect);
    CHECK(m.linear.m00 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(m.linear.m11 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(m.linear.m01) < 1e-12);
    CHECK(std::abs(m.linear.m10) < 1e-12);
}

TEST_CASE("squash map turns its rectangle into a square of side a") {
    // Axis-aligned case first: long sides vertical, (x, y) -> (x, y/2).
    const CircumRect tall = circumscribed_rectangle(axis_rectangle(1, 2), Direction(0));
    const AffineMap m = squash_map(tall);
    CHECK(m.linear.m00 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(m.linear.m11 == doctest::Approx(0.5).epsilon(1e-14));

    Rng rng(7201);
    for (int trial = 0; trial < 100; ++trial) {
        const ConvexPolygon poly = random_polygon(rng);
        const CircumRect rect =
            circumscribed_rectangle(poly, Direction(uniform(rng, 0, kPi)));
        const AffineMap squash = squash_map(rect);
        CHECK(squash.translation.norm() == 0.0);
        CHECK(squash.det() == doctest::Approx(rect.ratio()).epsilon(1e-13));

        Vec2 img[4];
        for (int i = 0; i < 4; ++i) img[i] = squash(rect.corners[i]);
        for (int i = 0; i < 4; ++i) {
            const double side = (img[(i + 1) % 4] - img[i]).norm();
            CHECK(side == doctest::Approx(rect.a).epsilon(1e-10));
        }
        CHECK(std::abs((img[1] - img[0]).dot(img[3] - img[0])) < 1e-10 * rect.b * rect.b);
    }
}

TEST_CASE("lambda map at lambda=1 is the squash map") {
    Rng rng(7202);
    for (int trial = 0; trial < 50; ++trial) {
        const CircumRect rect =
            circumscribed_rectangle(random_polygon(rng), Direction(uniform(rng, 0, kPi)));
        const AffineMap a = squash_map(rect), b = lambda_map(rect, 1.0);
        CHECK(a.linear.m00 == b.linear.m00);
        CHECK(a.linear.m01 == b.linear.m01);
        CHECK(a.linear.m10 == b.linear.m10);
        CHECK(a.linear.m11 == b.linear.m11);
    }
}

TEST_CASE("lambda map sends its rectangle to an a x a/lambda rectangle") {
    Rng rng(7203);
    for (int trial = 0; trial < 100; ++trial) {
        const CircumRect rect =
            circumscribed_rectangle(random_polygon(rng), Direction(uniform(rng, 0, kPi)));
        const double lambda = uniform(rng, 0.3, 3.0);
        const AffineMap m = lambda_map(rect, lambda);
        Vec2 img[4];
        for (int i = 0; i < 4; ++i) img[i] = m(rect.corners[i]);
        double lo = 1e300, hi = 0.0;
        for (int i = 0; i < 4; ++i) {
            const double side = (img[(i + 1) % 4] - img[i]).norm();
            lo = std::min(lo, side);
            hi = std::max(hi, side);
        }
        CHECK(lo == doctest::Approx(std::min(rect.a, rect.a / lambda)).epsilon(1e-10));
        CHECK(hi == doctest::Approx(std::max(rect.a, rect.a / lambda)).epsilon(1e-10));
    }
    CHECK_THROWS_AS(
        lambda_map(circumscribed_rectangle(axis_rectangle(1, 2), Direction(0)), 0.0),
        InvalidParameter);
    CHECK_THROWS_AS(
        lambda_map(circumscribed_rectangle(axis_rectangle(1, 2), Direction(0)), -2.0),
        InvalidParameter);
}

TEST_CASE("lambda map at sqrt(3)/2 fixes the equilateral triangle's class") {
    const double s3 = std::sqrt(3.0) / 2;
    const ConvexPolygon tri = ConvexPolygon::make({{0, 0}, {1, 0}, {0.5, s3}});
    const ExtremalSet set = extremal_rectangles(tri);
    for (const CircumRect& rect : set.rects) {
        const ConvexPolygon img = apply_map(lambda_map(rect, s3), tri);
        CHECK(shape_distance(img, tri) < 1e-7);
    }
}

TEST_CASE("apply_map: identity, area scaling, orientation repair") {
    Rng rng(7204);
    for (int trial = 0; trial < 100; ++trial) {
        const ConvexPolygon poly = random_polygon(rng);
        const ConvexPolygon same = apply_map(AffineMap::identity(), poly);
        REQUIRE(same.size() == poly.size());
        for (std::size_t i = 0; i < poly.size(); ++i) {
            CHECK(same[i].x == poly[i].x);
            CHECK(same[i].y == poly[i].y);
        }

        AffineMap m;
        do {
            m.linear = {uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, -2, 2),
                        uniform(rng, -2, 2)};
        } while (std::abs(m.det()) < 0.1);
        m.translation = random_point(rng);
        const ConvexPolygon img = apply_map(m, poly);
        CHECK(img.area() ==
              doctest::Approx(std::abs(m.det()) * poly.area()).epsilon(1e-10));
        CHECK(img.area() > 0.0);  // re-oriented when det < 0
    }
}

TEST_CASE("squashing the right triangle squares its hypotenuse rectangle") {
    const ConvexPolygon tri = ConvexPolygon::make({{0, 0}, {1, 0}, {0, 1}});
    const ExtremalSet set = extremal_rectangles(tri);
    const ConvexPolygon img = apply_map(squash_map(set.rects[0]), tri);
    const CircumRect after = circumscribed_rectangle(img, set.rects[0].direction);
    CHECK(after.ratio() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("normalize centers and rescales") {
    Rng rng(7205);
    for (int trial = 0; trial < 50; ++trial) {
        const ConvexPolygon poly = random_polygon(rng);
        const ConvexPolygon n = normalize(poly);
        CHECK(n.centroid().norm() < 1e-12);
        CHECK(n.diameter() == doctest::Approx(1.0).epsilon(1e-12));
        const ConvexPolygon again = normalize(n);
        for (std::size_t i = 0; i < n.size(); ++i)
            CHECK((again[i] - n[i]).norm() < 1e-12);
    }
    const ConvexPolygon scaled =
        ConvexPolygon::make({{0, 0}, {5, 0}, {1.3, 2.1}});
    CHECK(normalize(scaled).diameter() == doctest::Approx(1.0).epsilon(1e-12));
}
