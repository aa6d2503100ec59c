#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "planechroma/embeddings.hpp"
#include "planechroma/errors.hpp"
#include "planechroma/geometry.hpp"

#include <random>

using namespace planechroma;
using boost::multiprecision::sqrt;

namespace {

const Tolerance kTol = Tolerance::standard();

bool near(const Point& p, const Point& q, const Scalar& eps2 = Tolerance::standard().eps2) {
    return dist2(p, q) <= eps2;
}

Point random_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-3, 3);
    return {Scalar(u(rng)), Scalar(u(rng))};
}

}  // namespace

TEST_CASE("scalar precision meets the 100-bit floor") {
    CHECK(precision_bits() >= 100);
    CHECK(boost::multiprecision::abs(sqrt(Scalar(2)) * sqrt(Scalar(2)) - 2) < Scalar("1e-35"));
}

TEST_CASE("dist2 examples") {
    CHECK(dist2({0, 0}, {1, 0}) == 1);
    CHECK(dist2({0, 0}, {0, 0}) == 0);
    // Graph-16 points A and C
    const Scalar d = dist2({Scalar(-1) / 2, 0}, {0, sqrt(Scalar(11) / 4)});
    CHECK(boost::multiprecision::abs(d - 3) < Scalar("1e-36"));
}

TEST_CASE("cmp_dist2 examples") {
    CHECK(cmp_dist2({0, 0}, {1, 0}, 1, kTol) == Cmp::EQUAL);
    CHECK(cmp_dist2({0, 0}, {2, 0}, 1, kTol) == Cmp::ABOVE);
    CHECK(cmp_dist2({0, 0}, {Scalar("0.5"), 0}, 1, kTol) == Cmp::BELOW);
    const auto g16 = catalog("schade-16");
    CHECK(cmp_dist2(g16.embedding.points[3], g16.embedding.points[4], 1, kTol) == Cmp::EQUAL);
}

TEST_CASE("circle_intersect examples") {
    const auto two = circle_intersect({0, 0}, 1, {1, 0}, 1, kTol);
    REQUIRE(two.size() == 2);
    CHECK(near(two[0], {Scalar(1) / 2, sqrt(Scalar(3)) / 2}));
    CHECK(near(two[1], {Scalar(1) / 2, -sqrt(Scalar(3)) / 2}));
    CHECK(circle_intersect({0, 0}, 1, {3, 0}, 1, kTol).empty());
    const auto one = circle_intersect({0, 0}, 1, {2, 0}, 1, kTol);
    REQUIRE(one.size() == 1);
    CHECK(near(one[0], {1, 0}));
    CHECK_THROWS_AS(circle_intersect({0, 0}, 1, {0, 0}, 1, kTol), Error);
    CHECK(circle_intersect({0, 0}, 1, {0, 0}, 2, kTol).empty());
    const auto inner = circle_intersect({0, 0}, 3, {2, 0}, 1, kTol);  // internal tangency
    REQUIRE(inner.size() == 1);
    CHECK(near(inner[0], {3, 0}));
}

TEST_CASE("third_vertex examples") {
    const Point a{0, 0}, b{1, 0};
    CHECK(near(third_vertex(a, b, Orientation::CCW), {Scalar(1) / 2, sqrt(Scalar(3)) / 2}));
    CHECK(near(third_vertex(a, b, Orientation::CW), {Scalar(1) / 2, -sqrt(Scalar(3)) / 2}));
    // rhombus: completing (c, b) away from a lands at distance sqrt(3) from a
    const Point c = third_vertex(a, b, Orientation::CCW);
    CHECK(near(third_vertex(c, b, Orientation::CW), a));
    const Point d = third_vertex(c, b, Orientation::CCW);
    CHECK(cmp_dist2(a, d, 3, kTol) == Cmp::EQUAL);
    try {
        third_vertex(a, a, Orientation::CCW);
        FAIL("expected DegenerateSegment");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegenerateSegment);
    }
}

TEST_CASE("rotate examples") {
    CHECK(near(rotate({1, 0}, {0, 0}, pi() / 2), {0, 1}));
    const Point p{Scalar("0.3"), Scalar("-1.7")};
    CHECK(near(rotate(p, {2, 5}, 0), p));
    // spindle: D = (sqrt3, 0) rotated about A by 2 arcsin(1/(2 sqrt3)) lands at distance 1 from D
    const Point dtip{sqrt(Scalar(3)), 0};
    const Scalar angle = 2 * boost::multiprecision::asin(1 / (2 * sqrt(Scalar(3))));
    CHECK(cmp_dist2(dtip, rotate(dtip, {0, 0}, angle), 1, kTol) == Cmp::EQUAL);
}

TEST_CASE("property: dist2 symmetry and triangle inequality") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        const Point p = random_point(rng), q = random_point(rng), r = random_point(rng);
        CHECK(dist2(p, q) == dist2(q, p));
        CHECK(sqrt(dist2(p, r)) <= sqrt(dist2(p, q)) + sqrt(dist2(q, r)) + 10 * kTol.eps2);
    }
}

TEST_CASE("property: circle_intersect is symmetric in its circles") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> radius(0.1, 3);
    for (int i = 0; i < 500; ++i) {
        const Point c1 = random_point(rng), c2 = random_point(rng);
        const Scalar r1(radius(rng)), r2(radius(rng));
        const auto a = circle_intersect(c1, r1, c2, r2, kTol);
        const auto b = circle_intersect(c2, r2, c1, r1, kTol);
        REQUIRE(a.size() == b.size());
        for (const auto& p : a) {
            bool found = false;
            for (const auto& q : b) found = found || near(p, q, Scalar("1e-30"));
            CHECK(found);
            CHECK(cmp_dist2(p, c1, r1 * r1, Tolerance::of(Scalar("1e-30"))) == Cmp::EQUAL);
            CHECK(cmp_dist2(p, c2, r2 * r2, Tolerance::of(Scalar("1e-30"))) == Cmp::EQUAL);
        }
    }
}

TEST_CASE("property: rotation round trip and reflected completions") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> ang(-7, 7);
    for (int i = 0; i < 500; ++i) {
        const Point p = random_point(rng), c = random_point(rng);
        const Scalar alpha(ang(rng));
        const Point back = rotate(rotate(p, c, alpha), c, -alpha);
        CHECK(near(back, p));
        CHECK(boost::multiprecision::abs(dist2(rotate(p, c, alpha), c) - dist2(p, c)) <= kTol.eps2);

        const Point a = random_point(rng), b = random_point(rng);
        if (dist2(a, b) < Scalar("1e-6")) continue;
        const Point l = third_vertex(a, b, Orientation::CCW);
        const Point r = third_vertex(a, b, Orientation::CW);
        const Point mid{(l.x + r.x) / 2, (l.y + r.y) / 2};
        // midpoint of the two completions lies on line ab
        const Scalar cross = (b.x - a.x) * (mid.y - a.y) - (b.y - a.y) * (mid.x - a.x);
        CHECK(boost::multiprecision::abs(cross) < Scalar("1e-30"));
        CHECK(cmp_dist2(l, a, dist2(a, b), kTol) == Cmp::EQUAL);
        CHECK(cmp_dist2(l, b, dist2(a, b), kTol) == Cmp::EQUAL);
    }
}

TEST_CASE("tolerance must be positive") {
    CHECK_THROWS_AS(Tolerance::of(0), Error);
    CHECK(Tolerance::standard().eps2 == boost::multiprecision::ldexp(Scalar(1), -60));
}
