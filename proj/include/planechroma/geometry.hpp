#pragma once

#include "planechroma/scalar.hpp"

#include <vector>

namespace planechroma {

struct Point {
    Scalar x;
    Scalar y;
};

// Absolute tolerance on squared distances.
struct Tolerance {
    Scalar eps2;
    static Tolerance standard();  // 2^-60
    static Tolerance of(const Scalar& eps2);
};

enum class Cmp { BELOW, EQUAL, ABOVE };
enum class Orientation { CCW, CW };

Scalar dist2(const Point& p, const Point& q);
Cmp cmp_dist2(const Point& p, const Point& q, const Scalar& target2, const Tolerance& tol);

// Throws CoincidentCircles when the circles coincide within tol.
std::vector<Point> circle_intersect(const Point& c1, const Scalar& r1, const Point& c2, const Scalar& r2,
                                    const Tolerance& tol);

// Throws DegenerateSegment when a and b coincide within tol.
Point third_vertex(const Point& a, const Point& b, Orientation orientation,
                   const Tolerance& tol = Tolerance::standard());

Point rotate(const Point& p, const Point& center, const Scalar& angle);

}  // namespace planechroma
