#include "planechroma/geometry.hpp"
#include "planechroma/errors.hpp"

namespace planechroma {

using boost::multiprecision::abs;
using boost::multiprecision::cos;
using boost::multiprecision::sin;
using boost::multiprecision::sqrt;

Tolerance Tolerance::standard() { return of(boost::multiprecision::ldexp(Scalar(1), -60)); }

Tolerance Tolerance::of(const Scalar& eps2) {
    if (!(eps2 > 0)) fail(ErrorCode::InvalidInput, "tolerance must be positive");
    return Tolerance{eps2};
}

Scalar dist2(const Point& p, const Point& q) {
    Scalar dx = p.x - q.x;
    Scalar dy = p.y - q.y;
    return dx * dx + dy * dy;
}

Cmp cmp_dist2(const Point& p, const Point& q, const Scalar& target2, const Tolerance& tol) {
    Scalar diff = dist2(p, q) - target2;
    if (abs(diff) <= tol.eps2) return Cmp::EQUAL;
    return diff < 0 ? Cmp::BELOW : Cmp::ABOVE;
}

std::vector<Point> circle_intersect(const Point& c1, const Scalar& r1, const Point& c2, const Scalar& r2,
                                    const Tolerance& tol) {
    if (r1 < 0 || r2 < 0) fail(ErrorCode::PreconditionViolated, "negative radius");
    Scalar d2 = dist2(c1, c2);
    Scalar rr1 = r1 * r1;
    Scalar rr2 = r2 * r2;
    if (d2 <= tol.eps2) {
        if (abs(rr1 - rr2) <= tol.eps2) fail(ErrorCode::CoincidentCircles, "circles coincide");
        return {};
    }
    Scalar d = sqrt(d2);
    Scalar a = (d2 + rr1 - rr2) / (2 * d);
    Scalar h2 = rr1 - a * a;
    Scalar ux = (c2.x - c1.x) / d;
    Scalar uy = (c2.y - c1.y) / d;
    Point base{c1.x + a * ux, c1.y + a * uy};
    if (abs(h2) <= tol.eps2) return {base};
    if (h2 < 0) return {};
    Scalar h = sqrt(h2);
    return {Point{base.x - h * uy, base.y + h * ux}, Point{base.x + h * uy, base.y - h * ux}};
}

Point third_vertex(const Point& a, const Point& b, Orientation orientation, const Tolerance& tol) {
    if (dist2(a, b) <= tol.eps2) fail(ErrorCode::DegenerateSegment, "segment endpoints coincide");
    Scalar angle = pi() / 3;
    if (orientation == Orientation::CW) angle = -angle;
    return rotate(b, a, angle);
}

Point rotate(const Point& p, const Point& center, const Scalar& angle) {
    Scalar c = cos(angle);
    Scalar s = sin(angle);
    Scalar dx = p.x - center.x;
    Scalar dy = p.y - center.y;
    return Point{center.x + c * dx - s * dy, center.y + s * dx + c * dy};
}

}  // namespace planechroma
