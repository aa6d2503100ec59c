#include "planechroma/coloring.hpp"
#include "planechroma/errors.hpp"
#include "rng.hpp"

#include <array>
#include <cmath>
#include <optional>

namespace planechroma {

using boost::multiprecision::sqrt;

// Flat-top hexagons of side s. Centers form the lattice a*u + b*v with
// u = sqrt(3) s (cos 30, sin 30) and v = sqrt(3) s (cos 150, sin 150).
// A cell owns the closed upper sides (normals at 30, 90, 150 degrees) and
// the open lower sides, so the two uppermost vertices belong to it.

namespace {

constexpr double kSqrt3 = 1.7320508075688772935;
// Relative margin below which the double-precision classification is not trusted.
constexpr double kFilterMargin = 1e-9;

long long mod7(long long x) { return ((x % 7) + 7) % 7; }

std::optional<HexCell> cell_double(double x, double y, double s) {
    const double alpha = x / (3 * s) + y / (kSqrt3 * s);
    const double beta = -x / (3 * s) + y / (kSqrt3 * s);
    const long long a0 = std::llround(alpha), b0 = std::llround(beta);
    const double apothem = kSqrt3 / 2 * s;
    const double margin = kFilterMargin * s;
    std::optional<HexCell> inside;
    for (long long da = -1; da <= 1; ++da)
        for (long long db = -1; db <= 1; ++db) {
            const long long a = a0 + da, b = b0 + db;
            const double cx = 1.5 * s * static_cast<double>(a - b);
            const double cy = kSqrt3 / 2 * s * static_cast<double>(a + b);
            const double qx = x - cx, qy = y - cy;
            const std::array<double, 3> t = {kSqrt3 / 2 * qx + 0.5 * qy, qy, -kSqrt3 / 2 * qx + 0.5 * qy};
            double slack = 1e300;
            for (double tk : t) slack = std::min(slack, std::min(apothem - tk, tk + apothem));
            if (std::abs(slack) <= margin) return std::nullopt;
            if (slack > 0) inside = HexCell{a, b};
        }
    return inside;
}

HexCell cell_exact(const Point& p, const Scalar& s) {
    const Scalar r3 = sqrt(Scalar(3));
    const Scalar alpha = p.x / (3 * s) + p.y / (r3 * s);
    const Scalar beta = -p.x / (3 * s) + p.y / (r3 * s);
    const long long a0 = boost::multiprecision::llround(alpha);
    const long long b0 = boost::multiprecision::llround(beta);
    const Scalar apothem = r3 / 2 * s;
    // Points within rounding of a side are treated as lying on it.
    const Scalar tie = boost::multiprecision::ldexp(s, 12 - static_cast<int>(precision_bits()));
    for (long long da = -1; da <= 1; ++da)
        for (long long db = -1; db <= 1; ++db) {
            const long long a = a0 + da, b = b0 + db;
            const Scalar cx = Scalar(3) / 2 * s * (a - b);
            const Scalar cy = r3 / 2 * s * (a + b);
            const Scalar qx = p.x - cx, qy = p.y - cy;
            const std::array<Scalar, 3> t = {r3 / 2 * qx + qy / 2, qy, -r3 / 2 * qx + qy / 2};
            bool in = true;
            for (const auto& tk : t)
                if (!(tk <= apothem + tie && -apothem + tie < tk)) in = false;
            if (in) return HexCell{a, b};
        }
    fail(ErrorCode::PreconditionViolated, "point not assigned to any hexagon");
}

int color_of(const HexCell& c) { return static_cast<int>(mod7(c.a + 2 * c.b)); }

}  // namespace

void check_hex_side(const Scalar& s) {
    const Scalar lo = 1 / sqrt(Scalar(7));
    const Scalar slack = boost::multiprecision::ldexp(Scalar(1), -100);
    if (s < lo - slack || s > Scalar(1) / 2 + slack)
        fail(ErrorCode::PreconditionViolated, "hexagon side must lie in [1/sqrt(7), 1/2]");
}

HexCell hex_cell(const Point& p, const HexConfig& cfg) {
    if (auto c = cell_double(p.x.convert_to<double>(), p.y.convert_to<double>(), cfg.s.convert_to<double>())) return *c;
    return cell_exact(p, cfg.s);
}

int hex_color(const Point& p, const HexConfig& cfg) {
    check_hex_side(cfg.s);
    return color_of(hex_cell(p, cfg));
}

Point hex_center(const HexCell& cell, const HexConfig& cfg) {
    const Scalar r3 = sqrt(Scalar(3));
    return Point{Scalar(3) / 2 * cfg.s * (cell.a - cell.b), r3 / 2 * cfg.s * (cell.a + cell.b)};
}

HexReport hex_verify(const HexConfig& cfg, long long samples, std::uint64_t seed) {
    check_hex_side(cfg.s);
    if (samples < 1) fail(ErrorCode::PreconditionViolated, "samples must be positive");
    const double s = cfg.s.convert_to<double>();
    // Period parallelogram of the coloring: 2u - v and u + 3v (determinant 7).
    const double p1x = 1.5 * s * 3, p1y = kSqrt3 / 2 * s * 1;
    const double p2x = 1.5 * s * (-2), p2y = kSqrt3 / 2 * s * 4;
    const double two_pi = 6.283185307179586477;

    HexReport rep;
    rep.samples = samples;
    rep.min_same_color_dist_observed = Scalar(1e300);
    detail::Stream rng(seed, 0x686578ULL);

    auto classify = [&](double x, double y, double dx, double dy, double len) -> HexCell {
        if (auto c = cell_double(x + len * dx, y + len * dy, s)) return *c;
        ++rep.exact_fallbacks;
        const Scalar theta = Scalar(std::atan2(dy, dx));
        Point q{Scalar(x) + Scalar(len) * boost::multiprecision::cos(theta),
                Scalar(y) + Scalar(len) * boost::multiprecision::sin(theta)};
        return cell_exact(q, cfg.s);
    };

    for (long long i = 0; i < samples; ++i) {
        const double al = rng.uniform(), be = rng.uniform();
        const double x = al * p1x + be * p2x, y = al * p1y + be * p2y;
        const double theta = rng.uniform() * two_pi;
        const double dx = std::cos(theta), dy = std::sin(theta);
        const double r = rng.uniform(0.0, 1.5);

        const HexCell cp = classify(x, y, dx, dy, 0.0);
        const HexCell cq = classify(x, y, dx, dy, 1.0);
        if (color_of(cp) == color_of(cq)) ++rep.violations;

        const HexCell cr = classify(x, y, dx, dy, r);
        if (color_of(cr) == color_of(cp) && (cr.a != cp.a || cr.b != cp.b)) {
            ++rep.same_color_pairs;
            if (Scalar(r) < rep.min_same_color_dist_observed) rep.min_same_color_dist_observed = Scalar(r);
        }
    }
    return rep;
}

}  // namespace planechroma
