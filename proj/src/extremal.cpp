#include "planechroma/bounds.hpp"
#include "planechroma/errors.hpp"

#include <boost/math/special_functions/cbrt.hpp>

namespace planechroma {

using boost::multiprecision::sqrt;

Scalar crossing_objective(const Scalar& x) {
    if (x < 0 || x > 1) fail(ErrorCode::DomainError, "objective defined on [0,1]");
    const Scalar q = (1 - x) / 4;
    return boost::math::cbrt(x + q) + boost::math::cbrt(q);
}

Scalar crossing_constant() {
    const Scalar ratio = (sqrt(Scalar(5)) - 1) / 2;
    const Scalar tol("1e-30");
    Scalar a = 0, b = 1;
    Scalar c = b - ratio * (b - a), d = a + ratio * (b - a);
    Scalar fc = crossing_objective(c), fd = crossing_objective(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = crossing_objective(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = crossing_objective(d);
        }
    }
    return crossing_objective((a + b) / 2);
}

Scalar u_upper_coefficient() { return crossing_constant() * boost::math::cbrt(Scalar(29)) / 2; }

Scalar u_upper(int n) {
    if (n < 1) fail(ErrorCode::PreconditionViolated, "n must be positive");
    const Scalar nn(n);
    return u_upper_coefficient() * nn * boost::math::cbrt(nn);
}

std::vector<DensityFinding> density_recurrence_check(const std::vector<std::pair<int, long long>>& table) {
    std::vector<DensityFinding> out;
    for (size_t i = 1; i < table.size(); ++i) {
        const auto [n_prev, u_prev] = table[i - 1];
        const auto [n, u_n] = table[i];
        if (n != n_prev + 1) fail(ErrorCode::PreconditionViolated, "table rows must have consecutive n");
        if (n < 3) continue;
        // u(n) <= n/(n-2) u(n-1), compared without division
        const long long lhs = static_cast<long long>(n - 2) * u_n;
        const long long rhs = static_cast<long long>(n) * u_prev;
        if (lhs >= rhs) out.push_back({n, u_prev, u_n, lhs > rhs, lhs == rhs});
    }
    return out;
}

std::vector<std::pair<int, long long>> schade_table() {
    static const long long u[] = {0, 1, 3, 5, 7, 9, 12, 14, 18, 20, 23, 27, 30, 33, 37, 41};
    std::vector<std::pair<int, long long>> out;
    for (int n = 1; n <= 16; ++n) out.push_back({n, u[n - 1]});
    return out;
}

}  // namespace planechroma
