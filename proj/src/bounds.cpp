#include "planechroma/bounds.hpp"
#include "planechroma/embeddings.hpp"
#include "planechroma/errors.hpp"

#include <algorithm>

namespace planechroma {

using boost::multiprecision::sqrt;

long long f_min_mono_pairs(int n) {
    if (n < 0) fail(ErrorCode::PreconditionViolated, "n must be non-negative");
    long long total = 0;
    for (int i = 0; i < 4; ++i) {
        long long m = (n + i) / 4;
        total += m * (m - 1) / 2;
    }
    return total;
}

long long f_brute(int n) {
    if (n < 0) fail(ErrorCode::PreconditionViolated, "n must be non-negative");
    if (n > 12) fail(ErrorCode::InputTooLarge, "brute force limited to 12 points");
    std::vector<int> color(n, 0);
    int count[4] = {n, 0, 0, 0};
    auto pairs = [&]() {
        long long s = 0;
        for (int c : count) s += static_cast<long long>(c) * (c - 1) / 2;
        return s;
    };
    long long best = pairs();
    for (;;) {
        int i = 0;
        while (i < n && color[i] == 3) {
            --count[3];
            ++count[0];
            color[i++] = 0;
        }
        if (i == n) break;
        --count[color[i]];
        ++count[++color[i]];
        best = std::min(best, pairs());
    }
    return best;
}

namespace {

Scalar t_half() { return Scalar(1) / 2; }
Scalar t_chain31() { return 2 / sqrt(Scalar(15)); }
Scalar t_chain25() { return (sqrt(Scalar(3)) - 1) / sqrt(Scalar(2)); }

BoundPiece upper_piece(const Scalar& lo, const std::string& lo_expr, const Rational& v, const std::string& prov) {
    BoundPiece p;
    p.interval = Interval::ray(lo, true);
    p.interval.lo_expr = lo_expr;
    p.kind = BoundKind::UPPER;
    p.value = v;
    p.provenance = prov;
    return p;
}

}  // namespace

ChainSpec chain_spec_31() { return {"chain-31", {5, 3, 3, 3, 5, 5, 7}, t_chain31(), "2/sqrt(15)"}; }

ChainSpec chain_spec_25() { return {"chain-25", {5, 2, 2, 2, 4, 4, 6}, t_chain25(), "(sqrt(3)-1)/sqrt(2)"}; }

BoundPiece chain_bound(const ChainSpec& spec) {
    if (spec.slack_coefficients.empty()) fail(ErrorCode::PreconditionViolated, "chain needs coefficients");
    long long k = 0;
    for (int c : spec.slack_coefficients) {
        if (c <= 0) fail(ErrorCode::PreconditionViolated, "chain coefficients must be positive");
        k += c;
    }
    // 1/2 + k*delta >= 1 forces delta >= 1/(2k), hence p_d <= 1/2 - 1/(2k).
    Rational value = Rational(1, 2) - Rational(1, 2 * k);
    return upper_piece(spec.d_threshold, spec.threshold_expr, value,
                       spec.name + " (k=" + std::to_string(k) + ")");
}

BoundTable upper_bound_table() {
    std::vector<BoundPiece> pieces;
    pieces.push_back(upper_piece(t_half(), "1/2", Rational(1, 2), "isosceles argument for d >= 1/2"));
    pieces.push_back(chain_bound(chain_spec_31()));
    BoundPiece p25 = chain_bound(chain_spec_25());
    p25.provenance += "; externally cited bound";
    pieces.push_back(p25);
    BoundTable t(pieces);
    t.metadata.push_back({"limsup_upper", "323/675 (recorded only, no threshold given)"});
    t.metadata.push_back({"minimal_known_upper", "1/3 (externally cited bound, recorded only)"});
    return t;
}

ExpectationOutcome lower_bound_expectation(const PointConfig& cfg, const BoundTable& known) {
    if (cfg.n < 2 || cfg.d_pair_count < 1) fail(ErrorCode::PreconditionViolated, "need n >= 2 and a d-pair");
    const long long pairs = static_cast<long long>(cfg.n) * (cfg.n - 1) / 2;
    if (cfg.d_pair_count + cfg.unit_pair_count + static_cast<long long>(cfg.other_distances.size()) != pairs)
        fail(ErrorCode::PreconditionViolated, "pair counts do not add up to C(n,2)");

    Rational numerator(f_min_mono_pairs(cfg.n));
    Rational denominator(cfg.d_pair_count);
    for (const auto& od : cfg.other_distances) {
        if (od.halving) {
            // p_x <= (1 + p_d)/2 moves half a copy of p_d to the left-hand side.
            numerator -= Rational(1, 2);
            denominator += Rational(1, 2);
            continue;
        }
        auto u = known.upper_over(od.range);
        if (!u) fail(ErrorCode::MissingUpperBound, "no upper bound covers distance " + od.symbol);
        numerator -= *u;
    }
    ExpectationOutcome out;
    out.value = numerator / denominator;
    out.positive = out.value > 0;
    if (out.positive) {
        BoundPiece p;
        p.interval = cfg.d_range;
        p.kind = BoundKind::LOWER;
        p.value = out.value;
        p.provenance = cfg.provenance;
        out.piece = p;
    }
    return out;
}

std::vector<BoundPiece> halving_rule(const Scalar& d, const Scalar& x, const BoundTable& known) {
    if (x < d / 2 && !same_endpoint(x, d / 2)) fail(ErrorCode::PreconditionViolated, "halving rule needs x >= d/2");
    std::vector<BoundPiece> out;
    if (auto ud = known.upper_at(d)) {
        Rational ux = (1 + *ud) / 2;
        if (ux < 1) {
            BoundPiece p;
            p.interval = Interval::point(x);
            p.kind = BoundKind::UPPER;
            p.value = ux;
            p.provenance = "halving rule: p_x <= 1 - (1 - p_d)/2";
            out.push_back(p);
        }
    }
    if (auto lx = known.lower_at(x)) {
        Rational ld = 1 - 2 * (1 - *lx);
        if (ld > 0) {
            BoundPiece p;
            p.interval = Interval::point(d);
            p.kind = BoundKind::LOWER;
            p.value = ld;
            p.provenance = "halving rule: p_d >= 1 - 2(1 - p_x)";
            out.push_back(p);
        }
    }
    return out;
}

PointConfig graph6_config() {
    auto e = catalog("one-d-6");
    PointConfig cfg;
    cfg.n = 5;
    cfg.d_pair_count = 3;
    cfg.unit_pair_count = 6;
    cfg.other_distances = {{"sqrt(2)", Interval::point(sqrt(Scalar(2))), false}};
    cfg.d_range = Interval::point(*e.d);
    cfg.d_range.lo_expr = cfg.d_range.hi_expr = e.d_expr;
    cfg.provenance = "graph 6 points (6 unit, 3 d, one sqrt(2) pair)";
    return cfg;
}

PointConfig graph6_inverse_config() {
    auto e = catalog("one-d-6");
    const Scalar d = *e.d;
    PointConfig cfg;
    cfg.n = 5;
    cfg.d_pair_count = 6;
    cfg.unit_pair_count = 3;
    cfg.other_distances = {{"sqrt(2)/d", Interval::point(sqrt(Scalar(2)) / d), false}};
    cfg.d_range = Interval::point(1 / d);
    cfg.d_range.lo_expr = cfg.d_range.hi_expr = "(sqrt(6)-sqrt(2))/2";
    cfg.provenance = "inverse of graph 6 (6 d, 3 unit, one sqrt(2)/d pair)";
    return cfg;
}

}  // namespace planechroma
