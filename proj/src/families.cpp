#include "planechroma/bounds.hpp"
#include "planechroma/errors.hpp"

namespace planechroma {

using boost::multiprecision::sqrt;

namespace {

Scalar sq3() { return sqrt(Scalar(3)); }

// Two unit triangles sharing a vertex; x and the d-pairs are cross distances.
Scalar shared_vertex_form(const Scalar& x) { return (sq3() * x + sqrt(4 - x * x)) / 2; }

// Unit triangle with a d-triangle on the vertex A, x = |CD| measured along the axis.
Scalar axis_form(const Scalar& x) { return sqrt(1 + x * x + sq3() * x); }

// Range of the distance that is not the x of the family, over the whole family.
Interval y_range(Family f) {
    switch (f) {
        case Family::F1:
        case Family::F4: {
            Interval iv = Interval::ray(Scalar(1), true);
            iv.lo_expr = "1";
            return iv;
        }
        case Family::F2:
        case Family::F3: {
            Interval iv = Interval::ray(sq3() / 2, true);
            iv.lo_expr = "sqrt(3)/2";
            return iv;
        }
        case Family::F5: {
            Interval iv = Interval::ray(sqrt(Scalar(3) / 2), true);
            iv.lo_expr = "sqrt(3/2)";
            return iv;
        }
    }
    fail(ErrorCode::DomainError, "unknown family");
}

const char* branch_name(Branch b) { return b == Branch::NEAR ? "near" : "far"; }

std::vector<std::string> family_notes(Family f, Branch b) {
    switch (f) {
        case Family::F1:
            return {"closed form printed with a misplaced radical; d = sqrt(x^2/2 + 1 + x sqrt(3 - 3x^2/4)) used"};
        case Family::F4:
            if (b == Branch::FAR)
                return {"far-arc closed form printed as sqrt(1+x^2+sqrt x) with thresholds 1.45466/1.47007/1.47123 "
                        "copied from the graph-3 family; cosine law at the inscribed 30 degree angle gives "
                        "d = (sqrt(3) x + sqrt(4 - x^2))/2, used here"};
            return {};
        case Family::F3:
            if (b == Branch::FAR)
                return {"printed threshold (1/2)sqrt(19+6 sqrt5) not reproduced; endpoints recomputed from d(x)"};
            return {};
        case Family::F5:
            return {"printed as p_d > 0 >= 1/200 on the weakest cells; read as p_d >= 1/200"};
        default:
            return {};
    }
}

}  // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::F1: return "F1";
        case Family::F2: return "F2";
        case Family::F3: return "F3";
        case Family::F4: return "F4";
        case Family::F5: return "F5";
    }
    return "?";
}

int family_d_pairs(Family f) {
    switch (f) {
        case Family::F1: return 2;
        case Family::F2: return 6;
        case Family::F3: return 5;
        case Family::F4: return 3;
        case Family::F5: return 4;
    }
    return 0;
}

Interval family_x_domain(Family f, Branch b) {
    Interval iv;
    iv.lo = 0;
    iv.lo_expr = "0";
    const bool near = b == Branch::NEAR;
    switch (f) {
        case Family::F1:
        case Family::F4:
            if (near) {
                iv.hi = 1;
                iv.hi_closed = false;
                iv.hi_expr = "1";
            } else {
                iv.hi = sq3();
                iv.hi_expr = "sqrt(3)";
            }
            return iv;
        case Family::F2:
        case Family::F3:
            if (near) {
                iv.hi = sq3() / 2;
                iv.hi_expr = "sqrt(3)/2";
                return iv;
            }
            return Interval::ray(Scalar(0), true);
        case Family::F5:
            if (near) {
                iv.hi = family5_ea(Scalar(1) / 2);
                iv.hi_expr = "sqrt(3/8)";
            } else {
                iv.hi = sqrt(Scalar(6));
                iv.hi_expr = "sqrt(6)";
            }
            return iv;
    }
    fail(ErrorCode::DomainError, "unknown family");
}

bool family_increasing(Family, Branch b) { return b == Branch::FAR; }

Scalar family5_ea(const Scalar& d) {
    if (d < Scalar(1) / 2 || d > 2) fail(ErrorCode::DomainError, "graph-5 construction needs 1/2 <= d <= 2");
    const Scalar d2 = d * d;
    const Scalar a = d2 / 2 - Scalar(1) / 2;
    Scalar r1 = d2 - d2 * d2 / 4;
    Scalar r2 = d2 - Scalar(1) / 4;
    if (r1 < 0) r1 = 0;
    if (r2 < 0) r2 = 0;
    const Scalar b = sqrt(r1) - sqrt(r2);
    return sqrt(a * a + b * b);
}

namespace {

// Evaluates the branch on the closure of its domain; x >= 0.
Scalar branch_value(Family f, const Scalar& x, Branch b) {
    const Scalar sx = b == Branch::NEAR ? -x : x;
    switch (f) {
        case Family::F1: {
            Scalar r = 3 - 3 * sx * sx / 4;
            Scalar v = sx * sx / 2 + 1 + sx * sqrt(r < 0 ? Scalar(0) : r);
            return sqrt(v < 0 ? Scalar(0) : v);
        }
        case Family::F4:
            return shared_vertex_form(sx);
        case Family::F2:
        case Family::F3:
            return axis_form(sx);
        case Family::F5: {
            // |EA| falls on [1/2, 1] and rises on [1, 2]; bisect to full working precision.
            Scalar lo = b == Branch::NEAR ? Scalar(1) / 2 : Scalar(1);
            Scalar hi = b == Branch::NEAR ? Scalar(1) : Scalar(2);
            const bool rising = b == Branch::FAR;
            for (unsigned it = 0; it < precision_bits() + 8; ++it) {
                Scalar mid = (lo + hi) / 2;
                bool below = family5_ea(mid) < x;
                if (below == rising) lo = mid;
                else hi = mid;
            }
            return (lo + hi) / 2;
        }
    }
    fail(ErrorCode::DomainError, "unknown family");
}

}  // namespace

Scalar family_d_of_x(Family f, const Scalar& x_in, Branch b) {
    Scalar x = x_in;
    if (x < 0) {
        if ((f != Family::F1 && f != Family::F3) || b == Branch::FAR)
            fail(ErrorCode::DomainError, "negative x only encodes the near branch of F1 and F3");
        x = -x;
    }
    if (!family_x_domain(f, b).contains(x)) fail(ErrorCode::DomainError, "x outside the family's domain");
    return branch_value(f, x, b);
}

std::vector<BoundPiece> family_intervals(Family f, const BoundTable& known) {
    std::vector<BoundPiece> out;
    for (Branch b : {Branch::NEAR, Branch::FAR}) {
        const Interval dom = family_x_domain(f, b);
        const bool inc = family_increasing(f, b);
        const std::string label = std::string(family_name(f)) + branch_name(b);
        for (const auto& up : known.of_kind(BoundKind::UPPER)) {
            // x-cell = upper piece intersected with the domain
            Interval xc;
            const Interval& u = up.interval;
            if (u.lo > dom.lo || same_endpoint(u.lo, dom.lo)) {
                xc.lo = u.lo;
                xc.lo_closed = same_endpoint(u.lo, dom.lo) ? (u.lo_closed && dom.lo_closed) : u.lo_closed;
                xc.lo_expr = u.lo_expr;
            } else {
                xc.lo = dom.lo;
                xc.lo_closed = dom.lo_closed;
                xc.lo_expr = dom.lo_expr;
            }
            if (u.hi_infinite && dom.hi_infinite) {
                xc.hi_infinite = true;
                xc.hi_closed = false;
            } else if (!u.hi_infinite && (dom.hi_infinite || u.hi < dom.hi || same_endpoint(u.hi, dom.hi))) {
                xc.hi = u.hi;
                xc.hi_closed = (!dom.hi_infinite && same_endpoint(u.hi, dom.hi)) ? (u.hi_closed && dom.hi_closed)
                                                                                   : u.hi_closed;
                xc.hi_expr = u.hi_expr;
            } else {
                xc.hi = dom.hi;
                xc.hi_closed = dom.hi_closed;
                xc.hi_expr = dom.hi_expr;
            }
            if (!xc.hi_infinite) {
                if (xc.hi < xc.lo && !same_endpoint(xc.hi, xc.lo)) continue;
                if (same_endpoint(xc.hi, xc.lo) && !(xc.lo_closed && xc.hi_closed)) continue;
            }

            Interval dc;
            auto image = [&](const Scalar& x, const std::string& ex) {
                return std::make_pair(branch_value(f, x, b), label + "(x=" + ex + ")");
            };
            auto [dlo_v, dlo_e] = image(xc.lo, xc.lo_expr);
            if (inc) {
                dc.lo = dlo_v;
                dc.lo_expr = dlo_e;
                dc.lo_closed = xc.lo_closed;
                if (xc.hi_infinite) {
                    dc.hi_infinite = true;
                    dc.hi_closed = false;
                } else {
                    auto [v, e] = image(xc.hi, xc.hi_expr);
                    dc.hi = v;
                    dc.hi_expr = e;
                    dc.hi_closed = xc.hi_closed;
                }
            } else {
                auto [v, e] = image(xc.hi, xc.hi_expr);
                dc.lo = v;
                dc.lo_expr = e;
                dc.lo_closed = xc.hi_closed;
                dc.hi = dlo_v;
                dc.hi_expr = dlo_e;
                dc.hi_closed = xc.lo_closed;
            }
            // x at the open end of the near domain drives d to 0, which is excluded.
            if (!inc && same_endpoint(dc.lo, Scalar(0))) dc.lo_closed = false;

            PointConfig cfg;
            cfg.n = 5;
            cfg.d_pair_count = family_d_pairs(f);
            cfg.unit_pair_count = 8 - cfg.d_pair_count;
            DistanceDescriptor xd{"x", xc, false};
            DistanceDescriptor yd{"y", y_range(f), false};
            cfg.other_distances = {xd, yd};
            cfg.d_range = dc;
            cfg.provenance = std::string("family ") + family_name(f) + " (graph " +
                             std::to_string(static_cast<int>(f) + 1) + "), " + branch_name(b) + " branch";
            auto res = lower_bound_expectation(cfg, known);
            if (!res.piece) continue;
            BoundPiece piece = *res.piece;
            piece.notes = family_notes(f, b);
            out.push_back(piece);
        }
    }
    return out;
}

std::vector<PointConfig> halving_configs() {
    // Graph-2 points on the near branch: x = sqrt(3)/2 - sqrt(d^2 - 1/4) >= d/2 for d <= (sqrt(5)-1)/sqrt(3).
    PointConfig cfg;
    cfg.n = 5;
    cfg.d_pair_count = 6;
    cfg.unit_pair_count = 2;
    Interval dr = Interval::closed(Scalar(1) / 2, (sqrt(Scalar(5)) - 1) / sq3());
    dr.lo_expr = "1/2";
    dr.hi_expr = "(sqrt(5)-1)/sqrt(3)";
    cfg.d_range = dr;
    cfg.other_distances = {{"x", Interval::closed(dr.hi / 2, sq3() / 2), true}, {"y", y_range(Family::F2), false}};
    cfg.provenance = "family F2 (graph 2), near branch with x >= d/2: p_x <= (1 + p_d)/2 by halving, solved for p_d";
    return {cfg};
}

BoundTable propagate(const BoundTable& known, const std::vector<PointConfig>& configs, int max_rounds) {
    if (max_rounds < 1) fail(ErrorCode::PreconditionViolated, "need at least one round");
    BoundTable table = known;
    for (int round = 0; round < max_rounds; ++round) {
        bool changed = false;
        for (const auto& cfg : configs) {
            ExpectationOutcome res;
            try {
                res = lower_bound_expectation(cfg, table);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::MissingUpperBound) throw;
                continue;
            }
            if (!res.piece) continue;
            const auto before = table.of_kind(BoundKind::LOWER);
            table.insert(*res.piece);
            const auto after = table.of_kind(BoundKind::LOWER);
            bool same = before.size() == after.size();
            for (size_t i = 0; same && i < before.size(); ++i)
                same = before[i].value == after[i].value && before[i].provenance == after[i].provenance &&
                       same_endpoint(before[i].interval.lo, after[i].interval.lo);
            changed = changed || !same;
        }
        if (!changed) break;
    }
    return table;
}

}  // namespace planechroma
