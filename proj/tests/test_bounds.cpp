#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "planechroma/bounds.hpp"
#include "planechroma/errors.hpp"

#include <boost/math/special_functions/cbrt.hpp>

using namespace planechroma;
using boost::multiprecision::abs;
using boost::multiprecision::sqrt;

namespace {

Scalar s2() { return sqrt(Scalar(2)); }
Scalar s3() { return sqrt(Scalar(3)); }
Scalar t_half() { return Scalar(1) / 2; }
Scalar t31() { return 2 / sqrt(Scalar(15)); }
Scalar t25() { return (s3() - 1) / s2(); }

bool close(const Scalar& a, const Scalar& b, const char* eps) { return abs(a - b) <= Scalar(eps); }

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::InvalidInput;
}

PointConfig five_point(int n_d, Interval x, Interval y, Interval d) {
    PointConfig cfg;
    cfg.n = 5;
    cfg.d_pair_count = n_d;
    cfg.unit_pair_count = 8 - n_d;
    cfg.other_distances = {{"x", x, false}, {"y", y, false}};
    cfg.d_range = d;
    cfg.provenance = "test";
    return cfg;
}

std::vector<BoundPiece> lowers(const BoundTable& t) { return t.of_kind(BoundKind::LOWER); }

}  // namespace

TEST_CASE("f_min_mono_pairs examples and brute-force oracle") {
    CHECK(f_min_mono_pairs(4) == 0);
    CHECK(f_min_mono_pairs(5) == 1);
    CHECK(f_min_mono_pairs(9) == 6);
    CHECK(f_brute(8) == 4);
    CHECK(f_brute(0) == 0);
    for (int n = 0; n <= 10; ++n) CHECK(f_min_mono_pairs(n) == f_brute(n));
    CHECK(code_of([] { f_brute(13); }) == ErrorCode::InputTooLarge);
}

TEST_CASE("upper_bound_table queries") {
    const auto t = upper_bound_table();
    CHECK(*t.upper_at(Scalar("0.517")) == Rational(15, 31));
    CHECK(*t.upper_at(Scalar("0.52")) == Rational(12, 25));
    CHECK(*t.upper_at(Scalar("0.6")) == Rational(12, 25));
    CHECK(*t.upper_at(Scalar("0.51")) == Rational(1, 2));
    CHECK(*t.upper_at(Scalar(1000)) == Rational(12, 25));
    CHECK_FALSE(t.upper_at(Scalar("0.49")));
    CHECK(*t.upper_at(t31()) == Rational(15, 31));
    CHECK(*t.upper_at(t25()) == Rational(12, 25));
    bool limsup = false;
    for (const auto& [k, v] : t.metadata) limsup = limsup || v.find("323/675") != std::string::npos;
    CHECK(limsup);
}

TEST_CASE("chain_bound examples") {
    const auto p31 = chain_bound(chain_spec_31());
    CHECK(p31.value == Rational(15, 31));
    CHECK(p31.kind == BoundKind::UPPER);
    CHECK(p31.interval.hi_infinite);
    CHECK(close(p31.interval.lo, t31(), "1e-35"));
    CHECK(chain_bound(chain_spec_25()).value == Rational(12, 25));
    CHECK(chain_bound({"single", {1}, Scalar(1), "1"}).value == 0);
    CHECK_THROWS_AS(chain_bound({"empty", {}, Scalar(1), "1"}), Error);
}

TEST_CASE("property: chain bound increases strictly toward 1/2") {
    Rational prev = -1;
    for (int k = 1; k <= 60; ++k) {
        const auto v = chain_bound({"k", std::vector<int>(k, 1), Scalar(1), "1"}).value;
        CHECK(v > prev);
        CHECK(v < Rational(1, 2));
        prev = v;
    }
}

TEST_CASE("lower_bound_expectation examples") {
    const auto up = upper_bound_table();
    CHECK(lower_bound_expectation(graph6_config(), up).value == Rational(13, 75));
    CHECK(lower_bound_expectation(graph6_inverse_config(), up).value == Rational(13, 150));
    // x in the 12/25 zone, y in the 15/31 zone, two d-pairs
    const auto cfg = five_point(2, Interval::point(Scalar("0.7")), Interval::point(Scalar("0.517")), Interval::point(1));
    const auto out = lower_bound_expectation(cfg, up);
    CHECK(out.value == Rational(14, 775));
    CHECK(out.positive);
    REQUIRE(out.piece);
    CHECK(out.piece->kind == BoundKind::LOWER);
}

TEST_CASE("property: five-point rule reduces to (1 - p_x - p_y)/n_d") {
    const auto up = upper_bound_table();
    const Scalar xs[] = {Scalar("0.505"), Scalar("0.517"), Scalar("0.6"), Scalar(3)};
    for (int n_d = 1; n_d <= 7; ++n_d)
        for (const auto& x : xs)
            for (const auto& y : xs) {
                const auto cfg = five_point(n_d, Interval::point(x), Interval::point(y), Interval::point(1));
                const Rational expected = (1 - *up.upper_at(x) - *up.upper_at(y)) / n_d;
                CHECK(lower_bound_expectation(cfg, up).value == expected);
            }
}

TEST_CASE("lower_bound_expectation errors and the negative-result guard") {
    const auto up = upper_bound_table();
    auto cfg = five_point(2, Interval::point(Scalar("0.3")), Interval::point(1), Interval::point(1));
    CHECK(code_of([&] { lower_bound_expectation(cfg, up); }) == ErrorCode::MissingUpperBound);
    cfg.unit_pair_count = 7;
    CHECK(code_of([&] { lower_bound_expectation(cfg, up); }) == ErrorCode::PreconditionViolated);

    // with three or more other distances and every upper bound at least 1/3 nothing positive follows
    BoundTable third({[] {
        BoundPiece p;
        p.interval = Interval::ray(Scalar(0), true);
        p.kind = BoundKind::UPPER;
        p.value = Rational(1, 3);
        return p;
    }()});
    for (int others = 3; others <= 7; ++others)
        for (int n_d = 1; n_d <= 10 - others; ++n_d) {
            PointConfig c;
            c.n = 5;
            c.d_pair_count = n_d;
            c.unit_pair_count = 10 - others - n_d;
            for (int i = 0; i < others; ++i) c.other_distances.push_back({"o", Interval::point(Scalar(i + 2)), false});
            c.d_range = Interval::point(1);
            for (const auto& table : {third, upper_bound_table()}) {
                const auto out = lower_bound_expectation(c, table);
                CHECK_FALSE(out.positive);
                CHECK_FALSE(out.piece);
            }
        }
}

TEST_CASE("halving_rule examples") {
    const Scalar d("0.6"), x("0.4");
    BoundPiece ud;
    ud.interval = Interval::point(d);
    ud.kind = BoundKind::UPPER;
    ud.value = Rational(1, 325);
    // assuming p_d <= 1/325 forces 1 - p_x >= 162/325
    auto out = halving_rule(d, x, BoundTable({ud}));
    REQUIRE(out.size() == 1);
    CHECK(out[0].kind == BoundKind::UPPER);
    CHECK(1 - out[0].value == Rational(162, 325));

    BoundPiece lx;
    lx.interval = Interval::point(x);
    lx.kind = BoundKind::LOWER;
    lx.value = 0;
    CHECK(halving_rule(d, x, BoundTable({lx})).empty());
    lx.value = Rational(1, 2);
    CHECK(halving_rule(d, x, BoundTable({lx})).empty());
    lx.value = Rational(3, 4);
    out = halving_rule(d, x, BoundTable({lx}));
    REQUIRE(out.size() == 1);
    CHECK(out[0].kind == BoundKind::LOWER);
    CHECK(out[0].value == Rational(1, 2));
    CHECK(code_of([&] { halving_rule(d, Scalar("0.2"), BoundTable()); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("family_d_of_x examples") {
    CHECK(close(family_d_of_x(Family::F2, t_half(), Branch::NEAR), sqrt(5 - 2 * s3()) / 2, "1e-35"));
    CHECK(close(family_d_of_x(Family::F2, t_half(), Branch::NEAR), Scalar("0.619657"), "1e-6"));
    const Scalar f3 = family_d_of_x(Family::F3, -t25(), Branch::NEAR);
    CHECK(close(f3, sqrt((3 - s3()) * (1 - 1 / s2())), "1e-35"));
    CHECK(close(f3, Scalar("0.609404"), "1e-6"));
    const Scalar f4 = family_d_of_x(Family::F4, t25(), Branch::NEAR);
    CHECK(close(f4, (sqrt(Scalar(6)) - s2()) / 2, "1e-35"));
    CHECK(close(family_d_of_x(Family::F1, s2(), Branch::FAR), sqrt(2 + s3()), "1e-35"));
    CHECK(close(family_d_of_x(Family::F1, Scalar(1), Branch::FAR), s3(), "1e-35"));
    // graph-5 near root coincides with (sqrt6 - sqrt2)/2
    CHECK(close(family_d_of_x(Family::F5, t25(), Branch::NEAR), (sqrt(Scalar(6)) - s2()) / 2, "1e-33"));
    CHECK(close(family5_ea(family_d_of_x(Family::F5, Scalar("0.3"), Branch::FAR)), Scalar("0.3"), "1e-33"));
}

TEST_CASE("family_d_of_x domain errors") {
    CHECK(code_of([] { family_d_of_x(Family::F1, Scalar(1), Branch::NEAR); }) == ErrorCode::DomainError);
    CHECK(code_of([] { family_d_of_x(Family::F1, Scalar(2), Branch::FAR); }) == ErrorCode::DomainError);
    CHECK(code_of([] { family_d_of_x(Family::F2, Scalar(1), Branch::NEAR); }) == ErrorCode::DomainError);
    CHECK(code_of([] { family_d_of_x(Family::F4, Scalar("-0.1"), Branch::NEAR); }) == ErrorCode::DomainError);
    CHECK(code_of([] { family_d_of_x(Family::F3, Scalar("-0.1"), Branch::FAR); }) == ErrorCode::DomainError);
    CHECK(code_of([] { family_d_of_x(Family::F5, Scalar(3), Branch::FAR); }) == ErrorCode::DomainError);
    CHECK(code_of([] { family5_ea(Scalar("0.4")); }) == ErrorCode::DomainError);
}

TEST_CASE("property: branch monotonicity") {
    for (Family f : {Family::F1, Family::F2, Family::F3, Family::F4, Family::F5})
        for (Branch b : {Branch::NEAR, Branch::FAR}) {
            const Interval dom = family_x_domain(f, b);
            const Scalar hi = dom.hi_infinite ? Scalar(5) : dom.hi;
            Scalar prev = family_d_of_x(f, dom.lo, b);
            for (int i = 1; i < 50; ++i) {
                const Scalar x = dom.lo + (hi - dom.lo) * i / 50;
                const Scalar d = family_d_of_x(f, x, b);
                if (family_increasing(f, b)) CHECK(d > prev);
                else CHECK(d < prev);
                prev = d;
            }
        }
}

TEST_CASE("property: graph 2 is graph 1 inverted, d -> 1/d and x -> x/d") {
    for (int i = 1; i <= 10; ++i)
        for (Branch b : {Branch::NEAR, Branch::FAR}) {
            const Interval dom = family_x_domain(Family::F1, b);
            const Scalar x = dom.hi * i / 11;
            const Scalar d = family_d_of_x(Family::F1, x, b);
            Scalar best = 1;
            for (Branch b2 : {Branch::NEAR, Branch::FAR})
                if (family_x_domain(Family::F2, b2).contains(x / d))
                    best = std::min(best, Scalar(abs(family_d_of_x(Family::F2, x / d, b2) - 1 / d)));
            CHECK(best < Scalar("1e-30"));
        }
}

TEST_CASE("family_intervals examples") {
    const auto up = upper_bound_table();
    const auto f1 = family_intervals(Family::F1, up);
    bool first = false;
    for (const auto& p : f1)
        if (p.value == Rational(1, 50) && p.interval.lo == 0 && !p.interval.lo_closed &&
            close(p.interval.hi, (sqrt(Scalar(6)) - s2()) / 2, "1e-30") && p.interval.hi_closed)
            first = true;
    CHECK(first);

    int outer = 0;
    for (const auto& p : family_intervals(Family::F3, up)) outer += p.value == Rational(1, 125);
    CHECK(outer == 2);

    bool f5 = false;
    for (const auto& p : family_intervals(Family::F5, up))
        if (p.value == Rational(1, 100) && close(p.interval.lo, Scalar("1.369292"), "1e-6") && p.interval.lo_closed &&
            p.interval.hi == 2)
            f5 = true;
    CHECK(f5);
}

TEST_CASE("propagate derives 1/325") {
    const auto up = upper_bound_table();
    const auto out = propagate(up, halving_configs(), 5);
    const auto low = lowers(out);
    REQUIRE(low.size() == 1);
    CHECK(low[0].value == Rational(1, 325));
    CHECK(close(low[0].interval.hi, (sqrt(Scalar(5)) - 1) / s3(), "1e-35"));

    // together with the family pieces the bound holds on all of (0, (sqrt5 - 1)/sqrt3]
    const auto table = propagate(summary_table(up), halving_configs(), 5);
    const Scalar top = (sqrt(Scalar(5)) - 1) / s3();
    for (int i = 1; i <= 200; ++i) {
        const auto v = table.lower_at(top * i / 200);
        REQUIRE(v);
        CHECK(*v >= Rational(1, 325));
    }
    CHECK(code_of([&] { propagate(up, {}, 0); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("property: propagate is monotone and idempotent") {
    const auto up = upper_bound_table();
    const auto empty = propagate(up, {}, 3);
    CHECK(empty.pieces().size() == up.pieces().size());
    const auto once = propagate(summary_table(up), halving_configs(), 5);
    const auto twice = propagate(once, halving_configs(), 5);
    REQUIRE(once.pieces().size() == twice.pieces().size());
    for (size_t i = 0; i < once.pieces().size(); ++i) CHECK(once.pieces()[i].value == twice.pieces()[i].value);
    const auto base = summary_table(up);
    for (int i = 1; i < 300; ++i) {
        const Scalar d = Scalar(i) / 100;
        const auto before = base.lower_at(d), after = once.lower_at(d);
        if (before) CHECK((after && *after >= *before));
    }
}

TEST_CASE("summary table reproduces the twelve pieces") {
    const auto t = summary_table(upper_bound_table());
    const auto low = lowers(t);
    const std::vector<Rational> values = {Rational(1, 50),   Rational(14, 775), Rational(1, 100), Rational(1, 125),
                                          Rational(28, 3875), Rational(1, 250), Rational(1, 200), Rational(7, 775),
                                          Rational(1, 100),  Rational(14, 775), Rational(1, 50),  Rational(1, 125)};
    REQUIRE(low.size() == values.size());
    for (size_t i = 0; i < values.size(); ++i) CHECK(low[i].value == values[i]);

    auto has_note = [](const BoundPiece& p, const std::string& text) {
        for (const auto& n : p.notes)
            if (n.find(text) != std::string::npos) return true;
        return false;
    };
    CHECK(has_note(low[1], "truncated"));
    CHECK(has_note(low[2], "lower endpoint"));
    CHECK(has_note(low[4], "value 38/3875, recomputed 28/3875"));
    CHECK(has_note(low[8], "upper endpoint"));
    CHECK(has_note(low[9], "lower endpoint"));
    CHECK(has_note(low[10], "upper bound"));
    CHECK(has_note(low[11], "closed"));
    for (size_t i : {0u, 3u, 5u, 6u, 7u}) {
        for (const auto& n : low[i].notes) CHECK(n.find("printed (") == std::string::npos);
        for (const auto& n : low[i].notes) CHECK(n.find("printed [") == std::string::npos);
    }
    // printed decimal endpoints
    CHECK(close(low[6].interval.lo, Scalar("1.35877"), "1e-5"));
    CHECK(close(low[7].interval.lo, Scalar("1.368556"), "1e-6"));
    CHECK(close(low[8].interval.lo, Scalar("1.369292"), "1e-6"));
    CHECK(close(low[10].interval.lo, s2(), "1e-35"));
    CHECK(low[11].interval.hi_infinite);
    CHECK_FALSE(low[11].interval.lo_closed);
}

TEST_CASE("bound table normalization keeps the tightest value") {
    BoundPiece a, b;
    a.interval = Interval::closed(0, 2);
    a.kind = b.kind = BoundKind::LOWER;
    a.value = Rational(1, 10);
    b.interval = Interval::closed(1, 3);
    b.value = Rational(1, 5);
    const BoundTable t({a, b});
    CHECK(*t.lower_at(Scalar("0.5")) == Rational(1, 10));
    CHECK(*t.lower_at(Scalar("1.5")) == Rational(1, 5));
    CHECK(*t.lower_at(Scalar(3)) == Rational(1, 5));
    CHECK_FALSE(t.lower_at(Scalar(4)));
    const auto low = t.of_kind(BoundKind::LOWER);
    REQUIRE(low.size() == 2);
    CHECK_FALSE(low[0].interval.hi_closed);
    BoundPiece bad = a;
    bad.value = 2;
    CHECK_THROWS_AS(BoundTable({bad}), Error);
}

TEST_CASE("crossing constant and u(n) coefficient") {
    CHECK(crossing_objective(1) == 1);
    CHECK(close(crossing_objective(0), 2 * boost::math::cbrt(Scalar(1) / 4), "1e-35"));
    CHECK(close(crossing_objective(0), Scalar("1.2599"), "1e-4"));
    const Scalar target = boost::math::cbrt(Scalar(2) / 3 * (2 + s3()));
    CHECK(close(crossing_constant(), target, "1e-9"));
    CHECK(close(u_upper_coefficient(), Scalar("2.082"), "1e-3"));
    CHECK(close(u_upper_coefficient(), boost::math::cbrt(Scalar(2) / 3 * (2 + s3()) * 29) / 2, "1e-9"));
    CHECK(u_upper(14) >= 33);
    CHECK(u_upper(1) == u_upper_coefficient());
    CHECK_THROWS_AS(u_upper(0), Error);
}

TEST_CASE("density recurrence") {
    const auto table = schade_table();
    REQUIRE(table.size() == 16);
    CHECK(table[8] == std::pair<int, long long>{9, 18});
    const auto findings = density_recurrence_check(table);
    bool tight9 = false;
    for (const auto& f : findings) {
        CHECK_FALSE(f.violation);
        tight9 = tight9 || (f.n == 9 && f.tight);
    }
    CHECK(tight9);
    const auto bad = density_recurrence_check({{4, 5}, {5, 100}});
    REQUIRE(bad.size() == 1);
    CHECK(bad[0].violation);
    CHECK_THROWS_AS(density_recurrence_check({{4, 5}, {6, 9}}), Error);
}

TEST_CASE("csv and svg output") {
    const auto t = summary_table(upper_bound_table());
    const std::string csv = to_csv(t);
    CHECK(csv.rfind("d_lo,d_hi,lo_closed,hi_closed,kind,value_num,value_den,provenance\n", 0) == 0);
    CHECK(csv.find("1.41421356237309504880168872420969807857,2,true,true,LOWER,1,50,\"family F1") != std::string::npos);
    CHECK(csv.find(",inf,false,false,LOWER,1,125,") != std::string::npos);
    const std::string svg = to_svg(t);
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(rational_str(Rational(28, 3875)) == "28/3875");
    CHECK(rational_str(Rational(2)) == "2");
}
