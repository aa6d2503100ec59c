#include "planechroma/bounds.hpp"
#include "planechroma/errors.hpp"

namespace planechroma {

using boost::multiprecision::abs;
using boost::multiprecision::sqrt;

namespace {

PrintedPiece printed(std::string text, BoundKind kind, Rational value, std::optional<Scalar> lo, double lo_tol,
                     std::optional<Scalar> hi, double hi_tol) {
    return {std::move(text), kind, std::move(value), std::move(lo), lo_tol, std::move(hi), hi_tol};
}

std::string decimal(const Scalar& s) { return std::to_string(s.convert_to<double>()); }

}  // namespace

std::vector<PrintedPiece> printed_summary() {
    const Scalar s2 = sqrt(Scalar(2)), s3 = sqrt(Scalar(3)), s5 = sqrt(Scalar(5)), s6 = sqrt(Scalar(6));
    const Scalar s15 = sqrt(Scalar(15));
    const Scalar t3 = (s6 - s2) / 2;
    const Scalar a = (s15 - s3) / 4;
    const Scalar b = sqrt((3 - s3) * (1 - 1 / s2));
    const Scalar c = sqrt(Scalar(19) / 15 - 2 / s5);
    const Scalar e = sqrt(5 - 2 * s3) / 2;
    const Scalar r1415 = sqrt(Scalar(14) / 15);
    const double exact = 1e-12;
    // Truncated decimals "1.3587..." stand for the interval [1.3587, 1.3588).
    const double trunc4 = 5e-5, trunc5 = 5e-6;
    using K = BoundKind;
    return {
        printed("(0, (sqrt6-sqrt2)/2]", K::LOWER, Rational(1, 50), Scalar(0), exact, t3, exact),
        printed("((sqrt6-sqrt2)/2]", K::LOWER, Rational(14, 775), t3, exact, std::nullopt, 0),
        printed("(sqrt(14/15)-1/sqrt15, (sqrt15-sqrt3)/4]", K::LOWER, Rational(1, 100), r1415 - 1 / s15, exact, a,
                exact),
        printed("((sqrt15-sqrt3)/4, sqrt((3-sqrt3)(1-1/sqrt2))]", K::LOWER, Rational(1, 125), a, exact, b, exact),
        printed("(sqrt((3-sqrt3)(1-1/sqrt2)), sqrt(19/15-2/sqrt5)]", K::LOWER, Rational(38, 3875), b, exact, c,
                exact),
        printed("(sqrt(19/15-2/sqrt5), (1/2)sqrt(5-2sqrt3)]", K::LOWER, Rational(1, 250), c, exact, e, exact),
        printed("[1.3587..., 1.36855...)", K::LOWER, Rational(1, 200), Scalar("1.35875"), trunc4, Scalar("1.368555"),
                trunc5),
        printed("[1.36855..., 1.36929)", K::LOWER, Rational(7, 775), Scalar("1.368555"), trunc5, Scalar("1.36929"),
                trunc5),
        printed("[1.36929..., sqrt(14/15)+1/sqrt15)", K::LOWER, Rational(1, 100), Scalar("1.369295"), trunc5,
                r1415 + 1 / s15, exact),
        printed("[sqrt(14/15)+1/sqrt15, sqrt2)", K::LOWER, Rational(14, 775), r1415 + 1 / s15, exact, s2, exact),
        printed("[sqrt2, 2]", K::UPPER, Rational(1, 50), s2, exact, Scalar(2), exact),
        printed("(2, inf]", K::LOWER, Rational(1, 125), Scalar(2), exact, std::nullopt, 0),
    };
}

BoundTable summary_table(const BoundTable& known) {
    BoundTable table = known;
    for (Family f : {Family::F1, Family::F2, Family::F3, Family::F4, Family::F5})
        for (const auto& p : family_intervals(f, known)) table.insert(p);

    const auto print = printed_summary();
    std::vector<size_t> lower_index;
    for (size_t i = 0; i < table.pieces().size(); ++i)
        if (table.pieces()[i].kind == BoundKind::LOWER) lower_index.push_back(i);
    if (lower_index.size() != print.size())
        table.metadata.push_back({"summary_piece_count", std::to_string(lower_index.size()) + " recomputed, " +
                                                             std::to_string(print.size()) + " printed"});

    for (size_t k = 0; k < std::min(lower_index.size(), print.size()); ++k) {
        const size_t idx = lower_index[k];
        const BoundPiece piece = table.pieces()[idx];
        const PrintedPiece& pp = print[k];
        const std::string tag = "printed " + pp.interval_text + ": ";
        if (pp.kind != piece.kind)
            table.add_note(idx, tag + "stated as an upper bound (p_d <= ...) where the derivation gives a lower bound");
        if (pp.value != piece.value)
            table.add_note(idx, tag + "value " + rational_str(pp.value) + ", recomputed " + rational_str(piece.value));
        if (pp.lo && abs(*pp.lo - piece.interval.lo) > pp.lo_tol)
            table.add_note(idx, tag + "lower endpoint " + decimal(*pp.lo) + ", recomputed " +
                                    decimal(piece.interval.lo));
        if (!pp.hi && !piece.interval.hi_infinite)
            table.add_note(idx, tag + "interval text truncated, recomputed upper endpoint " +
                                    decimal(piece.interval.hi));
        if (pp.hi && (piece.interval.hi_infinite || abs(*pp.hi - piece.interval.hi) > pp.hi_tol))
            table.add_note(idx, tag + "upper endpoint " + decimal(*pp.hi) + ", recomputed " +
                                    (piece.interval.hi_infinite ? std::string("inf") : decimal(piece.interval.hi)));
        if (piece.interval.hi_infinite && !pp.interval_text.empty() && pp.interval_text.back() == ']')
            table.add_note(idx, tag + "infinite endpoint written as closed");
    }
    return table;
}

}  // namespace planechroma
