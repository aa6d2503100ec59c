#include "planechroma/bounds.hpp"
#include "planechroma/errors.hpp"

#include <algorithm>
#include <set>

namespace planechroma {

using boost::multiprecision::abs;

bool same_endpoint(const Scalar& a, const Scalar& b) {
    const Scalar rel = boost::multiprecision::ldexp(Scalar(1), -static_cast<int>(precision_bits()) + 16);
    Scalar scale = std::max(Scalar(1), std::max(abs(a), abs(b)));
    return abs(a - b) <= rel * scale;
}

Interval Interval::closed(const Scalar& lo, const Scalar& hi) {
    Interval iv;
    iv.lo = lo;
    iv.hi = hi;
    return iv;
}

Interval Interval::point(const Scalar& x) { return closed(x, x); }

Interval Interval::ray(const Scalar& lo, bool lo_closed) {
    Interval iv;
    iv.lo = lo;
    iv.hi = lo;
    iv.lo_closed = lo_closed;
    iv.hi_closed = false;
    iv.hi_infinite = true;
    return iv;
}

bool Interval::contains(const Scalar& x) const {
    bool above_lo = same_endpoint(x, lo) ? lo_closed : x > lo;
    if (!above_lo) return false;
    if (hi_infinite) return true;
    return same_endpoint(x, hi) ? hi_closed : x < hi;
}

namespace {

// Endpoints of a set of intervals clustered into a sorted grid; cells alternate
// between grid points and the open gaps after them.
struct Grid {
    std::vector<Scalar> points;
    std::vector<std::string> exprs;
    bool unbounded = false;

    void add(const Scalar& x, const std::string& expr) {
        points.push_back(x);
        exprs.push_back(expr);
    }
    void finish() {
        std::vector<size_t> order(points.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return points[a] < points[b]; });
        std::vector<Scalar> p;
        std::vector<std::string> e;
        for (size_t i : order) {
            if (!p.empty() && same_endpoint(p.back(), points[i])) {
                if (e.back().empty()) e.back() = exprs[i];
                continue;
            }
            p.push_back(points[i]);
            e.push_back(exprs[i]);
        }
        points = std::move(p);
        exprs = std::move(e);
    }
    int index(const Scalar& x) const {
        for (size_t i = 0; i < points.size(); ++i)
            if (same_endpoint(points[i], x)) return static_cast<int>(i);
        fail(ErrorCode::PreconditionViolated, "endpoint missing from grid");
    }
    int inf_index() const { return static_cast<int>(points.size()); }
    // Cell 2j is the point j; cell 2j+1 is the gap (j, j+1), the last gap reaching infinity.
    int cell_count() const { return 2 * static_cast<int>(points.size()) - (unbounded ? 0 : 1); }
};

void add_interval(Grid& g, const Interval& iv) {
    g.add(iv.lo, iv.lo_expr);
    if (iv.hi_infinite) g.unbounded = true;
    else g.add(iv.hi, iv.hi_expr);
}

bool covers(const Grid& g, const Interval& iv, int cell) {
    const int lo = g.index(iv.lo);
    const int hi = iv.hi_infinite ? g.inf_index() : g.index(iv.hi);
    const int j = cell / 2;
    if (cell % 2 == 0) {
        if (j == lo) return iv.lo_closed && (j < hi || iv.hi_closed);
        if (j == hi) return iv.hi_closed;
        return lo < j && j < hi;
    }
    return lo <= j && j + 1 <= hi;
}

bool tighter(BoundKind kind, const Rational& a, const Rational& b) { return kind == BoundKind::LOWER ? a > b : a < b; }

std::vector<BoundPiece> normalize(const std::vector<BoundPiece>& input, BoundKind kind) {
    std::vector<const BoundPiece*> pieces;
    for (const auto& p : input)
        if (p.kind == kind) pieces.push_back(&p);
    if (pieces.empty()) return {};
    Grid g;
    for (const auto* p : pieces) add_interval(g, p->interval);
    g.finish();

    std::vector<const BoundPiece*> best(g.cell_count(), nullptr);
    for (int c = 0; c < g.cell_count(); ++c)
        for (const auto* p : pieces)
            if (covers(g, p->interval, c) && (!best[c] || tighter(kind, p->value, best[c]->value))) best[c] = p;

    std::vector<BoundPiece> out;
    int c = 0;
    while (c < g.cell_count()) {
        if (!best[c]) {
            ++c;
            continue;
        }
        int end = c;
        std::vector<std::string> notes;
        auto collect = [&](const BoundPiece* p) {
            for (const auto& n : p->notes)
                if (std::find(notes.begin(), notes.end(), n) == notes.end()) notes.push_back(n);
        };
        collect(best[c]);
        while (end + 1 < g.cell_count() && best[end + 1] && best[end + 1]->value == best[c]->value) {
            ++end;
            collect(best[end]);
        }
        BoundPiece piece;
        piece.kind = kind;
        piece.value = best[c]->value;
        piece.provenance = best[c]->provenance;
        piece.notes = notes;
        const int j0 = c / 2;
        piece.interval.lo = g.points[j0];
        piece.interval.lo_expr = g.exprs[j0];
        piece.interval.lo_closed = (c % 2 == 0);
        const int j1 = end / 2;
        if (end % 2 == 0) {
            piece.interval.hi = g.points[j1];
            piece.interval.hi_expr = g.exprs[j1];
            piece.interval.hi_closed = true;
        } else if (j1 + 1 == g.inf_index()) {
            piece.interval.hi = g.points[j1];
            piece.interval.hi_infinite = true;
            piece.interval.hi_closed = false;
        } else {
            piece.interval.hi = g.points[j1 + 1];
            piece.interval.hi_expr = g.exprs[j1 + 1];
            piece.interval.hi_closed = false;
        }
        out.push_back(std::move(piece));
        c = end + 1;
    }
    return out;
}

void check_piece(const BoundPiece& p) {
    if (p.value < 0 || p.value > 1) fail(ErrorCode::PreconditionViolated, "bound value outside [0,1]");
    const auto& iv = p.interval;
    if (!iv.hi_infinite) {
        bool point = same_endpoint(iv.lo, iv.hi);
        if (point ? !(iv.lo_closed && iv.hi_closed) : !(iv.lo < iv.hi))
            fail(ErrorCode::PreconditionViolated, "empty bound interval");
    }
}

}  // namespace

BoundTable::BoundTable(const std::vector<BoundPiece>& pieces) {
    for (const auto& p : pieces) check_piece(p);
    auto upper = normalize(pieces, BoundKind::UPPER);
    auto lower = normalize(pieces, BoundKind::LOWER);
    pieces_ = upper;
    pieces_.insert(pieces_.end(), lower.begin(), lower.end());
}

std::vector<BoundPiece> BoundTable::of_kind(BoundKind kind) const {
    std::vector<BoundPiece> out;
    for (const auto& p : pieces_)
        if (p.kind == kind) out.push_back(p);
    return out;
}

void BoundTable::insert(const BoundPiece& piece) {
    check_piece(piece);
    std::vector<BoundPiece> all = pieces_;
    all.push_back(piece);
    auto meta = metadata;
    *this = BoundTable(all);
    metadata = meta;
}

void BoundTable::add_note(size_t index, const std::string& note) { pieces_.at(index).notes.push_back(note); }

std::optional<Rational> BoundTable::upper_at(const Scalar& d) const {
    std::optional<Rational> best;
    for (const auto& p : pieces_)
        if (p.kind == BoundKind::UPPER && p.interval.contains(d) && (!best || p.value < *best)) best = p.value;
    return best;
}

std::optional<Rational> BoundTable::lower_at(const Scalar& d) const {
    std::optional<Rational> best;
    for (const auto& p : pieces_)
        if (p.kind == BoundKind::LOWER && p.interval.contains(d) && (!best || p.value > *best)) best = p.value;
    return best;
}

std::optional<Rational> BoundTable::upper_over(const Interval& xs) const {
    auto uppers = of_kind(BoundKind::UPPER);
    Grid g;
    add_interval(g, xs);
    for (const auto& p : uppers) add_interval(g, p.interval);
    g.finish();
    std::optional<Rational> weakest;
    for (int c = 0; c < g.cell_count(); ++c) {
        if (!covers(g, xs, c)) continue;
        std::optional<Rational> here;
        for (const auto& p : uppers)
            if (covers(g, p.interval, c) && (!here || p.value < *here)) here = p.value;
        if (!here) return std::nullopt;
        if (!weakest || *here > *weakest) weakest = here;
    }
    return weakest;
}

}  // namespace planechroma
