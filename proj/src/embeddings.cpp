#include "planechroma/embeddings.hpp"
#include "planechroma/errors.hpp"
#include "rng.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace planechroma {

using boost::multiprecision::abs;

namespace {

bool is_edge(const SimpleGraph& g, int u, int v) { return g.adjacent(u, v); }

}  // namespace

Tolerance sampling_tolerance() { return Tolerance::of(Scalar(1e-9)); }

UdrReport verify(const SimpleGraph& g, const Embedding& emb, const Tolerance& tol) {
    if (static_cast<int>(emb.size()) != g.n()) fail(ErrorCode::SizeMismatch, "embedding size differs from vertex count");
    UdrReport r;
    const int n = g.n();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            Scalar d2 = dist2(emb.points[u], emb.points[v]);
            if (d2 <= tol.eps2) r.coincident_pairs.push_back({u, v});
            bool unit = abs(d2 - 1) <= tol.eps2;
            if (is_edge(g, u, v)) {
                if (!unit) r.edge_violations.push_back({{u, v}, d2});
            } else if (unit) {
                r.nonedge_unit_pairs.push_back({u, v});
            }
        }
    r.is_udr = r.edge_violations.empty() && r.coincident_pairs.empty();
    r.is_faithful = r.is_udr && r.nonedge_unit_pairs.empty();
    return r;
}

UdrReport verify_bicolored(const BicoloredGraph& bg, const Embedding& emb, const Scalar& d, const Tolerance& tol) {
    if (!(d > 0)) fail(ErrorCode::NonpositiveD, "d must be positive");
    if (static_cast<int>(emb.size()) != bg.n()) fail(ErrorCode::SizeMismatch, "embedding size differs from vertex count");
    UdrReport r;
    const Scalar dd = d * d;
    const int n = bg.n();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            Scalar d2 = dist2(emb.points[u], emb.points[v]);
            if (d2 <= tol.eps2) r.coincident_pairs.push_back({u, v});
            bool at_one = abs(d2 - 1) <= tol.eps2;
            bool at_d = abs(d2 - dd) <= tol.eps2;
            if (bg.base().adjacent(u, v)) {
                bool ok = bg.label(u, v) == EdgeLabel::UNIT ? at_one : at_d;
                if (!ok) r.edge_violations.push_back({{u, v}, d2});
            } else if (at_one || at_d) {
                r.nonedge_unit_pairs.push_back({u, v});
            }
        }
    r.is_udr = r.edge_violations.empty() && r.coincident_pairs.empty();
    r.is_faithful = r.is_udr && r.nonedge_unit_pairs.empty();
    return r;
}

SimpleGraph unit_distance_graph(const Embedding& emb, const Tolerance& tol) {
    const int n = static_cast<int>(emb.size());
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (cmp_dist2(emb.points[u], emb.points[v], Scalar(1), tol) == Cmp::EQUAL) g.add_edge(u, v);
    return g;
}

int count_unit_pairs(const Embedding& emb, const Tolerance& tol) {
    return static_cast<int>(unit_distance_graph(emb, tol).edges().size());
}

Embedding sub_embedding(const Embedding& emb, const std::vector<int>& vertices) {
    Embedding out;
    for (int v : vertices) out.points.push_back(emb.points.at(v));
    return out;
}

namespace {

// Points closer than this (squared) count as collapsed in the randomized constructions.
const double kCollapse2 = 1e-16;

bool all_distinct(const std::vector<Point>& pts) {
    std::vector<std::pair<double, double>> approx;
    approx.reserve(pts.size());
    for (const auto& p : pts) approx.emplace_back(p.x.convert_to<double>(), p.y.convert_to<double>());
    std::vector<size_t> order(pts.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return approx[a] < approx[b]; });
    const double gap = std::sqrt(kCollapse2);
    for (size_t i = 0; i < order.size(); ++i)
        for (size_t j = i + 1; j < order.size(); ++j) {
            const auto& a = approx[order[i]];
            const auto& b = approx[order[j]];
            if (b.first - a.first > gap) break;
            double dx = a.first - b.first, dy = a.second - b.second;
            if (dx * dx + dy * dy <= kCollapse2) return false;
        }
    return true;
}

constexpr int kRotationBudget = 256;

}  // namespace

Embedding minkowski_sum(const Embedding& a, const Embedding& b, std::uint64_t seed) {
    if (a.size() == 0 || b.size() == 0) fail(ErrorCode::PreconditionViolated, "empty embedding");
    detail::Stream rng(seed, 0x6d696e6bULL);
    const Point origin{Scalar(0), Scalar(0)};
    for (int attempt = 0; attempt < kRotationBudget; ++attempt) {
        Scalar angle = Scalar(rng.uniform()) * 2 * pi();
        Embedding out;
        for (const auto& p : a.points)
            for (const auto& q : b.points) {
                Point r = rotate(q, origin, angle);
                out.points.push_back({p.x + r.x, p.y + r.y});
            }
        if (all_distinct(out.points)) return out;
    }
    fail(ErrorCode::SearchExhausted, "no admissible rotation found");
}

Embedding doubled_copy(const Embedding& emb, std::uint64_t seed) {
    if (emb.size() == 0) fail(ErrorCode::PreconditionViolated, "empty embedding");
    detail::Stream rng(seed, 0x646f75626cULL);
    for (int attempt = 0; attempt < kRotationBudget; ++attempt) {
        Scalar angle = Scalar(rng.uniform()) * 2 * pi();
        Scalar vx = boost::multiprecision::cos(angle), vy = boost::multiprecision::sin(angle);
        Embedding out = emb;
        for (const auto& p : emb.points) out.points.push_back({p.x + vx, p.y + vy});
        if (all_distinct(out.points)) return out;
    }
    fail(ErrorCode::SearchExhausted, "no admissible translation found");
}

Embedding unit_hypercube(int order, std::uint64_t seed) {
    if (order < 0) fail(ErrorCode::PreconditionViolated, "negative order");
    if (order > 10) fail(ErrorCode::InputTooLarge, "order limited to 10");
    Embedding cube{{Point{Scalar(0), Scalar(0)}}};
    for (int k = 0; k < order; ++k) cube = doubled_copy(cube, detail::splitmix64(seed + static_cast<std::uint64_t>(k)));
    return cube;
}

int count_equilateral(const std::vector<Point>& points, const Scalar& side, const Tolerance& tol) {
    if (!(side > 0)) fail(ErrorCode::PreconditionViolated, "side must be positive");
    const Scalar s2 = side * side;
    const size_t n = points.size();
    int count = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            if (cmp_dist2(points[i], points[j], s2, tol) != Cmp::EQUAL) continue;
            for (size_t k = j + 1; k < n; ++k)
                if (cmp_dist2(points[i], points[k], s2, tol) == Cmp::EQUAL &&
                    cmp_dist2(points[j], points[k], s2, tol) == Cmp::EQUAL)
                    ++count;
        }
    return count;
}

namespace {

class ExprParser {
public:
    explicit ExprParser(const std::string& text) : s_(text) {}

    Scalar parse() {
        Scalar v = expr();
        skip();
        if (pos_ != s_.size()) error("trailing input");
        return v;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;

    [[noreturn]] void error(const std::string& why) {
        fail(ErrorCode::InvalidInput, "expression '" + s_ + "': " + why);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }
    Scalar term() {
        Scalar v = factor();
        for (;;) {
            if (eat('*')) v *= factor();
            else if (eat('/')) {
                Scalar den = factor();
                if (den == 0) error("division by zero");
                v /= den;
            } else return v;
        }
    }
    Scalar factor() {
        skip();
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        if (eat('(')) {
            Scalar v = expr();
            if (!eat(')')) error("missing ')'");
            return v;
        }
        if (s_.compare(pos_, 4, "sqrt") == 0) {
            pos_ += 4;
            if (!eat('(')) error("expected '(' after sqrt");
            Scalar v = expr();
            if (!eat(')')) error("missing ')'");
            if (v < 0) error("sqrt of negative value");
            return boost::multiprecision::sqrt(v);
        }
        size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
        if (start == pos_) error("expected number");
        return Scalar(s_.substr(start, pos_ - start));
    }
};

}  // namespace

Scalar eval_expr(const std::string& text) { return ExprParser(text).parse(); }

}  // namespace planechroma
