#include "planechroma/graphs.hpp"
#include "planechroma/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace planechroma {

SimpleGraph::SimpleGraph(int n, const std::vector<Edge>& edges) : n_(n), adj_(n, std::vector<char>(n, 0)) {
    if (n < 0) fail(ErrorCode::InvalidInput, "negative vertex count");
    for (const auto& [u, v] : edges) add_edge(u, v);
}

bool SimpleGraph::adjacent(int u, int v) const { return adj_[u][v] != 0; }

int SimpleGraph::degree(int v) const { return static_cast<int>(std::count(adj_[v].begin(), adj_[v].end(), 1)); }

std::vector<int> SimpleGraph::neighbors(int v) const {
    std::vector<int> out;
    for (int w = 0; w < n_; ++w)
        if (adj_[v][w]) out.push_back(w);
    return out;
}

void SimpleGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) fail(ErrorCode::InvalidInput, "edge endpoint out of range");
    if (u == v) fail(ErrorCode::InvalidInput, "loops are not allowed");
    if (adj_[u][v]) fail(ErrorCode::InvalidInput, "duplicate edge");
    adj_[u][v] = adj_[v][u] = 1;
    Edge e{std::min(u, v), std::max(u, v)};
    edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), e), e);
}

SimpleGraph SimpleGraph::induced(const std::vector<int>& vertices) const {
    SimpleGraph h(static_cast<int>(vertices.size()));
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (adjacent(vertices[i], vertices[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

BicoloredGraph::BicoloredGraph(int n, const std::vector<std::pair<Edge, EdgeLabel>>& labeled) : base_(n) {
    for (const auto& [e, lab] : labeled) base_.add_edge(e.first, e.second);
    labels_.resize(base_.edges().size());
    for (const auto& [e, lab] : labeled) {
        Edge key{std::min(e.first, e.second), std::max(e.first, e.second)};
        auto it = std::lower_bound(base_.edges().begin(), base_.edges().end(), key);
        labels_[it - base_.edges().begin()] = lab;
    }
}

EdgeLabel BicoloredGraph::label(int u, int v) const {
    Edge key{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(base_.edges().begin(), base_.edges().end(), key);
    if (it == base_.edges().end() || *it != key) fail(ErrorCode::InvalidInput, "no such edge");
    return labels_[it - base_.edges().begin()];
}

std::optional<std::array<int, 4>> contains_k4(const SimpleGraph& g) {
    const int n = g.n();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!g.adjacent(a, b)) continue;
            for (int c = b + 1; c < n; ++c) {
                if (!g.adjacent(a, c) || !g.adjacent(b, c)) continue;
                for (int d = c + 1; d < n; ++d)
                    if (g.adjacent(a, d) && g.adjacent(b, d) && g.adjacent(c, d)) return std::array<int, 4>{a, b, c, d};
            }
        }
    return std::nullopt;
}

std::optional<std::pair<std::array<int, 2>, std::array<int, 3>>> contains_k23(const SimpleGraph& g) {
    const int n = g.n();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            std::vector<int> common;
            for (int v = 0; v < n; ++v)
                if (v != a && v != b && g.adjacent(a, v) && g.adjacent(b, v)) common.push_back(v);
            if (common.size() >= 3)
                return std::make_pair(std::array<int, 2>{a, b}, std::array<int, 3>{common[0], common[1], common[2]});
        }
    return std::nullopt;
}

std::vector<Edge> canonical_edges(const SimpleGraph& g) {
    const int n = g.n();
    if (n > 8) fail(ErrorCode::InputTooLarge, "canonical form limited to 8 vertices");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Edge> best;
    bool have = false;
    do {
        std::vector<Edge> relabeled;
        relabeled.reserve(g.edges().size());
        for (const auto& [u, v] : g.edges()) {
            int a = perm[u], b = perm[v];
            relabeled.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(relabeled.begin(), relabeled.end());
        if (!have || relabeled < best) {
            best = std::move(relabeled);
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<SimpleGraph> enumerate_small_graphs(int n) {
    if (n < 1) fail(ErrorCode::PreconditionViolated, "need at least one vertex");
    if (n > 5) fail(ErrorCode::InputTooLarge, "enumeration limited to 5 vertices");
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::set<std::pair<size_t, std::vector<Edge>>> seen;
    for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
        std::vector<Edge> chosen;
        for (size_t i = 0; i < slots.size(); ++i)
            if (mask & (1u << i)) chosen.push_back(slots[i]);
        auto canon = canonical_edges(SimpleGraph(n, chosen));
        seen.emplace(canon.size(), std::move(canon));
    }
    std::vector<SimpleGraph> out;
    for (const auto& [count, edges] : seen) out.emplace_back(n, edges);
    return out;
}

bool is_udg_small(const SimpleGraph& g) {
    if (g.n() > 5) fail(ErrorCode::InputTooLarge, "forbidden-subgraph test only valid up to 5 vertices");
    return !contains_k4(g) && !contains_k23(g);
}

int max_edges_small(int n) {
    if (n > 5) fail(ErrorCode::InputTooLarge, "limited to 5 vertices");
    int best = 0;
    for (const auto& g : enumerate_small_graphs(n))
        if (is_udg_small(g)) best = std::max(best, static_cast<int>(g.edges().size()));
    return best;
}

bool triangle_chain_rigid(const SimpleGraph& g) {
    const int n = g.n();
    std::vector<std::array<int, 3>> tris;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (g.adjacent(a, b))
                for (int c = b + 1; c < n; ++c)
                    if (g.adjacent(a, c) && g.adjacent(b, c)) tris.push_back({a, b, c});
    if (tris.empty()) return false;

    auto has_edge = [](const std::array<int, 3>& t, int u, int v) {
        auto in = [&](int x) { return x == t[0] || x == t[1] || x == t[2]; };
        return in(u) && in(v);
    };
    for (const auto& [u, v] : g.edges()) {
        bool covered = std::any_of(tris.begin(), tris.end(), [&](const auto& t) { return has_edge(t, u, v); });
        if (!covered) return false;
    }
    for (int v = 0; v < n; ++v) {
        bool covered = std::any_of(tris.begin(), tris.end(),
                                   [&](const auto& t) { return t[0] == v || t[1] == v || t[2] == v; });
        if (!covered) return false;
    }

    auto share_edge = [](const std::array<int, 3>& s, const std::array<int, 3>& t) {
        int common = 0;
        for (int x : s)
            for (int y : t) common += (x == y);
        return common == 2;
    };
    std::vector<char> seen(tris.size(), 0);
    std::vector<size_t> stack{0};
    seen[0] = 1;
    size_t reached = 1;
    while (!stack.empty()) {
        size_t i = stack.back();
        stack.pop_back();
        for (size_t j = 0; j < tris.size(); ++j)
            if (!seen[j] && share_edge(tris[i], tris[j])) {
                seen[j] = 1;
                ++reached;
                stack.push_back(j);
            }
    }
    return reached == tris.size();
}

std::vector<RangeConstraint> offcolor_cycle_constraints(const BicoloredGraph& bg) {
    const int n = bg.n();
    if (n > 12) fail(ErrorCode::InputTooLarge, "cycle enumeration limited to 12 vertices");
    const SimpleGraph& g = bg.base();
    std::vector<RangeConstraint> out;
    std::vector<int> path;
    std::vector<char> on_path(n, 0);

    auto emit = [&]() {
        int units = 0;
        int ds = 0;
        const int len = static_cast<int>(path.size());
        for (int i = 0; i < len; ++i) {
            EdgeLabel lab = bg.label(path[i], path[(i + 1) % len]);
            (lab == EdgeLabel::UNIT ? units : ds) += 1;
        }
        if (units == 1) out.push_back({RangeKind::MIN_D, Rational(1, len - 1), path});
        if (ds == 1) out.push_back({RangeKind::MAX_D, Rational(len - 1), path});
    };

    std::function<void(int, int)> extend = [&](int start, int v) {
        for (int w : g.neighbors(v)) {
            if (w == start && path.size() >= 3 && path[1] < path.back()) emit();
            if (w <= start || on_path[w]) continue;
            path.push_back(w);
            on_path[w] = 1;
            extend(start, w);
            on_path[w] = 0;
            path.pop_back();
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        on_path[s] = 1;
        extend(s, s);
        on_path[s] = 0;
    }
    return out;
}

BicoloredGraph inverse(const BicoloredGraph& bg) {
    std::vector<std::pair<Edge, EdgeLabel>> swapped;
    const auto& edges = bg.base().edges();
    for (size_t i = 0; i < edges.size(); ++i)
        swapped.emplace_back(edges[i], bg.labels()[i] == EdgeLabel::UNIT ? EdgeLabel::D : EdgeLabel::UNIT);
    return BicoloredGraph(bg.n(), swapped);
}

}  // namespace planechroma
