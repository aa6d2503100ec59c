#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "planechroma/embeddings.hpp"
#include "planechroma/errors.hpp"
#include "planechroma/graphs.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace planechroma;

namespace {

SimpleGraph complete(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

SimpleGraph cycle(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

SimpleGraph k23() { return SimpleGraph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}); }

SimpleGraph relabel(const SimpleGraph& g, const std::vector<int>& perm) {
    SimpleGraph h(g.n());
    for (const auto& [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

BicoloredGraph triangle(EdgeLabel a, EdgeLabel b, EdgeLabel c) {
    return BicoloredGraph(3, {{{0, 1}, a}, {{1, 2}, b}, {{0, 2}, c}});
}

using C = std::tuple<RangeKind, Rational, std::vector<int>>;
std::vector<C> flatten(const std::vector<RangeConstraint>& cs) {
    std::vector<C> out;
    for (const auto& c : cs) out.emplace_back(c.kind, c.bound, c.witness_cycle);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("simple graph invariants") {
    SimpleGraph g(3);
    g.add_edge(2, 0);
    CHECK(g.edges() == std::vector<Edge>{{0, 2}});
    CHECK_THROWS_AS(g.add_edge(0, 2), Error);
    CHECK_THROWS_AS(g.add_edge(1, 1), Error);
    CHECK_THROWS_AS(g.add_edge(0, 3), Error);
}

TEST_CASE("contains_k4 examples") {
    auto w = contains_k4(complete(4));
    REQUIRE(w);
    CHECK(*w == std::array<int, 4>{0, 1, 2, 3});
    CHECK_FALSE(contains_k4(catalog("moser-spindle").graph));
    CHECK_FALSE(contains_k4(cycle(5)));
}

TEST_CASE("moser spindle has no K4 among all 4-sets (brute force oracle)") {
    const auto g = catalog("moser-spindle").graph;
    for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b)
            for (int c = b + 1; c < 7; ++c)
                for (int d = c + 1; d < 7; ++d) {
                    const bool clique = g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(a, d) &&
                                        g.adjacent(b, c) && g.adjacent(b, d) && g.adjacent(c, d);
                    CHECK_FALSE(clique);
                }
}

TEST_CASE("contains_k23 examples") {
    auto w = contains_k23(k23());
    REQUIRE(w);
    CHECK(w->first == std::array<int, 2>{0, 1});
    CHECK(w->second == std::array<int, 3>{2, 3, 4});
    CHECK_FALSE(contains_k23(catalog("moser-spindle").graph));

    // Graph 9 plus a vertex joined to any two non-adjacent vertices
    const auto g9 = catalog("schade-9").graph;
    CHECK_FALSE(contains_k23(g9));
    int tried = 0;
    for (int u = 0; u < g9.n(); ++u)
        for (int v = u + 1; v < g9.n(); ++v) {
            if (g9.adjacent(u, v)) continue;
            SimpleGraph h(g9.n() + 1, g9.edges());
            h.add_edge(u, g9.n());
            h.add_edge(v, g9.n());
            CHECK(contains_k23(h));
            ++tried;
        }
    CHECK(tried == 18);
}

TEST_CASE("enumerate_small_graphs class counts") {
    const int expected[] = {0, 1, 2, 4, 11, 34};
    for (int n = 1; n <= 5; ++n) CHECK(enumerate_small_graphs(n).size() == static_cast<size_t>(expected[n]));
}

TEST_CASE("property: enumerated classes are pairwise non-isomorphic") {
    for (int n = 1; n <= 5; ++n) {
        std::set<std::vector<Edge>> forms;
        for (const auto& g : enumerate_small_graphs(n)) CHECK(forms.insert(canonical_edges(g)).second);
    }
}

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937_64 rng(5);
    const auto g = catalog("moser-spindle").graph;
    std::vector<int> perm(7);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = 0; i < 20; ++i) {
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_edges(relabel(g, perm)) == canonical_edges(g));
    }
}

TEST_CASE("is_udg_small examples") {
    CHECK_FALSE(is_udg_small(complete(4)));
    CHECK(is_udg_small(cycle(5)));
    CHECK_FALSE(is_udg_small(k23()));
    CHECK_THROWS_AS(is_udg_small(cycle(6)), Error);
}

TEST_CASE("max_edges_small matches the first Schade entries") {
    const int expected[] = {0, 0, 1, 3, 5, 7};
    for (int n = 1; n <= 5; ++n) CHECK(max_edges_small(n) == expected[n]);
    try {
        max_edges_small(6);
        FAIL("expected InputTooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InputTooLarge);
    }
}

TEST_CASE("triangle_chain_rigid examples") {
    CHECK(triangle_chain_rigid(complete(3)));
    CHECK_FALSE(triangle_chain_rigid(catalog("moser-spindle").graph));
    CHECK(triangle_chain_rigid(SimpleGraph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}})));
    CHECK_FALSE(triangle_chain_rigid(cycle(4)));
    // two triangles sharing only a vertex
    CHECK_FALSE(triangle_chain_rigid(SimpleGraph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}})));
}

TEST_CASE("property: triangle_chain_rigid is relabeling invariant") {
    std::mt19937_64 rng(6);
    for (const auto& name : catalog_names()) {
        const auto g = catalog(name).graph;
        if (g.n() > 9) continue;
        std::vector<int> perm(g.n());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(triangle_chain_rigid(relabel(g, perm)) == triangle_chain_rigid(g));
    }
}

TEST_CASE("offcolor_cycle_constraints examples") {
    using L = EdgeLabel;
    auto a = offcolor_cycle_constraints(triangle(L::UNIT, L::D, L::D));
    REQUIRE(a.size() == 1);
    CHECK(a[0].kind == RangeKind::MIN_D);
    CHECK(a[0].bound == Rational(1, 2));

    auto b = offcolor_cycle_constraints(triangle(L::D, L::UNIT, L::UNIT));
    REQUIRE(b.size() == 1);
    CHECK(b[0].kind == RangeKind::MAX_D);
    CHECK(b[0].bound == 2);

    BicoloredGraph sq(4, {{{0, 1}, L::UNIT}, {{1, 2}, L::D}, {{2, 3}, L::D}, {{3, 0}, L::D}});
    auto c = offcolor_cycle_constraints(sq);
    REQUIRE(c.size() == 1);
    CHECK(c[0].kind == RangeKind::MIN_D);
    CHECK(c[0].bound == Rational(1, 3));
    CHECK(c[0].witness_cycle.size() == 4);

    CHECK(offcolor_cycle_constraints(triangle(L::UNIT, L::UNIT, L::UNIT)).empty());
    BicoloredGraph big(13, {});
    CHECK_THROWS_AS(offcolor_cycle_constraints(big), Error);
}

TEST_CASE("inverse examples") {
    using L = EdgeLabel;
    const auto t = inverse(triangle(L::UNIT, L::UNIT, L::UNIT));
    for (auto l : t.labels()) CHECK(l == L::D);
    const auto g6 = *catalog("one-d-6").bicolored;
    const auto inv = inverse(g6);
    CHECK(std::count(inv.labels().begin(), inv.labels().end(), L::D) == 6);
    CHECK(std::count(inv.labels().begin(), inv.labels().end(), L::UNIT) == 3);
    CHECK(inverse(inv) == g6);
    CHECK(inverse(BicoloredGraph(0, {})) == BicoloredGraph(0, {}));
}

TEST_CASE("property: inverse duality on range constraints") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 4);
        std::vector<std::pair<Edge, EdgeLabel>> labeled;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 3 != 0) labeled.push_back({{i, j}, rng() % 2 ? EdgeLabel::UNIT : EdgeLabel::D});
        const BicoloredGraph bg(n, labeled);
        std::vector<RangeConstraint> mapped;
        for (auto c : offcolor_cycle_constraints(bg)) {
            c.kind = c.kind == RangeKind::MIN_D ? RangeKind::MAX_D : RangeKind::MIN_D;
            c.bound = 1 / c.bound;
            mapped.push_back(c);
        }
        CHECK(flatten(offcolor_cycle_constraints(inverse(bg))) == flatten(mapped));
    }
}

TEST_CASE("property: every catalog entry with n <= 5 agrees with the small-graph test") {
    for (const auto& name : catalog_names()) {
        const auto e = catalog(name);
        if (e.graph.n() <= 5 && !e.bicolored) CHECK(is_udg_small(e.graph));
    }
}
