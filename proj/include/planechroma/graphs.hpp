#pragma once

#include "planechroma/scalar.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace planechroma {

using Edge = std::pair<int, int>;

// Vertices are 0..n-1; edges are stored normalized (u < v) and sorted.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n, const std::vector<Edge>& edges = {});

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool adjacent(int u, int v) const;
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;

    void add_edge(int u, int v);
    SimpleGraph induced(const std::vector<int>& vertices) const;

    bool operator==(const SimpleGraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<char>> adj_;
};

enum class EdgeLabel { UNIT, D };

class BicoloredGraph {
public:
    BicoloredGraph() = default;
    BicoloredGraph(int n, const std::vector<std::pair<Edge, EdgeLabel>>& labeled);

    const SimpleGraph& base() const { return base_; }
    int n() const { return base_.n(); }
    // Label of an existing edge; parallel to base().edges().
    EdgeLabel label(int u, int v) const;
    const std::vector<EdgeLabel>& labels() const { return labels_; }

    bool operator==(const BicoloredGraph& o) const { return base_ == o.base_ && labels_ == o.labels_; }

private:
    SimpleGraph base_;
    std::vector<EdgeLabel> labels_;
};

enum class RangeKind { MIN_D, MAX_D };

struct RangeConstraint {
    RangeKind kind;
    Rational bound;
    std::vector<int> witness_cycle;
};

std::optional<std::array<int, 4>> contains_k4(const SimpleGraph& g);
std::optional<std::pair<std::array<int, 2>, std::array<int, 3>>> contains_k23(const SimpleGraph& g);

// Canonical form: lexicographically smallest sorted edge list over all relabelings (n <= 8).
std::vector<Edge> canonical_edges(const SimpleGraph& g);
std::vector<SimpleGraph> enumerate_small_graphs(int n);

bool is_udg_small(const SimpleGraph& g);
int max_edges_small(int n);

bool triangle_chain_rigid(const SimpleGraph& g);

std::vector<RangeConstraint> offcolor_cycle_constraints(const BicoloredGraph& bg);
BicoloredGraph inverse(const BicoloredGraph& bg);

}  // namespace planechroma
