#pragma once

#include "planechroma/geometry.hpp"
#include "planechroma/graphs.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace planechroma {

struct Embedding {
    std::vector<Point> points;
    size_t size() const { return points.size(); }
};

struct EdgeViolation {
    Edge edge;
    Scalar actual2;
};

struct UdrReport {
    bool is_udr = false;
    bool is_faithful = false;
    std::vector<EdgeViolation> edge_violations;
    std::vector<Edge> nonedge_unit_pairs;
    std::vector<Edge> coincident_pairs;
};

struct RealizeConfig {
    int attempts = 64;
    int max_iterations = 400;
    std::uint64_t seed = 0;
    double step_tolerance = 1e-15;
    double residual_tolerance = 1e-22;
    // Restarts may be spread over worker threads; results do not depend on this.
    int workers = 1;
};

UdrReport verify(const SimpleGraph& g, const Embedding& emb, const Tolerance& tol);
UdrReport verify_bicolored(const BicoloredGraph& bg, const Embedding& emb, const Scalar& d, const Tolerance& tol);

// Tolerance used to accept numerically found realizations.
Tolerance sampling_tolerance();

// Graph whose edges are exactly the pairs at distance 1 within tol.
SimpleGraph unit_distance_graph(const Embedding& emb, const Tolerance& tol);
int count_unit_pairs(const Embedding& emb, const Tolerance& tol);
Embedding sub_embedding(const Embedding& emb, const std::vector<int>& vertices);

Embedding minkowski_sum(const Embedding& a, const Embedding& b, std::uint64_t seed);
Embedding doubled_copy(const Embedding& emb, std::uint64_t seed);
Embedding unit_hypercube(int order, std::uint64_t seed);

int count_equilateral(const std::vector<Point>& points, const Scalar& side, const Tolerance& tol);

// Evaluates expressions over numbers, + - * /, parentheses and sqrt(...).
Scalar eval_expr(const std::string& text);

struct CatalogEntry {
    std::string name;
    std::string description;
    SimpleGraph graph;
    std::optional<BicoloredGraph> bicolored;
    std::optional<Scalar> d;
    std::string d_expr;
    Embedding embedding;
    std::vector<std::string> coordinate_exprs;  // "x|y" per vertex
    std::map<std::string, std::string> metadata;
};

std::vector<std::string> catalog_names();
CatalogEntry catalog(const std::string& name);

std::optional<Embedding> realize(const SimpleGraph& g, const RealizeConfig& cfg);
std::optional<Embedding> realize_bicolored(const BicoloredGraph& bg, const Scalar& d, const RealizeConfig& cfg);

struct ScanSample {
    Scalar d;
    bool feasible;
};
std::vector<ScanSample> range_scan(const BicoloredGraph& bg, const Scalar& d_lo, const Scalar& d_hi, int steps,
                                   const RealizeConfig& cfg);

}  // namespace planechroma
