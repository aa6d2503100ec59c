#pragma once

#include "planechroma/geometry.hpp"
#include "planechroma/graphs.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace planechroma {

struct Coloring {
    int k = 0;
    std::vector<int> colors;
};

bool is_proper(const SimpleGraph& g, const std::vector<int>& colors);

std::optional<Coloring> k_colorable(const SimpleGraph& g, int k);
int chromatic_number(const SimpleGraph& g);

// Guard: k^n <= 1e7.
std::vector<Coloring> enumerate_proper_colorings(const SimpleGraph& g, int k);
int max_color_multiplicity(const SimpleGraph& g, int k);

std::string export_cnf(const SimpleGraph& g, int k);

struct Cnf {
    int variables = 0;
    std::vector<std::vector<int>> clauses;
};
Cnf parse_dimacs(const std::string& text);
// Small DPLL solver; returns a satisfying assignment indexed by variable (1-based) if one exists.
std::optional<std::vector<bool>> dpll_solve(const Cnf& cnf);

struct HexConfig {
    Scalar s;
};

struct HexCell {
    long long a = 0;
    long long b = 0;
};

// Valid side lengths are [1/sqrt(7), 1/2].
void check_hex_side(const Scalar& s);
HexCell hex_cell(const Point& p, const HexConfig& cfg);
int hex_color(const Point& p, const HexConfig& cfg);
Point hex_center(const HexCell& cell, const HexConfig& cfg);

struct HexReport {
    long long samples = 0;
    long long violations = 0;
    // Smallest distance seen between same-colored points lying in different hexagons.
    Scalar min_same_color_dist_observed;
    long long same_color_pairs = 0;
    long long exact_fallbacks = 0;
};
HexReport hex_verify(const HexConfig& cfg, long long samples, std::uint64_t seed);

}  // namespace planechroma
