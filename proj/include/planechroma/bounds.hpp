#pragma once

#include "planechroma/scalar.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace planechroma {

struct Interval {
    Scalar lo;
    Scalar hi;
    bool lo_closed = true;
    bool hi_closed = true;
    bool hi_infinite = false;
    std::string lo_expr;
    std::string hi_expr;

    static Interval closed(const Scalar& lo, const Scalar& hi);
    static Interval point(const Scalar& x);
    static Interval ray(const Scalar& lo, bool lo_closed);  // [lo, inf) or (lo, inf)

    bool contains(const Scalar& x) const;
};

enum class BoundKind { UPPER, LOWER };

struct BoundPiece {
    Interval interval;
    BoundKind kind = BoundKind::LOWER;
    Rational value;
    std::string provenance;
    std::vector<std::string> notes;
};

// Pieces of each kind are kept disjoint; inserting keeps the pointwise tightest value.
class BoundTable {
public:
    BoundTable() = default;
    explicit BoundTable(const std::vector<BoundPiece>& pieces);

    const std::vector<BoundPiece>& pieces() const { return pieces_; }
    std::vector<BoundPiece> of_kind(BoundKind kind) const;

    void insert(const BoundPiece& piece);
    void add_note(size_t index, const std::string& note);

    std::optional<Rational> upper_at(const Scalar& d) const;
    std::optional<Rational> lower_at(const Scalar& d) const;
    // Weakest upper bound over every x in xs; absent unless xs is fully covered.
    std::optional<Rational> upper_over(const Interval& xs) const;

    std::vector<std::pair<std::string, std::string>> metadata;

private:
    std::vector<BoundPiece> pieces_;
};

// Relative tolerance used to identify interval endpoints computed along different routes.
bool same_endpoint(const Scalar& a, const Scalar& b);

long long f_min_mono_pairs(int n);
long long f_brute(int n);

BoundTable upper_bound_table();

struct ChainSpec {
    std::string name;
    std::vector<int> slack_coefficients;
    Scalar d_threshold;
    std::string threshold_expr;
};
ChainSpec chain_spec_31();
ChainSpec chain_spec_25();
BoundPiece chain_bound(const ChainSpec& spec);

struct DistanceDescriptor {
    std::string symbol;
    // Range of values this distance takes over the configuration's d-range.
    Interval range;
    // Distance known to satisfy x >= d/2, bounded through the halving rule instead of the table.
    bool halving = false;
};

struct PointConfig {
    int n = 5;
    int d_pair_count = 1;
    int unit_pair_count = 0;
    std::vector<DistanceDescriptor> other_distances;
    Interval d_range;
    std::string provenance;
};

struct ExpectationOutcome {
    bool positive = false;
    Rational value;
    std::optional<BoundPiece> piece;
};

// (f(n) - sum of upper bounds on the other distances) / d_pair_count, kept exact.
ExpectationOutcome lower_bound_expectation(const PointConfig& cfg, const BoundTable& known);

// The two consequences of 2(1 - p_x) >= 1 - p_d for x >= d/2 that carry information.
std::vector<BoundPiece> halving_rule(const Scalar& d, const Scalar& x, const BoundTable& known);

enum class Family { F1, F2, F3, F4, F5 };
enum class Branch { NEAR, FAR };

const char* family_name(Family f);
int family_d_pairs(Family f);
// Admissible |x| on a branch.
Interval family_x_domain(Family f, Branch b);
bool family_increasing(Family f, Branch b);
Scalar family_d_of_x(Family f, const Scalar& x, Branch b);
// Distance |EA| of the graph-5 construction as a function of d.
Scalar family5_ea(const Scalar& d);

std::vector<BoundPiece> family_intervals(Family f, const BoundTable& known);
// Configurations used by the fixed-point derivation (graph-2 geometry with x >= d/2).
std::vector<PointConfig> halving_configs();
BoundTable propagate(const BoundTable& known, const std::vector<PointConfig>& configs, int max_rounds);

// Pieces of the printed summary, as stated, for comparison with the recomputation.
struct PrintedPiece {
    std::string interval_text;
    BoundKind kind;
    Rational value;
    std::optional<Scalar> lo;
    double lo_tol = 0;
    std::optional<Scalar> hi;
    double hi_tol = 0;
};
std::vector<PrintedPiece> printed_summary();
BoundTable summary_table(const BoundTable& known);

// Other point configurations with a fixed d.
PointConfig graph6_config();
PointConfig graph6_inverse_config();

Scalar crossing_objective(const Scalar& x);
Scalar crossing_constant();
Scalar u_upper_coefficient();
Scalar u_upper(int n);

struct DensityFinding {
    int n;
    long long u_prev;
    long long u_n;
    bool violation;
    bool tight;
};
std::vector<DensityFinding> density_recurrence_check(const std::vector<std::pair<int, long long>>& table);
std::vector<std::pair<int, long long>> schade_table();

std::string to_csv(const BoundTable& table);
std::string to_svg(const BoundTable& table);
std::string rational_str(const Rational& r);

}  // namespace planechroma
