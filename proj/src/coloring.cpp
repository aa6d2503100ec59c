#include "planechroma/coloring.hpp"
#include "planechroma/errors.hpp"
#include "rng.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace planechroma {

bool is_proper(const SimpleGraph& g, const std::vector<int>& colors) {
    if (static_cast<int>(colors.size()) != g.n()) return false;
    for (const auto& [u, v] : g.edges())
        if (colors[u] == colors[v]) return false;
    return true;
}

std::optional<Coloring> k_colorable(const SimpleGraph& g, int k) {
    if (k < 1) fail(ErrorCode::PreconditionViolated, "k must be at least 1");
    const int n = g.n();
    std::vector<int> color(n, -1);
    std::vector<std::vector<int>> nb(n);
    for (int v = 0; v < n; ++v) nb[v] = g.neighbors(v);

    auto pick = [&]() {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            std::vector<char> seen(k, 0);
            int sat = 0;
            for (int w : nb[v])
                if (color[w] >= 0 && !seen[color[w]]) {
                    seen[color[w]] = 1;
                    ++sat;
                }
            int deg = static_cast<int>(nb[v].size());
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    };

    std::function<bool(int, int)> search = [&](int placed, int used) {
        if (placed == n) return true;
        int v = pick();
        for (int c = 0; c < std::min(k, used + 1); ++c) {
            bool clash = false;
            for (int w : nb[v])
                if (color[w] == c) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            color[v] = c;
            if (search(placed + 1, std::max(used, c + 1))) return true;
            color[v] = -1;
        }
        return false;
    };
    if (!search(0, 0)) return std::nullopt;
    return Coloring{k, color};
}

int chromatic_number(const SimpleGraph& g) {
    if (g.n() < 1) fail(ErrorCode::PreconditionViolated, "graph must have a vertex");
    for (int k = 1;; ++k)
        if (k_colorable(g, k)) return k;
}

namespace {

void check_enumeration_guard(int n, int k) {
    if (k < 1) fail(ErrorCode::PreconditionViolated, "k must be at least 1");
    double total = std::pow(static_cast<double>(k), n);
    if (total > 1e7) fail(ErrorCode::InputTooLarge, "k^n exceeds 1e7");
}

template <class Visit>
void for_each_proper(const SimpleGraph& g, int k, Visit visit) {
    const int n = g.n();
    std::vector<int> color(n, -1);
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            visit(color);
            return;
        }
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (int w = 0; w < v; ++w)
                if (g.adjacent(v, w) && color[w] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            rec(v + 1);
        }
        color[v] = -1;
    };
    rec(0);
}

}  // namespace

std::vector<Coloring> enumerate_proper_colorings(const SimpleGraph& g, int k) {
    check_enumeration_guard(g.n(), k);
    std::vector<Coloring> out;
    for_each_proper(g, k, [&](const std::vector<int>& c) { out.push_back({k, c}); });
    return out;
}

int max_color_multiplicity(const SimpleGraph& g, int k) {
    check_enumeration_guard(g.n(), k);
    int best = 0;
    for_each_proper(g, k, [&](const std::vector<int>& c) {
        std::vector<int> count(k, 0);
        for (int x : c) best = std::max(best, ++count[x]);
    });
    return best;
}

std::string export_cnf(const SimpleGraph& g, int k) {
    if (k < 1) fail(ErrorCode::PreconditionViolated, "k must be at least 1");
    const int n = g.n();
    auto var = [k](int v, int c) { return v * k + c + 1; };
    std::ostringstream body;
    long long clauses = 0;
    for (int v = 0; v < n; ++v) {
        for (int c = 0; c < k; ++c) body << var(v, c) << ' ';
        body << "0\n";
        ++clauses;
        for (int c = 0; c < k; ++c)
            for (int c2 = c + 1; c2 < k; ++c2) {
                body << -var(v, c) << ' ' << -var(v, c2) << " 0\n";
                ++clauses;
            }
    }
    for (const auto& [u, v] : g.edges())
        for (int c = 0; c < k; ++c) {
            body << -var(u, c) << ' ' << -var(v, c) << " 0\n";
            ++clauses;
        }
    std::ostringstream out;
    out << "c vertex coloring, n=" << n << " k=" << k << ", variable v*k+c+1\n";
    out << "p cnf " << n * k << ' ' << clauses << '\n' << body.str();
    return out.str();
}

Cnf parse_dimacs(const std::string& text) {
    Cnf cnf;
    std::istringstream in(text);
    std::string line;
    std::vector<int> clause;
    bool header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, fmt;
            long long nclauses = 0;
            ls >> p >> fmt >> cnf.variables >> nclauses;
            if (fmt != "cnf") fail(ErrorCode::InvalidInput, "not a cnf header");
            header = true;
            continue;
        }
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                cnf.clauses.push_back(clause);
                clause.clear();
            } else {
                clause.push_back(lit);
            }
        }
    }
    if (!header) fail(ErrorCode::InvalidInput, "missing cnf header");
    if (!clause.empty()) cnf.clauses.push_back(clause);
    return cnf;
}

std::optional<std::vector<bool>> dpll_solve(const Cnf& cnf) {
    // value: 0 unassigned, 1 true, -1 false
    std::vector<int> value(cnf.variables + 1, 0);
    auto lit_value = [&](int lit) {
        int v = value[std::abs(lit)];
        return lit > 0 ? v : -v;
    };
    std::function<bool()> rec = [&]() -> bool {
        std::vector<int> trail;
        auto undo = [&]() {
            for (int v : trail) value[v] = 0;
        };
        for (bool changed = true; changed;) {
            changed = false;
            for (const auto& cl : cnf.clauses) {
                int open = 0, last = 0;
                bool sat = false;
                for (int lit : cl) {
                    int lv = lit_value(lit);
                    if (lv > 0) {
                        sat = true;
                        break;
                    }
                    if (lv == 0) {
                        ++open;
                        last = lit;
                    }
                }
                if (sat) continue;
                if (open == 0) {
                    undo();
                    return false;
                }
                if (open == 1) {
                    value[std::abs(last)] = last > 0 ? 1 : -1;
                    trail.push_back(std::abs(last));
                    changed = true;
                }
            }
        }
        int branch = 0;
        for (int v = 1; v <= cnf.variables; ++v)
            if (value[v] == 0) {
                branch = v;
                break;
            }
        if (branch == 0) return true;
        for (int choice : {1, -1}) {
            value[branch] = choice;
            if (rec()) return true;
            value[branch] = 0;
        }
        undo();
        return false;
    };
    if (!rec()) return std::nullopt;
    std::vector<bool> out(cnf.variables + 1, false);
    for (int v = 1; v <= cnf.variables; ++v) out[v] = value[v] > 0;
    return out;
}

}  // namespace planechroma
