// planechroma: command-line front end for the library.
//
// Exit codes: 0 success, 1 usage, 2 invalid input, 3 search exhausted / not found,
// 4 internal invariant breach. Failures print one line "error <Name>: message" on stderr.

#include "planechroma/bounds.hpp"
#include "planechroma/coloring.hpp"
#include "planechroma/embeddings.hpp"
#include "planechroma/errors.hpp"
#include "planechroma/io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

using namespace planechroma;

namespace {

constexpr int kUsage = 1;
constexpr int kInvalid = 2;
constexpr int kExhausted = 3;
constexpr int kInternal = 4;

struct ExitError {
    int code;
    std::string name;
    std::string message;
};

[[noreturn]] void exit_with(int code, std::string name, std::string message) {
    throw ExitError{code, std::move(name), std::move(message)};
}

std::string one_line(std::string s) {
    for (char& c : s)
        if (c == '\n' || c == '\r') c = ' ';
    return s;
}

Json load_json(const std::string& path) { return parse_json_text(read_text_file(path)); }

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

Scalar scalar_arg(const std::string& text) {
    try {
        return eval_expr(text);
    } catch (const Error&) {
        fail(ErrorCode::InvalidInput, "cannot evaluate \"" + text + "\"");
    }
}

// Options shared across subcommands.
struct Args {
    std::string graph, embedding, config, out, csv, svg, d, tol, side = "0.45", lo, hi, name;
    int attempts = 64, steps = 25, k = 3, max_k = 16, workers = 1, n = 0;
    long long samples = 100000;
    std::uint64_t seed = 0;
    bool brute = false, stats = false;
};

RealizeConfig realize_config(const Args& a) {
    RealizeConfig cfg;
    cfg.attempts = a.attempts;
    cfg.seed = a.seed;
    cfg.workers = a.workers;
    if (cfg.attempts < 1) fail(ErrorCode::InvalidInput, "--attempts must be at least 1");
    return cfg;
}

std::optional<Scalar> d_value(const Args& a, const Json& g) {
    if (!a.d.empty()) return scalar_arg(a.d);
    return graph_json_d(g);
}

int cmd_verify(const Args& a) {
    const Json g = load_json(a.graph);
    const Embedding emb = embedding_from_json(load_json(a.embedding));
    const Tolerance tol = a.tol.empty() ? Tolerance::standard() : Tolerance::of(scalar_arg(a.tol));
    UdrReport r;
    if (graph_json_is_bicolored(g)) {
        auto d = d_value(a, g);
        if (!d) fail(ErrorCode::InvalidInput, "bicolored graph needs --d or a \"d\" field");
        r = verify_bicolored(bicolored_from_json(g), emb, *d, tol);
    } else {
        r = verify(graph_from_json(g), emb, tol);
    }
    print_json(report_to_json(r));
    if (!r.is_udr) exit_with(kInvalid, "NotUdr", "embedding does not realize the graph");
    return 0;
}

int cmd_catalog_list() {
    for (const auto& name : catalog_names()) {
        const auto e = catalog(name);
        std::cout << name << '\t' << e.graph.n() << '\t' << e.graph.edges().size() << '\t' << e.description << '\n';
    }
    return 0;
}

int cmd_catalog_show(const Args& a) {
    const auto e = catalog(a.name);
    Json graph = e.bicolored ? bicolored_to_json(*e.bicolored, e.d, e.d_expr) : graph_to_json(e.graph);
    Json emb = embedding_to_json(e.embedding, e.coordinate_exprs);
    Json info;
    info["name"] = e.name;
    info["description"] = e.description;
    info["n"] = e.graph.n();
    info["edges"] = e.graph.edges().size();
    if (e.d) info["d"] = e.d_expr.empty() ? to_decimal(*e.d) : e.d_expr;
    info["metadata"] = e.metadata;
    if (a.out.empty()) {
        info["graph"] = graph;
        info["embedding"] = emb;
    } else {
        std::filesystem::create_directories(a.out);
        const auto base = std::filesystem::path(a.out) / e.name;
        write_text_file(base.string() + ".graph.json", graph.dump(2) + "\n");
        write_text_file(base.string() + ".embedding.json", emb.dump(2) + "\n");
        info["files"] = {base.string() + ".graph.json", base.string() + ".embedding.json"};
    }
    print_json(info);
    return 0;
}

int cmd_realize(const Args& a) {
    const Json g = load_json(a.graph);
    const RealizeConfig cfg = realize_config(a);
    std::optional<Embedding> emb;
    if (graph_json_is_bicolored(g)) {
        auto d = d_value(a, g);
        if (!d) fail(ErrorCode::InvalidInput, "bicolored graph needs --d or a \"d\" field");
        emb = realize_bicolored(bicolored_from_json(g), *d, cfg);
    } else {
        emb = realize(graph_from_json(g), cfg);
    }
    if (!emb) exit_with(kExhausted, "NotFound", "no realization found within the attempt budget");
    print_json(embedding_to_json(*emb));
    return 0;
}

int cmd_range_scan(const Args& a) {
    const Json g = load_json(a.graph);
    const auto rows = range_scan(bicolored_from_json(g), scalar_arg(a.lo), scalar_arg(a.hi), a.steps, realize_config(a));
    std::cout << "d,feasible\n";
    for (const auto& r : rows) std::cout << to_decimal(r.d) << ',' << (r.feasible ? "true" : "false") << '\n';
    return 0;
}

int cmd_chromatic(const Args& a) {
    const SimpleGraph g = graph_from_json(load_json(a.graph));
    if (g.n() == 0) {
        std::cout << 0 << '\n';
        return 0;
    }
    for (int k = 1; k <= a.max_k; ++k)
        if (k_colorable(g, k)) {
            std::cout << k << '\n';
            return 0;
        }
    exit_with(kExhausted, "SearchExhausted", "not colorable with --max-k colors");
}

int cmd_colorings(const Args& a) {
    const SimpleGraph g = graph_from_json(load_json(a.graph));
    const auto all = enumerate_proper_colorings(g, a.k);
    Json j;
    j["k"] = a.k;
    j["count"] = all.size();
    j["max_color_multiplicity"] = max_color_multiplicity(g, a.k);
    if (!a.stats) {
        j["colorings"] = Json::array();
        for (const auto& c : all) j["colorings"].push_back(coloring_to_json(c));
    }
    print_json(j);
    return 0;
}

int cmd_cnf(const Args& a) {
    std::cout << export_cnf(graph_from_json(load_json(a.graph)), a.k);
    return 0;
}

int cmd_hex_verify(const Args& a) {
    HexConfig cfg{scalar_arg(a.side)};
    check_hex_side(cfg.s);
    if (a.samples < 1) fail(ErrorCode::InvalidInput, "--samples must be at least 1");
    const HexReport r = hex_verify(cfg, a.samples, a.seed);
    print_json(hex_report_to_json(r, cfg, a.samples, a.seed));
    if (r.violations != 0) exit_with(kInternal, "ColoringViolation", "same-colored pair at distance 1");
    return 0;
}

int cmd_bounds_table(const Args& a) {
    const BoundTable t = summary_table(upper_bound_table());
    const std::string csv = to_csv(t);
    if (!a.csv.empty()) write_text_file(a.csv, csv);
    if (!a.svg.empty()) write_text_file(a.svg, to_svg(t));
    std::cout << csv;
    for (const auto& [key, value] : t.metadata) std::cout << "# " << key << ": " << value << '\n';
    return 0;
}

int cmd_bounds_derive(const Args& a) {
    const PointConfig cfg = point_config_from_json(load_json(a.config));
    print_json(expectation_to_json(lower_bound_expectation(cfg, upper_bound_table())));
    return 0;
}

int cmd_extremal_check() {
    Json j;
    j["crossing_constant"] = to_decimal(crossing_constant());
    j["u_upper_coefficient"] = to_decimal(u_upper_coefficient());
    const auto table = schade_table();
    j["u_upper"] = Json::array();
    for (const auto& [n, u] : table)
        j["u_upper"].push_back({{"n", n}, {"u_n", u}, {"bound", to_decimal(u_upper(n))}});
    Json findings = Json::array();
    bool violated = false;
    for (const auto& f : density_recurrence_check(table)) {
        findings.push_back({{"n", f.n}, {"u_prev", f.u_prev}, {"u_n", f.u_n}, {"violation", f.violation}, {"tight", f.tight}});
        violated = violated || f.violation;
    }
    j["density_recurrence"] = findings;
    print_json(j);
    if (violated) exit_with(kInternal, "DensityViolation", "table violates u(n) <= n/(n-2) u(n-1)");
    return 0;
}

int cmd_f(const Args& a) {
    const long long formula = f_min_mono_pairs(a.n);
    if (!a.brute) {
        std::cout << formula << '\n';
        return 0;
    }
    const long long brute = f_brute(a.n);
    std::cout << "formula=" << formula << " brute=" << brute << (formula == brute ? " agree" : " differ") << '\n';
    if (formula != brute) exit_with(kInternal, "Disagreement", "formula and brute force differ");
    return 0;
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::SearchExhausted: return kExhausted;
        default: return kInvalid;
    }
}

}  // namespace

int main(int argc, char** argv) {
    init_precision_from_env();
    CLI::App app{"planechroma: unit distance graphs, plane colorings and monochromatic-distance bounds"};
    app.require_subcommand(1);
    Args a;

    auto* verify_cmd = app.add_subcommand("verify", "check an embedding against a graph");
    verify_cmd->add_option("--graph", a.graph, "graph JSON")->required();
    verify_cmd->add_option("--embedding", a.embedding, "embedding JSON")->required();
    verify_cmd->add_option("--d", a.d, "value of d for bicolored graphs");
    verify_cmd->add_option("--tol", a.tol, "absolute tolerance on squared distances");

    auto* catalog_cmd = app.add_subcommand("catalog", "list or export catalog entries");
    catalog_cmd->require_subcommand(1);
    auto* list_cmd = catalog_cmd->add_subcommand("list", "list entry names");
    auto* show_cmd = catalog_cmd->add_subcommand("show", "print or export one entry");
    show_cmd->add_option("name", a.name, "entry name")->required();
    show_cmd->add_option("--out", a.out, "directory for graph and embedding files");

    auto* realize_cmd = app.add_subcommand("realize", "search for a unit distance representation");
    realize_cmd->add_option("--graph", a.graph, "graph JSON")->required();
    realize_cmd->add_option("--attempts", a.attempts, "random restarts");
    realize_cmd->add_option("--seed", a.seed, "seed");
    realize_cmd->add_option("--d", a.d, "value of d for bicolored graphs");
    realize_cmd->add_option("--workers", a.workers, "worker threads");

    auto* scan_cmd = app.add_subcommand("range-scan", "grid scan of realizable d");
    scan_cmd->add_option("--graph", a.graph, "bicolored graph JSON")->required();
    scan_cmd->add_option("--lo", a.lo, "lowest d")->required();
    scan_cmd->add_option("--hi", a.hi, "highest d")->required();
    scan_cmd->add_option("--steps", a.steps, "grid points");
    scan_cmd->add_option("--seed", a.seed, "seed");
    scan_cmd->add_option("--attempts", a.attempts, "restarts per grid point");
    scan_cmd->add_option("--workers", a.workers, "worker threads");

    auto* chromatic_cmd = app.add_subcommand("chromatic", "chromatic number");
    chromatic_cmd->add_option("--graph", a.graph, "graph JSON")->required();
    chromatic_cmd->add_option("--max-k", a.max_k, "largest k tried");

    auto* colorings_cmd = app.add_subcommand("colorings", "enumerate proper colorings");
    colorings_cmd->add_option("--graph", a.graph, "graph JSON")->required();
    colorings_cmd->add_option("--k", a.k, "number of colors")->required();
    colorings_cmd->add_flag("--stats", a.stats, "print statistics only");

    auto* cnf_cmd = app.add_subcommand("cnf", "DIMACS encoding of k-colorability");
    cnf_cmd->add_option("--graph", a.graph, "graph JSON")->required();
    cnf_cmd->add_option("--k", a.k, "number of colors")->required();

    auto* hex_cmd = app.add_subcommand("hex-verify", "sample the hexagonal 7-coloring");
    hex_cmd->add_option("--side", a.side, "hexagon side");
    hex_cmd->add_option("--samples", a.samples, "sample count");
    hex_cmd->add_option("--seed", a.seed, "seed");

    auto* bounds_cmd = app.add_subcommand("bounds", "monochromatic-distance bounds");
    bounds_cmd->require_subcommand(1);
    auto* table_cmd = bounds_cmd->add_subcommand("table", "assemble the piecewise summary table");
    table_cmd->add_option("--csv", a.csv, "CSV output file");
    table_cmd->add_option("--svg", a.svg, "SVG output file");
    auto* derive_cmd = bounds_cmd->add_subcommand("derive", "lower bound from one point configuration");
    derive_cmd->add_option("--config", a.config, "configuration JSON")->required();

    auto* extremal_cmd = app.add_subcommand("extremal", "extremal numerics");
    extremal_cmd->require_subcommand(1);
    auto* check_cmd = extremal_cmd->add_subcommand("check", "crossing constant, u(n) coefficient, density recurrence");

    auto* f_cmd = app.add_subcommand("f", "minimal monochromatic pairs among n points in 4 colors");
    f_cmd->add_option("--n", a.n, "point count")->required();
    f_cmd->add_flag("--brute", a.brute, "compare with brute force");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error Usage: " << one_line(e.what()) << '\n';
        return kUsage;
    }

    try {
        if (*verify_cmd) return cmd_verify(a);
        if (*list_cmd) return cmd_catalog_list();
        if (*show_cmd) return cmd_catalog_show(a);
        if (*realize_cmd) return cmd_realize(a);
        if (*scan_cmd) return cmd_range_scan(a);
        if (*chromatic_cmd) return cmd_chromatic(a);
        if (*colorings_cmd) return cmd_colorings(a);
        if (*cnf_cmd) return cmd_cnf(a);
        if (*hex_cmd) return cmd_hex_verify(a);
        if (*table_cmd) return cmd_bounds_table(a);
        if (*derive_cmd) return cmd_bounds_derive(a);
        if (*check_cmd) return cmd_extremal_check();
        if (*f_cmd) return cmd_f(a);
    } catch (const ExitError& e) {
        std::cout.flush();
        std::cerr << "error " << e.name << ": " << one_line(e.message) << '\n';
        return e.code;
    } catch (const Error& e) {
        std::cout.flush();
        std::cerr << "error " << error_name(e.code()) << ": " << one_line(e.what()) << '\n';
        return exit_code_for(e.code());
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error InvalidInput: " << one_line(e.what()) << '\n';
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error Internal: " << one_line(e.what()) << '\n';
        return kInternal;
    }
    std::cerr << "error Usage: no subcommand selected\n";
    return kUsage;
}
