#include "planechroma/io.hpp"
#include "planechroma/errors.hpp"

#include <fstream>
#include <sstream>

namespace planechroma {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(ErrorCode::InvalidInput, std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) fail(ErrorCode::InvalidInput, std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

Json edge_pair(const Edge& e) { return Json::array({e.first, e.second}); }

std::vector<Edge> edges_from_json(const Json& j) {
    const Json& arr = field(j, "edges");
    if (!arr.is_array()) fail(ErrorCode::InvalidInput, "\"edges\" must be an array");
    std::vector<Edge> out;
    for (const auto& e : arr) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            fail(ErrorCode::InvalidInput, "each edge must be a pair of integers");
        out.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return out;
}

Json interval_to_json(const Interval& iv) {
    Json j;
    j["lo"] = to_decimal(iv.lo);
    if (!iv.lo_expr.empty()) j["lo_expr"] = iv.lo_expr;
    j["hi"] = iv.hi_infinite ? std::string("inf") : to_decimal(iv.hi);
    if (!iv.hi_expr.empty()) j["hi_expr"] = iv.hi_expr;
    j["lo_closed"] = iv.lo_closed;
    j["hi_closed"] = iv.hi_closed;
    return j;
}

Interval interval_from_json(const Json& j) {
    Interval iv;
    iv.lo = scalar_from_json(field(j, "lo"));
    if (j.at("lo").is_string()) iv.lo_expr = j.at("lo").get<std::string>();
    const Json& hi = field(j, "hi");
    if (hi.is_string() && hi.get<std::string>() == "inf") {
        iv.hi_infinite = true;
        iv.hi = iv.lo;
        iv.hi_closed = false;
    } else {
        iv.hi = scalar_from_json(hi);
        if (hi.is_string()) iv.hi_expr = hi.get<std::string>();
    }
    if (j.contains("lo_closed")) iv.lo_closed = j.at("lo_closed").get<bool>();
    if (j.contains("hi_closed") && !iv.hi_infinite) iv.hi_closed = j.at("hi_closed").get<bool>();
    if (!iv.hi_infinite && iv.hi < iv.lo) fail(ErrorCode::InvalidInput, "interval with hi < lo");
    return iv;
}

}  // namespace

Scalar scalar_from_json(const Json& j) {
    if (j.is_number()) return Scalar(j.get<double>());
    if (j.is_string()) {
        try {
            return eval_expr(j.get<std::string>());
        } catch (const Error&) {
            fail(ErrorCode::InvalidInput, "cannot evaluate \"" + j.get<std::string>() + "\"");
        }
    }
    fail(ErrorCode::InvalidInput, "expected a number or an expression string");
}

Json graph_to_json(const SimpleGraph& g) {
    Json j;
    j["n"] = g.n();
    j["edges"] = Json::array();
    for (const auto& e : g.edges()) j["edges"].push_back(edge_pair(e));
    return j;
}

Json bicolored_to_json(const BicoloredGraph& bg, const std::optional<Scalar>& d, const std::string& d_expr) {
    Json j = graph_to_json(bg.base());
    j["labels"] = Json::object();
    const auto& edges = bg.base().edges();
    for (size_t i = 0; i < edges.size(); ++i)
        j["labels"][std::to_string(edges[i].first) + "-" + std::to_string(edges[i].second)] =
            bg.labels()[i] == EdgeLabel::UNIT ? "UNIT" : "D";
    if (d) j["d"] = d_expr.empty() ? to_decimal(*d) : d_expr;
    return j;
}

SimpleGraph graph_from_json(const Json& j) {
    const int n = int_field(j, "n");
    if (n < 0) fail(ErrorCode::InvalidInput, "negative vertex count");
    try {
        return SimpleGraph(n, edges_from_json(j));
    } catch (const Error& e) {
        fail(ErrorCode::InvalidInput, e.what());
    }
}

bool graph_json_is_bicolored(const Json& j) { return j.is_object() && j.contains("labels"); }

BicoloredGraph bicolored_from_json(const Json& j) {
    const int n = int_field(j, "n");
    const auto edges = edges_from_json(j);
    const Json& labels = field(j, "labels");
    if (!labels.is_object()) fail(ErrorCode::InvalidInput, "\"labels\" must map \"u-v\" to \"UNIT\" or \"D\"");
    std::vector<std::pair<Edge, EdgeLabel>> labeled;
    for (const auto& e : edges) {
        const int u = std::min(e.first, e.second), v = std::max(e.first, e.second);
        const std::string key = std::to_string(u) + "-" + std::to_string(v);
        const std::string alt = std::to_string(v) + "-" + std::to_string(u);
        const Json* l = labels.contains(key) ? &labels.at(key) : labels.contains(alt) ? &labels.at(alt) : nullptr;
        if (!l) fail(ErrorCode::InvalidInput, "edge " + key + " has no label");
        const std::string text = l->is_string() ? l->get<std::string>() : "";
        if (text != "UNIT" && text != "D") fail(ErrorCode::InvalidInput, "edge labels are \"UNIT\" or \"D\"");
        labeled.push_back({e, text == "UNIT" ? EdgeLabel::UNIT : EdgeLabel::D});
    }
    if (labels.size() != edges.size()) fail(ErrorCode::InvalidInput, "\"labels\" has entries for non-edges");
    try {
        return BicoloredGraph(n, labeled);
    } catch (const Error& e) {
        fail(ErrorCode::InvalidInput, e.what());
    }
}

std::optional<Scalar> graph_json_d(const Json& j) {
    if (!j.is_object() || !j.contains("d")) return std::nullopt;
    return scalar_from_json(j.at("d"));
}

Json embedding_to_json(const Embedding& emb, const std::vector<std::string>& exprs) {
    Json j;
    j["points"] = Json::array();
    for (const auto& p : emb.points) j["points"].push_back(Json::array({to_decimal(p.x), to_decimal(p.y)}));
    if (!exprs.empty()) {
        j["exprs"] = Json::array();
        for (const auto& e : exprs) {
            const auto bar = e.find('|');
            j["exprs"].push_back(Json::array({e.substr(0, bar), bar == std::string::npos ? "" : e.substr(bar + 1)}));
        }
    }
    return j;
}

Embedding embedding_from_json(const Json& j) {
    const Json& pts = field(j, "points");
    if (!pts.is_array()) fail(ErrorCode::InvalidInput, "\"points\" must be an array");
    Embedding emb;
    for (const auto& p : pts) {
        if (!p.is_array() || p.size() != 2) fail(ErrorCode::InvalidInput, "each point must be an [x, y] pair");
        emb.points.push_back({scalar_from_json(p[0]), scalar_from_json(p[1])});
    }
    return emb;
}

Json coloring_to_json(const Coloring& c) {
    Json j;
    j["k"] = c.k;
    j["colors"] = c.colors;
    return j;
}

Json report_to_json(const UdrReport& r) {
    Json j;
    j["is_udr"] = r.is_udr;
    j["is_faithful"] = r.is_faithful;
    j["edge_violations"] = Json::array();
    for (const auto& v : r.edge_violations)
        j["edge_violations"].push_back({{"edge", edge_pair(v.edge)}, {"actual2", to_decimal(v.actual2)}});
    j["nonedge_unit_pairs"] = Json::array();
    for (const auto& e : r.nonedge_unit_pairs) j["nonedge_unit_pairs"].push_back(edge_pair(e));
    j["coincident_pairs"] = Json::array();
    for (const auto& e : r.coincident_pairs) j["coincident_pairs"].push_back(edge_pair(e));
    return j;
}

Json hex_report_to_json(const HexReport& r, const HexConfig& cfg, long long samples, std::uint64_t seed) {
    Json j;
    j["side"] = to_decimal(cfg.s);
    j["samples"] = samples;
    j["seed"] = seed;
    j["violations"] = r.violations;
    j["same_color_pairs"] = r.same_color_pairs;
    j["min_same_color_dist_observed"] = to_decimal(r.min_same_color_dist_observed);
    j["exact_fallbacks"] = r.exact_fallbacks;
    return j;
}

Json piece_to_json(const BoundPiece& p) {
    Json j;
    j["interval"] = interval_to_json(p.interval);
    j["kind"] = p.kind == BoundKind::UPPER ? "UPPER" : "LOWER";
    j["value"] = rational_str(p.value);
    j["provenance"] = p.provenance;
    j["notes"] = p.notes;
    return j;
}

Json expectation_to_json(const ExpectationOutcome& o) {
    Json j;
    j["positive"] = o.positive;
    j["value"] = rational_str(o.value);
    if (o.piece) j["piece"] = piece_to_json(*o.piece);
    else j["outcome"] = "NotPositive";
    return j;
}

PointConfig point_config_from_json(const Json& j) {
    PointConfig cfg;
    cfg.n = int_field(j, "n");
    cfg.d_pair_count = int_field(j, "d_pair_count");
    cfg.unit_pair_count = j.contains("unit_pair_count") ? int_field(j, "unit_pair_count") : 0;
    if (j.contains("d_range")) {
        cfg.d_range = interval_from_json(j.at("d_range"));
    } else {
        const Json& d = field(j, "d");
        cfg.d_range = Interval::point(scalar_from_json(d));
        if (d.is_string()) cfg.d_range.lo_expr = cfg.d_range.hi_expr = d.get<std::string>();
    }
    if (j.contains("other_distances")) {
        const Json& arr = j.at("other_distances");
        if (!arr.is_array()) fail(ErrorCode::InvalidInput, "\"other_distances\" must be an array");
        for (const auto& od : arr) {
            DistanceDescriptor dd;
            if (od.is_string() || od.is_number()) {
                dd.range = Interval::point(scalar_from_json(od));
                dd.symbol = od.is_string() ? od.get<std::string>() : to_decimal(dd.range.lo);
            } else {
                dd.halving = od.contains("halving") && od.at("halving").get<bool>();
                if (od.contains("value")) dd.range = Interval::point(scalar_from_json(od.at("value")));
                else if (od.contains("range")) dd.range = interval_from_json(od.at("range"));
                else if (!dd.halving) fail(ErrorCode::InvalidInput, "distance needs \"value\" or \"range\"");
                dd.symbol = od.contains("symbol") ? od.at("symbol").get<std::string>() : "x";
            }
            cfg.other_distances.push_back(dd);
        }
    }
    cfg.provenance = j.contains("provenance") ? j.at("provenance").get<std::string>() : "user configuration";
    return cfg;
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::InvalidInput, "cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::InvalidInput, "cannot write " + path);
    out << text;
}

}  // namespace planechroma
