#include "planechroma/embeddings.hpp"
#include "planechroma/errors.hpp"

#include <algorithm>
#include <functional>

namespace planechroma {

namespace {

struct Coord {
    const char* x;
    const char* y;
};

// Graph 16 vertices A..P.
const Coord kGraph16[16] = {
    {"-1/2", "0"},
    {"1/2", "0"},
    {"0", "sqrt(11/4)"},
    {"0", "-sqrt(11/4)"},
    {"-1/4-sqrt(11/48)", "-sqrt(11/16)-sqrt(1/48)"},
    {"1/4-sqrt(11/48)", "-sqrt(11/16)+sqrt(1/48)"},
    {"-1/4+sqrt(11/48)", "-sqrt(11/16)+sqrt(1/48)"},
    {"1/4+sqrt(11/48)", "-sqrt(11/16)-sqrt(1/48)"},
    {"1/4+sqrt(11/48)", "sqrt(11/16)+sqrt(1/48)"},
    {"-1/4+sqrt(11/48)", "sqrt(11/16)-sqrt(1/48)"},
    {"1/4-sqrt(11/48)", "sqrt(11/16)-sqrt(1/48)"},
    {"-1/4-sqrt(11/48)", "sqrt(11/16)+sqrt(1/48)"},
    {"-sqrt(11/12)", "0"},
    {"sqrt(11/12)", "0"},
    {"0", "-sqrt(1/12)"},
    {"0", "sqrt(1/12)"},
};

const int kSchadeTable[17] = {0, 0, 1, 3, 5, 7, 9, 12, 14, 18, 20, 23, 27, 30, 33, 37, 41};

std::vector<Coord> from_letters(const std::string& letters) {
    std::vector<Coord> out;
    for (char c : letters) out.push_back(kGraph16[c - 'A']);
    return out;
}

const char* kHalfSqrt3 = "sqrt(3)/2";

std::vector<Coord> triangular(int n_variant) {
    std::vector<Coord> base5 = {{"0", "0"}, {"1", "0"}, {"-1", "0"}, {"1/2", kHalfSqrt3}, {"-1/2", kHalfSqrt3}};
    std::vector<Coord> hexagon = {{"0", "0"},          {"1", "0"},        {"1/2", kHalfSqrt3}, {"-1/2", kHalfSqrt3},
                                  {"-1", "0"},         {"-1/2", "-sqrt(3)/2"}, {"1/2", "-sqrt(3)/2"}};
    switch (n_variant) {
        case 10: return {{"0", "0"}};
        case 20: return {{"0", "0"}, {"1", "0"}};
        case 30: return {{"0", "0"}, {"1", "0"}, {"1/2", kHalfSqrt3}};
        case 40: return {{"0", "0"}, {"-1", "0"}, {"1/2", kHalfSqrt3}, {"-1/2", kHalfSqrt3}};
        case 50: return base5;
        case 61: base5.push_back({"3/2", kHalfSqrt3}); return base5;
        case 62: base5.push_back({"1/2", "-sqrt(3)/2"}); return base5;
        case 63: base5.push_back({"0", "sqrt(3)"}); return base5;
        case 70: return hexagon;
        case 81: hexagon.push_back({"0", "sqrt(3)"}); return hexagon;
        default: break;
    }
    fail(ErrorCode::UnknownName, "no triangular-grid variant");
}

Embedding evaluate(const std::vector<Coord>& coords, std::vector<std::string>* exprs) {
    Embedding emb;
    for (const auto& c : coords) {
        emb.points.push_back({eval_expr(c.x), eval_expr(c.y)});
        if (exprs) exprs->push_back(std::string(c.x) + "|" + c.y);
    }
    return emb;
}

// Tight tolerance used to read edges off exact catalog coordinates.
Tolerance catalog_tolerance() { return Tolerance::standard(); }

CatalogEntry unit_entry(const std::string& name, const std::string& description, const std::vector<Coord>& coords) {
    CatalogEntry e;
    e.name = name;
    e.description = description;
    e.embedding = evaluate(coords, &e.coordinate_exprs);
    e.graph = unit_distance_graph(e.embedding, catalog_tolerance());
    const int n = static_cast<int>(coords.size());
    e.metadata["schade_u_n"] = std::to_string(kSchadeTable[n]);
    if (n >= 15) e.metadata["status"] = "largest known; lower-bound witness only";
    return e;
}

CatalogEntry explicit_entry(const std::string& name, const std::string& description, const std::vector<Coord>& coords,
                            const std::vector<Edge>& edges) {
    CatalogEntry e;
    e.name = name;
    e.description = description;
    e.embedding = evaluate(coords, &e.coordinate_exprs);
    e.graph = SimpleGraph(static_cast<int>(coords.size()), edges);
    return e;
}

using L = EdgeLabel;

CatalogEntry bicolored_entry(const std::string& name, const std::string& description, const std::vector<Coord>& coords,
                             const BicoloredGraph& bg, const std::string& d_expr, const std::string& range) {
    CatalogEntry e;
    e.name = name;
    e.description = description;
    e.embedding = evaluate(coords, &e.coordinate_exprs);
    e.bicolored = bg;
    e.graph = bg.base();
    e.d_expr = d_expr;
    e.d = eval_expr(d_expr);
    e.metadata["range"] = range;
    return e;
}

BicoloredGraph one_d_graph(int which) {
    switch (which) {
        case 1:
            return BicoloredGraph(5, {{{0, 1}, L::UNIT}, {{1, 3}, L::UNIT}, {{3, 0}, L::UNIT}, {{0, 4}, L::UNIT},
                                      {{4, 2}, L::UNIT}, {{2, 0}, L::UNIT}, {{1, 4}, L::D}, {{3, 2}, L::D}});
        case 3:
            return BicoloredGraph(5, {{{0, 1}, L::UNIT}, {{1, 2}, L::UNIT}, {{2, 0}, L::UNIT}, {{0, 3}, L::D},
                                      {{3, 1}, L::D}, {{3, 4}, L::D}, {{4, 0}, L::D}, {{4, 2}, L::D}});
        case 4:
            return BicoloredGraph(5, {{{0, 1}, L::UNIT}, {{1, 2}, L::UNIT}, {{2, 0}, L::UNIT}, {{3, 1}, L::UNIT},
                                      {{4, 2}, L::UNIT}, {{0, 3}, L::D}, {{3, 4}, L::D}, {{4, 0}, L::D}});
        case 5:
            return BicoloredGraph(5, {{{0, 1}, L::UNIT}, {{1, 2}, L::UNIT}, {{2, 4}, L::UNIT}, {{4, 3}, L::UNIT},
                                      {{0, 2}, L::D}, {{3, 2}, L::D}, {{1, 3}, L::D}, {{4, 0}, L::D}});
        case 6:
            return BicoloredGraph(5, {{{0, 1}, L::UNIT}, {{1, 2}, L::UNIT}, {{2, 0}, L::UNIT}, {{0, 3}, L::UNIT},
                                      {{3, 4}, L::UNIT}, {{4, 0}, L::UNIT}, {{2, 3}, L::D}, {{1, 3}, L::D},
                                      {{2, 4}, L::D}});
        case 7:
            return BicoloredGraph(5, {{{0, 1}, L::UNIT}, {{1, 2}, L::UNIT}, {{2, 3}, L::UNIT}, {{3, 4}, L::UNIT},
                                      {{4, 0}, L::UNIT}, {{0, 2}, L::D}, {{0, 3}, L::D}, {{1, 3}, L::D},
                                      {{1, 4}, L::D}, {{2, 4}, L::D}});
        default: break;
    }
    fail(ErrorCode::UnknownName, "no such (1,d) example");
}

std::vector<Coord> scaled(const std::vector<Coord>& coords, const char* factor, std::vector<std::string>& storage) {
    storage.clear();
    storage.reserve(coords.size() * 2);
    for (const auto& c : coords) {
        storage.push_back(std::string("(") + c.x + ")*(" + factor + ")");
        storage.push_back(std::string("(") + c.y + ")*(" + factor + ")");
    }
    std::vector<Coord> out;
    for (size_t i = 0; i < coords.size(); ++i) out.push_back({storage[2 * i].c_str(), storage[2 * i + 1].c_str()});
    return out;
}

const std::vector<Coord> kOneD1 = {{"0", "0"}, {"1", "0"}, {"-sqrt(3)/2", "1/2"}, {"1/2", kHalfSqrt3}, {"0", "1"}};
const std::vector<Coord> kOneD3 = {
    {"0", "0"}, {"1", "0"}, {"1/2", kHalfSqrt3}, {"1/2", "sqrt(3)/2-1/2"},
    // rotation of (1/2, sqrt(3)/2 - 1/2) by 60 degrees about the origin
    {"1/4-sqrt(3)/2*(sqrt(3)/2-1/2)", "sqrt(3)/4+1/2*(sqrt(3)/2-1/2)"}};
const std::vector<Coord> kOneD4 = {
    {"0", "0"}, {"1", "0"}, {"1/2", kHalfSqrt3}, {"1+sqrt(2)/2", "sqrt(2)/2"},
    // rotation of (1+sqrt(2)/2, sqrt(2)/2) by 60 degrees about the origin
    {"1/2*(1+sqrt(2)/2)-sqrt(3)/2*sqrt(2)/2", "sqrt(3)/2*(1+sqrt(2)/2)+1/2*sqrt(2)/2"}};
const std::vector<Coord> kOneD5 = {
    // d = sqrt(2): gamma = acos(1/(2 sqrt 2)), omega = gamma + 45 degrees
    {"sqrt(2)*(sqrt(2)/2)", "sqrt(2)*(sqrt(2)/2)"},
    {"1", "0"},
    {"0", "0"},
    {"sqrt(2)*(1/(2*sqrt(2)))", "sqrt(2)*sqrt(7/8)"},
    {"sqrt(2)/2*1/(2*sqrt(2))-sqrt(2)/2*sqrt(7/8)", "sqrt(2)/2*sqrt(7/8)+sqrt(2)/2*1/(2*sqrt(2))"}};
const std::vector<Coord> kOneD6 = {
    {"0", "0"}, {"-1/2", "-sqrt(3)/2"}, {"1/2", "-sqrt(3)/2"}, {"0", "1"}, {"-sqrt(3)/2", "1/2"}};
const std::vector<Coord> kPentagon = {{"0", "0"},
                                      {"1", "0"},
                                      {"1+(sqrt(5)-1)/4", "sqrt(10+2*sqrt(5))/4"},
                                      {"1/2", "sqrt(10+2*sqrt(5))/4+sqrt(10-2*sqrt(5))/4"},
                                      {"(1-sqrt(5))/4", "sqrt(10+2*sqrt(5))/4"}};

const std::vector<Coord> kMoser = {
    {"0", "0"},
    {"sqrt(3)/2", "1/2"},
    {"sqrt(3)/2", "-1/2"},
    {"sqrt(3)", "0"},
    {"5*sqrt(3)/12-sqrt(11)/12", "sqrt(33)/12+5/12"},
    {"5*sqrt(3)/12+sqrt(11)/12", "sqrt(33)/12-5/12"},
    {"5*sqrt(3)/6", "sqrt(33)/6"},
};
const std::vector<Edge> kMoserEdges = {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 4},
                                       {0, 5}, {4, 5}, {4, 6}, {5, 6}, {3, 6}};

const std::vector<Coord> kHexagonWheel = {{"0", "0"},  {"1/2", kHalfSqrt3}, {"-1/2", kHalfSqrt3}, {"-1", "0"},
                                          {"-1/2", "-sqrt(3)/2"}, {"1/2", "-sqrt(3)/2"}, {"1", "0"}};
// Hexagon sides plus five of the six spokes; the missing spoke is 0-6.
const std::vector<Edge> kHexagonWheelEdges = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1},
                                              {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}};

struct Builder {
    std::string name;
    std::function<CatalogEntry()> build;
};

std::vector<Builder> registry() {
    std::vector<Builder> r;
    auto tri = [&](const std::string& name, int variant, const std::string& what) {
        r.push_back({name, [=] { return unit_entry(name, what, triangular(variant)); }});
    };
    auto sub16 = [&](const std::string& name, const std::string& letters) {
        r.push_back({name, [=] {
                         return unit_entry(name, "induced subgraph of Graph 16 on " + letters, from_letters(letters));
                     }});
    };
    tri("schade-1", 10, "single point");
    tri("schade-2", 20, "unit segment");
    tri("schade-3", 30, "unit triangle");
    tri("schade-4", 40, "rhombus of two unit triangles");
    tri("schade-5", 50, "three unit triangles on a line");
    tri("schade-6", 61, "triangular grid, 6 points");
    tri("schade-6.2", 62, "triangular grid, 6 points");
    tri("schade-6.3", 63, "triangular grid, 6 points");
    sub16("schade-6.4", "CLJKMD");
    tri("schade-7", 70, "hexagon with center");
    tri("schade-8", 81, "hexagon with center and apex");
    sub16("schade-8.2", "CLJKMAOE");
    sub16("schade-8.3", "MONFGEHD");
    sub16("schade-9", "CLIKJPMNO");
    sub16("schade-10", "CLIKJPMNOB");
    sub16("schade-11", "CLIKJPMNOBF");
    sub16("schade-11.2", "CLIKJPMNOBA");
    sub16("schade-12", "CLIKJPMNOBFH");
    sub16("schade-13", "CLIKJPMNOBFHA");
    sub16("schade-14", "LIKJPMNOBFHAGE");
    sub16("schade-14.2", "CLIKJPMNOBFHAG");
    sub16("schade-15", "ABCEFGHIJKLMNOP");
    r.push_back({"schade-16", [] {
                     return unit_entry("schade-16", "Graph 16 from its coordinate list", from_letters("ABCDEFGHIJKLMNOP"));
                 }});
    r.push_back({"moser-spindle", [] {
                     auto e = explicit_entry("moser-spindle", "two unit rhombi sharing a vertex, tips at distance 1",
                                             kMoser, kMoserEdges);
                     e.metadata["chromatic_number"] = "4";
                     e.metadata["max_color_multiplicity_k4"] = "2";
                     e.metadata["spatial_consequence"] = "p_d <= 2/7 (recorded only; premise is three-dimensional)";
                     return e;
                 }});
    r.push_back({"hexagon-not-faithful", [] {
                     return explicit_entry("hexagon-not-faithful",
                                           "hexagon with five spokes; the sixth vertex is forced to distance 1",
                                           kHexagonWheel, kHexagonWheelEdges);
                 }});
    r.push_back({"one-d-1", [] {
                     return bicolored_entry("one-d-1", "two unit triangles sharing a vertex", kOneD1, one_d_graph(1),
                                            "sqrt(2)", "(0,2] minus {1}");
                 }});
    r.push_back({"one-d-2", [] {
                     std::vector<std::string> st;
                     return bicolored_entry("one-d-2", "inverse of one-d-1", scaled(kOneD1, "1/sqrt(2)", st),
                                            inverse(one_d_graph(1)), "1/sqrt(2)", "[1/2,inf) minus {1}");
                 }});
    r.push_back({"one-d-3", [] {
                     return bicolored_entry("one-d-3", "unit triangle with a d-triangle", kOneD3, one_d_graph(3),
                                            "sqrt(5/4-sqrt(3)/2)",
                                            "[1/2,inf) minus {1}");
                 }});
    r.push_back({"one-d-4", [] {
                     return bicolored_entry("one-d-4", "d-triangle hanging off a unit triangle", kOneD4, one_d_graph(4),
                                            "sqrt(2+sqrt(2))", "(0,2] minus {1}");
                 }});
    r.push_back({"one-d-5", [] {
                     return bicolored_entry("one-d-5", "unit path closed by four d-edges", kOneD5,
                                            one_d_graph(5), "sqrt(2)", "[1/2,2] minus {1}");
                 }});
    r.push_back({"one-d-6", [] {
                     return bicolored_entry("one-d-6", "two unit triangles at a fixed angle", kOneD6, one_d_graph(6),
                                            "(sqrt(6)+sqrt(2))/2", "single value");
                 }});
    r.push_back({"one-d-7", [] {
                     return bicolored_entry("one-d-7", "unit pentagon with its pentagram", kPentagon, one_d_graph(7),
                                            "(1+sqrt(5))/2", "single value");
                 }});
    r.push_back({"one-d-8", [] {
                     std::vector<std::string> st;
                     return bicolored_entry("one-d-8", "inverse of one-d-7", scaled(kPentagon, "2/(1+sqrt(5))", st),
                                            inverse(one_d_graph(7)), "(sqrt(5)-1)/2", "single value");
                 }});
    return r;
}

}  // namespace

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const auto& b : registry()) names.push_back(b.name);
    return names;
}

CatalogEntry catalog(const std::string& name) {
    for (const auto& b : registry())
        if (b.name == name) return b.build();
    fail(ErrorCode::UnknownName, "unknown catalog entry: " + name);
}

}  // namespace planechroma
