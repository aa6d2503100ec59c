#pragma once

#include "planechroma/bounds.hpp"
#include "planechroma/coloring.hpp"
#include "planechroma/embeddings.hpp"

#include <json.hpp>

#include <string>

namespace planechroma {

using Json = nlohmann::ordered_json;

// Graph files: {"n": N, "edges": [[u, v], ...]}, optionally "labels": {"u-v": "UNIT" | "D"} and "d".
Json graph_to_json(const SimpleGraph& g);
Json bicolored_to_json(const BicoloredGraph& bg, const std::optional<Scalar>& d, const std::string& d_expr);
SimpleGraph graph_from_json(const Json& j);
bool graph_json_is_bicolored(const Json& j);
BicoloredGraph bicolored_from_json(const Json& j);
std::optional<Scalar> graph_json_d(const Json& j);

// {"points": [[x, y], ...]}: decimal strings on output; numbers and expressions such as "sqrt(3)/2"
// are accepted on input. Symbolic coordinates, when known, go to "exprs".
Json embedding_to_json(const Embedding& emb, const std::vector<std::string>& exprs = {});
Embedding embedding_from_json(const Json& j);

Json coloring_to_json(const Coloring& c);
Json report_to_json(const UdrReport& r);
Json hex_report_to_json(const HexReport& r, const HexConfig& cfg, long long samples, std::uint64_t seed);
Json piece_to_json(const BoundPiece& p);
Json expectation_to_json(const ExpectationOutcome& o);

// {"n", "d_pair_count", "unit_pair_count", "d": expr | "d_range": {...}, "other_distances": [...], "provenance"}
PointConfig point_config_from_json(const Json& j);

Scalar scalar_from_json(const Json& j);
Json parse_json_text(const std::string& text);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace planechroma
