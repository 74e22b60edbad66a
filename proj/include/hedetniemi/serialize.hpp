#pragma once

#include <json.hpp>

#include "hedetniemi/counterexample.hpp"
#include "hedetniemi/omega.hpp"
#include "hedetniemi/solver.hpp"
#include "hedetniemi/widecolor.hpp"

namespace hedetniemi {

using Json = nlohmann::json;

// Field layouts follow the struct members. Parsing throws ParseError on
// missing or mistyped fields.
void to_json(Json& j, const Edge& e);
void from_json(const Json& j, Edge& e);
void to_json(Json& j, const Coloring& c);
void from_json(const Json& j, Coloring& c);
void to_json(Json& j, const Homomorphism& h);
void from_json(const Json& j, Homomorphism& h);
void to_json(Json& j, const WideColoring& w);  // pairs as [a, b]
void from_json(const Json& j, WideColoring& w);
void to_json(Json& j, const SearchBudget& b);
void from_json(const Json& j, SearchBudget& b);
void to_json(Json& j, const SearchStats& s);
void to_json(Json& j, const CounterexampleParams& p);
void from_json(const Json& j, CounterexampleParams& p);
void to_json(Json& j, const EdgeWitness& w);
void from_json(const Json& j, EdgeWitness& w);

Json verdict_json(Verdict v);
Verdict parse_verdict(std::string_view name);

Json coloring_result_json(const ColoringResult& r);
Json homomorphism_result_json(const HomomorphismResult& r);
Json chromatic_result_json(const ChromaticResult& r);
/// Vertex labels of the tuple model, index-aligned with the graph.
Json omega_labels_json(const OmegaGraph& g);
/// Checks, counts and verdicts; no function tables.
Json report_json(const Report& r);

/// Wraps nlohmann parsing so malformed text surfaces as ParseError.
Json parse_json(std::string_view text);

}  // namespace hedetniemi
