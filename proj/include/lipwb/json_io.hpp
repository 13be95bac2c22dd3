#pragma once

#include "lipwb/embeddings.hpp"
#include "lipwb/freespace.hpp"
#include "lipwb/plfun.hpp"
#include "lipwb/rtree.hpp"

#include "json.hpp"

namespace lipwb {

using Json = nlohmann::ordered_json;

// Rationals travel as canonical strings ("7/2", "-3"); anything else is a ParseError.
Json q_to_json(const Q& q);
Q q_from_json(const Json& j);
Json qvec_to_json(const QVec& v);
QVec qvec_from_json(const Json& j);

// { "name", "base": 0, "points": [labels], "dist": [[...]] }; a nonzero base is moved to row 0.
Json space_to_json(const FiniteMetricSpace& sp);
SpacePtr space_from_json(const Json& j);

// { "space": name or inline space, "values": [...] }. A named space must match `sp`.
Json function_to_json(const LipschitzFunction& f, bool inline_space = false);
LipschitzFunction function_from_json(const Json& j, SpacePtr sp = nullptr);
Json attainment_to_json(const AttainmentReport& r);

// { "space": name, "weights": { "index": value } }
Json free_element_to_json(const FreeElement& mu);
FreeElement free_element_from_json(const Json& j, SpacePtr sp);
Json free_norm_to_json(const FreeNormResult& r);

// { "breakpoints", "values", "extend": "constant" | "none" | "left" | "right", "base" }
Json pl_to_json(const PiecewiseLinearFunction& f);
PiecewiseLinearFunction pl_from_json(const Json& j);

// { "vertices": n, "edges": [[u, v, length]], "base": 0 }
Json tree_to_json(const WeightedTree& t);
WeightedTree tree_from_json(const Json& j);

Json check_to_json(const CheckResult& r);
Json report_to_json(const VerificationReport& r, std::optional<std::size_t> N = std::nullopt,
                    std::optional<bool> checker = std::nullopt);

// Parses text, mapping library errors to ParseError.
Json parse_json_text(const std::string& text);
std::string read_file(const std::string& path);
// Writes to a temporary sibling and renames it over `path`.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace lipwb
