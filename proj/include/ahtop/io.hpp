#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "ahtop/graph.hpp"

namespace ahtop {

inline constexpr const char* kVersion = "0.1.0";

/// Malformed or inconsistent input file. The message carries file and line/column when known.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;

/// Parses text, reporting syntax errors as "<source>:<line>:<column>: <reason>".
Json parse_json(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);

/**
 * {"vertices": n, "edges": [[i, j], ...], "base": k?, "labels": [...]?}.
 * A string such as "C5", "I3", "K4" or "Q2" names a standard graph.
 * Base defaults to 0.
 */
PointedGraph graph_from_json(const Json& j);
/// Canonical form: edges sorted, base always present, labels only when set.
Json graph_to_json(const PointedGraph& g);

/// {"domain": graph, "codomain": graph, "assignment": [...], "pointed": bool}.
GraphMap map_from_json(const Json& j);
Json map_to_json(const GraphMap& f);

/// Standard graph from a name such as "C5"; throws InputError for unknown names.
PointedGraph standard_graph(const std::string& name);

std::string to_dot(const PointedGraph& g, const std::string& name = "G");

/// Serialized text of a JSON value: two-space indent, keys sorted, trailing newline.
std::string dump(const Json& j);

}  // namespace ahtop
