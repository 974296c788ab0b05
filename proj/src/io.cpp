#include "ahtop/io.hpp"

#include <fstream>
#include <sstream>

namespace ahtop {

namespace {

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

std::size_t index_value(const Json& j, const std::string& what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) throw InputError(what + " must be a nonnegative integer");
    return j.get<std::size_t>();
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        // e.byte is one past the offending character
        auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        std::string reason = e.what();
        if (auto at = reason.find("; "); at != std::string::npos) reason = reason.substr(at + 2);
        throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + reason);
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str(), path);
}

PointedGraph standard_graph(const std::string& name) {
    static const std::string families = "ICKQ";
    if (name.size() < 2 || families.find(name[0]) == std::string::npos)
        throw InputError("unknown standard graph '" + name + "' (expected I<m>, C<n>, K<n> or Q<n>)");
    std::size_t used = 0;
    int size = 0;
    try {
        size = std::stoi(name.substr(1), &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != name.size() - 1) throw InputError("unknown standard graph '" + name + "'");
    const Family family = name[0] == 'I'   ? Family::interval
                          : name[0] == 'C' ? Family::cycle
                          : name[0] == 'K' ? Family::complete
                                           : Family::cube;
    try {
        return make_standard(family, size);
    } catch (const std::domain_error& e) {
        throw InputError(e.what());
    }
}

PointedGraph graph_from_json(const Json& j) {
    if (j.is_string()) return standard_graph(j.get<std::string>());
    if (!j.is_object()) throw InputError("graph must be an object or a standard graph name");
    for (const auto& [key, value] : j.items())
        if (key != "vertices" && key != "edges" && key != "base" && key != "labels")
            throw InputError("unknown graph field '" + key + "'");
    if (!j.contains("vertices")) throw InputError("graph is missing \"vertices\"");
    const std::size_t n = index_value(j["vertices"], "\"vertices\"");
    std::vector<Edge> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw InputError("\"edges\" must be an array of pairs");
        for (const Json& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2) throw InputError("each edge must be a pair [i, j]");
            edges.push_back(make_edge(static_cast<Vertex>(index_value(e[0], "edge endpoint")),
                                      static_cast<Vertex>(index_value(e[1], "edge endpoint"))));
        }
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        if (!j["labels"].is_array()) throw InputError("\"labels\" must be an array of strings");
        for (const Json& l : j["labels"]) {
            if (!l.is_string()) throw InputError("\"labels\" must be an array of strings");
            labels.push_back(l.get<std::string>());
        }
        if (labels.size() != n) throw InputError("\"labels\" must have one entry per vertex");
    }
    const Vertex base = j.contains("base") ? static_cast<Vertex>(index_value(j["base"], "\"base\"")) : 0;
    try {
        return PointedGraph(Graph(n, std::move(edges), std::move(labels)), base);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

Json graph_to_json(const PointedGraph& g) {
    Json j;
    j["vertices"] = g.vertex_count();
    Json edges = Json::array();
    for (const Edge& e : g.graph.edges()) edges.push_back({e.u, e.v});
    j["edges"] = std::move(edges);
    j["base"] = g.base;
    if (!g.graph.labels().empty()) j["labels"] = g.graph.labels();
    return j;
}

GraphMap map_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("map must be an object");
    for (const char* key : {"domain", "codomain", "assignment"})
        if (!j.contains(key)) throw InputError(std::string("map is missing \"") + key + "\"");
    for (const auto& [key, value] : j.items())
        if (key != "domain" && key != "codomain" && key != "assignment" && key != "pointed")
            throw InputError("unknown map field '" + key + "'");
    auto domain = share(graph_from_json(j["domain"]));
    auto codomain = share(graph_from_json(j["codomain"]));
    if (!j["assignment"].is_array()) throw InputError("\"assignment\" must be an array");
    std::vector<Vertex> a;
    for (const Json& v : j["assignment"]) a.push_back(static_cast<Vertex>(index_value(v, "assignment entry")));
    const bool pointed = j.value("pointed", true);
    try {
        return GraphMap(domain, codomain, std::move(a), pointed);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

Json map_to_json(const GraphMap& f) {
    return {{"domain", graph_to_json(*f.domain())},
            {"codomain", graph_to_json(*f.codomain())},
            {"assignment", f.assignment()},
            {"pointed", f.pointed()}};
}

std::string to_dot(const PointedGraph& g, const std::string& name) {
    std::string out = "graph " + name + " {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out += "  " + std::to_string(v);
        std::string label = g.graph.labels().empty() ? "" : g.graph.labels()[v];
        std::string attrs;
        if (!label.empty()) attrs += "label=" + Json(label).dump();
        if (v == g.base) attrs += std::string(attrs.empty() ? "" : ", ") + "shape=doublecircle";
        if (!attrs.empty()) out += " [" + attrs + "]";
        out += ";\n";
    }
    for (const Edge& e : g.graph.edges()) out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
    out += "}\n";
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ahtop
