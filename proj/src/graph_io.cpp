#include "wavegraph/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace wavegraph {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
    throw std::invalid_argument(origin + ": " + what);
}

std::size_t line_of_byte(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

double require_number(const json& obj, const char* key, const std::string& where,
                      const std::string& origin) {
    if (!obj.contains(key)) fail(origin, where + ": missing \"" + key + "\"");
    const json& v = obj.at(key);
    if (!v.is_number()) fail(origin, where + ": \"" + key + "\" must be a number");
    return v.get<double>();
}

VertexId require_int(const json& obj, const char* key, const std::string& where,
                     const std::string& origin) {
    if (!obj.contains(key)) fail(origin, where + ": missing \"" + key + "\"");
    const json& v = obj.at(key);
    if (!v.is_number_integer()) fail(origin, where + ": \"" + key + "\" must be an integer");
    return v.get<VertexId>();
}

}  // namespace

WeightedGraph parse_graph_json(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(origin, "line " + std::to_string(line_of_byte(text, e.byte)) + ": " + e.what());
    }
    if (!doc.is_object()) fail(origin, "top level must be an object");
    for (const auto& [key, _] : doc.items())
        if (key != "vertices" && key != "edges" && key != "truncation")
            fail(origin, "unknown key \"" + key + "\"");
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        fail(origin, "missing \"vertices\" array");
    if (!doc.contains("edges") || !doc["edges"].is_array())
        fail(origin, "missing \"edges\" array");

    std::vector<VertexSpec> vs;
    std::size_t i = 0;
    for (const json& v : doc["vertices"]) {
        std::string where = "vertices[" + std::to_string(i++) + "]";
        if (!v.is_object()) fail(origin, where + ": must be an object");
        vs.push_back({require_int(v, "id", where, origin), require_number(v, "mu", where, origin)});
    }
    std::vector<EdgeSpec> es;
    i = 0;
    for (const json& e : doc["edges"]) {
        std::string where = "edges[" + std::to_string(i++) + "]";
        if (!e.is_object()) fail(origin, where + ": must be an object");
        es.push_back({require_int(e, "u", where, origin), require_int(e, "v", where, origin),
                      require_number(e, "w", where, origin)});
    }

    WeightedGraph g = [&] {
        try {
            return WeightedGraph::build(vs, es);
        } catch (const std::invalid_argument& e) {
            fail(origin, e.what());
        }
    }();

    if (doc.contains("truncation")) {
        if (!doc["truncation"].is_array()) fail(origin, "\"truncation\" must be an array of ids");
        std::vector<VertexId> t;
        for (const json& v : doc["truncation"]) {
            if (!v.is_number_integer()) fail(origin, "\"truncation\" entries must be integers");
            t.push_back(v.get<VertexId>());
        }
        try {
            g.declare_truncation_boundary(VertexSet(std::move(t)));
        } catch (const std::invalid_argument& e) {
            fail(origin, e.what());
        }
    }
    return g;
}

WeightedGraph load_graph_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read graph file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_graph_json(ss.str(), path);
}

std::string graph_to_json(const WeightedGraph& g) {
    json doc;
    doc["vertices"] = json::array();
    for (VertexId v : g.vertex_ids())
        doc["vertices"].push_back({{"id", v}, {"mu", g.mu(v)}});
    doc["edges"] = json::array();
    for (VertexId v : g.vertex_ids())
        for (const auto& nb : g.neighbors(v)) {
            VertexId y = g.id_at(nb.idx);
            if (v < y) doc["edges"].push_back({{"u", v}, {"v", y}, {"w", nb.w}});
        }
    if (!g.truncation_boundary().empty())
        doc["truncation"] = g.truncation_boundary().ids();
    return doc.dump(2);
}

}  // namespace wavegraph
