#include "forbid/layout_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "forbid/errors.hpp"

namespace forbid {

using nlohmann::json;

namespace {

std::string node_label(const json& node, std::size_t index) {
    if (node.is_object() && node.contains("id") && node["id"].is_string())
        return "node '" + node["id"].get<std::string>() + "'";
    return "node #" + std::to_string(index);
}

double number_field(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key)) throw InputError(where + ": missing field '" + key + "'");
    const json& v = obj[key];
    if (!v.is_number()) throw InputError(where + ": field '" + key + "' is not a number");
    return v.get<double>();
}

// Agora files use numeric or string ids under "id", "index" or "label".
std::string agora_id(const json& node, std::size_t index) {
    for (const char* key : {"id", "index", "label"}) {
        if (!node.contains(key)) continue;
        const json& v = node[key];
        if (v.is_string()) return v.get<std::string>();
        if (v.is_number_integer()) return std::to_string(v.get<long long>());
    }
    return std::to_string(index);
}

void resolve_edge(Layout& layout, const std::unordered_map<std::string, std::size_t>& by_id,
                  const std::string& a, const std::string& b, std::size_t index) {
    const auto ia = by_id.find(a);
    const auto ib = by_id.find(b);
    if (ia == by_id.end() || ib == by_id.end())
        throw InputError("edge #" + std::to_string(index) + " [" + a + ", " + b +
                         "]: dangling endpoint '" + (ia == by_id.end() ? a : b) + "'");
    layout.edges.push_back({ia->second, ib->second});
}

std::string edge_endpoint(const json& v, std::size_t index) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw InputError("edge #" + std::to_string(index) + ": endpoint must be a string or integer id");
}

Layout parse_native(const json& doc) {
    if (!doc.is_object() || !doc.contains("nodes") || !doc["nodes"].is_array())
        throw InputError("layout: missing field 'nodes'");
    Layout layout;
    std::unordered_map<std::string, std::size_t> by_id;
    const json& nodes = doc["nodes"];
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const json& n = nodes[i];
        const std::string where = node_label(n, i);
        if (!n.is_object()) throw InputError(where + ": not an object");
        if (!n.contains("id")) throw InputError(where + ": missing field 'id'");
        if (!n["id"].is_string()) throw InputError(where + ": field 'id' is not a string");
        NodeBox box;
        box.id = n["id"].get<std::string>();
        box.center = {number_field(n, "x", where), number_field(n, "y", where)};
        box.width = number_field(n, "w", where);
        box.height = number_field(n, "h", where);
        if (!(box.width > 0.0) || !(box.height > 0.0))
            throw InputError(where + ": nonpositive size");
        if (!by_id.emplace(box.id, i).second) throw InputError(where + ": duplicate id");
        layout.nodes.push_back(std::move(box));
    }
    if (doc.contains("edges")) {
        const json& edges = doc["edges"];
        if (!edges.is_array()) throw InputError("layout: field 'edges' is not an array");
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (!edges[e].is_array() || edges[e].size() != 2)
                throw InputError("edge #" + std::to_string(e) + ": expected [idA, idB]");
            resolve_edge(layout, by_id, edge_endpoint(edges[e][0], e), edge_endpoint(edges[e][1], e), e);
        }
    }
    layout.validate();
    return layout;
}

Layout parse_agora(const json& doc) {
    if (!doc.is_object() || !doc.contains("nodes") || !doc["nodes"].is_array())
        throw InputError("agora: missing 'nodes' array");
    Layout layout;
    std::unordered_map<std::string, std::size_t> by_id;
    const json& nodes = doc["nodes"];
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const json& n = nodes[i];
        if (!n.is_object()) throw InputError("agora: node #" + std::to_string(i) + " is not an object");
        NodeBox box;
        box.id = agora_id(n, i);
        const std::string where = "agora: node '" + box.id + "'";
        box.center = {number_field(n, "x", where), number_field(n, "y", where)};
        box.width = number_field(n, n.contains("width") ? "width" : "w", where);
        box.height = number_field(n, n.contains("height") ? "height" : "h", where);
        if (!(box.width > 0.0) || !(box.height > 0.0))
            throw InputError(where + ": nonpositive size");
        if (!by_id.emplace(box.id, i).second) throw InputError(where + ": duplicate id");
        layout.nodes.push_back(std::move(box));
    }
    const char* edge_key = doc.contains("edges") ? "edges" : (doc.contains("links") ? "links" : nullptr);
    if (edge_key) {
        const json& edges = doc[edge_key];
        if (!edges.is_array()) throw InputError("agora: edges are not an array");
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const json& ed = edges[e];
            if (ed.is_array() && ed.size() == 2) {
                resolve_edge(layout, by_id, edge_endpoint(ed[0], e), edge_endpoint(ed[1], e), e);
            } else if (ed.is_object() && ed.contains("source") && ed.contains("target")) {
                resolve_edge(layout, by_id, edge_endpoint(ed["source"], e), edge_endpoint(ed["target"], e), e);
            } else {
                throw InputError("agora: edge #" + std::to_string(e) + " has an unsupported shape");
            }
        }
    }
    layout.validate();
    return layout;
}

}  // namespace

Layout parse_layout(std::string_view text, LayoutFormat format) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    return format == LayoutFormat::Agora ? parse_agora(doc) : parse_native(doc);
}

std::string serialize_layout(const Layout& layout) {
    nlohmann::ordered_json doc;
    auto& nodes = doc["nodes"] = nlohmann::ordered_json::array();
    for (const auto& n : layout.nodes) {
        nlohmann::ordered_json node;
        node["id"] = n.id;
        node["x"] = n.center.x;
        node["y"] = n.center.y;
        node["w"] = n.width;
        node["h"] = n.height;
        nodes.push_back(std::move(node));
    }
    if (!layout.edges.empty()) {
        auto& edges = doc["edges"] = nlohmann::ordered_json::array();
        for (const auto& e : layout.edges)
            edges.push_back({layout.nodes.at(e.source).id, layout.nodes.at(e.target).id});
    }
    return doc.dump(1) + "\n";
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write '" + path.string() + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw InputError("failed writing '" + path.string() + "'");
}

Layout load_layout(const std::filesystem::path& path, LayoutFormat format) {
    try {
        return parse_layout(read_file(path), format);
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

}  // namespace forbid
