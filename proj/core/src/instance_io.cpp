#include "csys/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

namespace csys {

namespace {

std::string where(const std::string& key) { return "key '" + key + "'"; }

const Json& require(const Json& doc, const std::string& key) {
    auto it = doc.find(key);
    if (it == doc.end()) throw ParseError("missing " + where(key));
    return *it;
}

std::vector<std::string> string_array(const Json& node, const std::string& key) {
    if (!node.is_array()) throw ParseError(where(key) + " must be an array");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < node.size(); ++i) {
        if (!node[i].is_string())
            throw ParseError(where(key) + " index " + std::to_string(i) + " must be a string");
        out.push_back(node[i].get<std::string>());
    }
    return out;
}

int vertex_index(const std::vector<std::string>& vertices, const std::string& name,
                 const std::string& key, std::size_t i) {
    auto it = std::find(vertices.begin(), vertices.end(), name);
    if (it == vertices.end())
        throw ParseError(where(key) + " index " + std::to_string(i) + ": unknown vertex '" + name + "'");
    return static_cast<int>(it - vertices.begin());
}

std::vector<std::pair<int, int>> parse_edges(const Json& node,
                                             const std::vector<std::string>& vertices,
                                             const std::string& key) {
    if (!node.is_array()) throw ParseError(where(key) + " must be an array");
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < node.size(); ++i) {
        const Json& e = node[i];
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw ParseError(where(key) + " index " + std::to_string(i) +
                             " must be a two-element array of vertex names");
        const int u = vertex_index(vertices, e[0].get<std::string>(), key, i);
        const int v = vertex_index(vertices, e[1].get<std::string>(), key, i);
        if (u == v)
            throw ParseError(where(key) + " index " + std::to_string(i) + " is a self-loop");
        edges.emplace_back(u, v);
    }
    return edges;
}

Value natural(const Json& node, const std::string& key, std::size_t i) {
    if (!node.is_number_integer() || node.get<Value>() < 0)
        throw ParseError(where(key) + " index " + std::to_string(i) + " must be a natural number");
    return node.get<Value>();
}

ConnectivitySystem parse_graph_cut(const Json& doc, std::string name) {
    auto vertices = string_array(require(doc, "vertices"), "vertices");
    auto edges = parse_edges(require(doc, "edges"), vertices, "edges");
    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        labels = string_array(doc["labels"], "labels");
        if (labels.size() != edges.size())
            throw ParseError(where("labels") + " must have one entry per edge");
    } else {
        for (auto [u, v] : edges)
            labels.push_back(vertices[static_cast<std::size_t>(u)] + "-" +
                             vertices[static_cast<std::size_t>(v)]);
    }
    return {GroundSet(std::move(labels)),
            GraphCutSpec{std::move(vertices), std::move(edges)}, std::move(name)};
}

ConnectivitySystem parse_weighted_graph_cut(const Json& doc, std::string name) {
    auto vertices = string_array(require(doc, "vertices"), "vertices");
    auto edges = parse_edges(require(doc, "edges"), vertices, "edges");
    const Json& wnode = require(doc, "weights");
    if (!wnode.is_array() || wnode.size() != edges.size())
        throw ParseError(where("weights") + " must have one entry per edge");
    std::vector<Value> weights;
    for (std::size_t i = 0; i < wnode.size(); ++i) weights.push_back(natural(wnode[i], "weights", i));
    return {GroundSet(std::move(vertices)),
            WeightedGraphCutSpec{std::move(edges), std::move(weights)}, std::move(name)};
}

ConnectivitySystem parse_cut_rank(const Json& doc, std::string name) {
    const Json& adj = require(doc, "adjacency");
    if (!adj.is_array()) throw ParseError(where("adjacency") + " must be an array of rows");
    const std::size_t n = adj.size();
    std::vector<Mask> rows;
    for (std::size_t i = 0; i < n; ++i) {
        if (!adj[i].is_array() || adj[i].size() != n)
            throw ParseError(where("adjacency") + " row " + std::to_string(i) +
                             " must have " + std::to_string(n) + " entries");
        Mask row = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const Value bit = natural(adj[i][j], "adjacency", j);
            if (bit > 1)
                throw ParseError(where("adjacency") + " row " + std::to_string(i) +
                                 " index " + std::to_string(j) + " must be 0 or 1");
            if (bit) row |= Mask{1} << j;
        }
        rows.push_back(row);
    }
    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        labels = string_array(doc["labels"], "labels");
        if (labels.size() != n) throw ParseError(where("labels") + " must have one entry per vertex");
    } else {
        for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
    }
    return {GroundSet(std::move(labels)), CutRankSpec{std::move(rows)}, std::move(name)};
}

ConnectivitySystem parse_table(const Json& doc, std::string name) {
    GroundSet ground(string_array(require(doc, "elements"), "elements"));
    const Json& vals = require(doc, "values");
    if (!vals.is_array()) throw ParseError(where("values") + " must be an array");
    std::vector<std::optional<Value>> given(std::size_t{1} << ground.size());
    for (std::size_t i = 0; i < vals.size(); ++i) {
        const Json& entry = vals[i];
        if (!entry.is_object() || !entry.contains("set") || !entry.contains("f"))
            throw ParseError(where("values") + " index " + std::to_string(i) +
                             " must be an object with 'set' and 'f'");
        Mask m;
        try {
            m = ground.mask_of(string_array(entry["set"], "set"));
        } catch (const InputError& e) {
            throw ParseError(where("values") + " index " + std::to_string(i) + ": " + e.what());
        }
        const Value f = natural(entry["f"], "values", i);
        if (given[m] && *given[m] != f)
            throw ParseError(where("values") + " index " + std::to_string(i) +
                             ": conflicting value for the same subset");
        given[m] = f;
    }
    // A missing subset may be inferred from its complement by symmetry.
    // Explicit values always win, even when a pair disagrees; the verifier
    // is the place that reports such asymmetry.
    std::vector<Value> values(given.size());
    for (Mask m = 0; m < given.size(); ++m) {
        const Mask c = ground.complement(m);
        if (given[m]) values[m] = *given[m];
        else if (given[c]) values[m] = *given[c];
        else throw ParseError(where("values") + ": no value for subset mask " + std::to_string(m) +
                              " or its complement");
    }
    return {std::move(ground), TableSpec{std::move(values)}, std::move(name)};
}

} // namespace

ConnectivitySystem parse_instance(const Json& doc, std::string name) {
    if (!doc.is_object()) throw ParseError("instance must be a JSON object");
    const std::string type = require(doc, "type").get<std::string>();
    if (type == "graph-cut") return parse_graph_cut(doc, std::move(name));
    if (type == "weighted-graph-cut") return parse_weighted_graph_cut(doc, std::move(name));
    if (type == "cut-rank") return parse_cut_rank(doc, std::move(name));
    if (type == "table") return parse_table(doc, std::move(name));
    throw ParseError("unknown instance type '" + type + "'");
}

ConnectivitySystem load_instance(const std::filesystem::path& path) {
    return parse_instance(load_json_file(path), path.stem().string());
}

Json instance_to_json(const ConnectivitySystem& system) {
    Json doc;
    const auto& g = system.ground();
    if (const auto* gc = std::get_if<GraphCutSpec>(&system.spec())) {
        doc["type"] = "graph-cut";
        doc["vertices"] = gc->vertices;
        Json edges = Json::array();
        for (auto [u, v] : gc->edges)
            edges.push_back({gc->vertices[static_cast<std::size_t>(u)],
                             gc->vertices[static_cast<std::size_t>(v)]});
        doc["edges"] = std::move(edges);
        doc["labels"] = g.labels();
    } else if (const auto* wc = std::get_if<WeightedGraphCutSpec>(&system.spec())) {
        doc["type"] = "weighted-graph-cut";
        doc["vertices"] = g.labels();
        Json edges = Json::array();
        for (auto [u, v] : wc->edges) edges.push_back({g.label(u), g.label(v)});
        doc["edges"] = std::move(edges);
        doc["weights"] = wc->weights;
    } else if (const auto* cr = std::get_if<CutRankSpec>(&system.spec())) {
        doc["type"] = "cut-rank";
        Json adj = Json::array();
        for (int i = 0; i < g.size(); ++i) {
            Json row = Json::array();
            for (int j = 0; j < g.size(); ++j)
                row.push_back((cr->rows[static_cast<std::size_t>(i)] >> j) & 1u);
            adj.push_back(std::move(row));
        }
        doc["adjacency"] = std::move(adj);
        doc["labels"] = g.labels();
    } else {
        const auto& tb = std::get<TableSpec>(system.spec());
        doc["type"] = "table";
        doc["elements"] = g.labels();
        Json vals = Json::array();
        for (Mask m = 0; m < tb.values.size(); ++m)
            vals.push_back({{"set", g.names_of(m)}, {"f", tb.values[m]}});
        doc["values"] = std::move(vals);
    }
    return doc;
}

Json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const Json& doc) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << doc.dump(2) << '\n';
    if (!out) throw IoError("write failed for '" + path.string() + "'");
}

} // namespace csys
