#include "alphawidth/certificates.hpp"

#include <algorithm>

#include "alphawidth/errors.hpp"

namespace alphawidth {

Json vertex_list(VertexSet s) { return Json(s.to_vector()); }
Json vertex_list(const std::vector<int>& seq) { return Json(seq); }

VertexSet vertex_set_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected a vertex list", 0);
    VertexSet s;
    for (const auto& v : j) {
        const int x = v.get<int>();
        if (x < 0 || x >= kMaxBitsetVertices) throw ParseError("vertex " + std::to_string(x) + " out of range", 0);
        s.insert(x);
    }
    return s;
}

Json to_json(const TreeDecomposition& td) {
    Json out;
    Json nodes = Json::array();
    for (int t = 0; t < td.node_count(); ++t) nodes.push_back(t);
    out["nodes"] = nodes;
    Json edges = Json::array();
    for (auto [a, b] : td.edges) edges.push_back({a, b});
    out["edges"] = edges;
    Json bags = Json::object();
    for (int t = 0; t < td.node_count(); ++t) bags[std::to_string(t)] = vertex_list(td.bags[t]);
    out["bags"] = bags;
    if (td.root) out["root"] = *td.root;
    return out;
}

TreeDecomposition tree_decomposition_from_json(const Json& j) {
    try {
        TreeDecomposition td;
        const auto& nodes = j.at("nodes");
        std::vector<int> ids;
        for (const auto& x : nodes) ids.push_back(x.get<int>());
        for (std::size_t i = 0; i < ids.size(); ++i)
            if (ids[i] != static_cast<int>(i)) throw ParseError("node ids must be 0..m-1 in order", 0);
        for (int t : ids) {
            const auto key = std::to_string(t);
            td.add_node(j.at("bags").contains(key) ? vertex_set_from_json(j.at("bags").at(key)) : VertexSet{});
        }
        for (const auto& e : j.at("edges")) {
            const int a = e.at(0).get<int>(), b = e.at(1).get<int>();
            if (a < 0 || b < 0 || a >= td.node_count() || b >= td.node_count())
                throw ParseError("edge endpoint is not a node", 0);
            td.add_edge(a, b);
        }
        if (j.contains("root") && !j.at("root").is_null()) td.root = j.at("root").get<int>();
        return td;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed decomposition certificate: ") + e.what(), 0);
    }
}

Json to_json(const EliminationForest& f) {
    Json parent = Json::object();
    for (int v = 0; v < f.order(); ++v)
        parent[std::to_string(v)] = f.parent[v] < 0 ? Json(nullptr) : Json(f.parent[v]);
    Json out;
    out["parent"] = parent;
    out["roots"] = f.roots();
    return out;
}

EliminationForest elimination_forest_from_json(const Json& j, int n) {
    try {
        EliminationForest f;
        f.parent.assign(n, -1);
        std::vector<char> seen(n, 0);
        for (const auto& [key, value] : j.at("parent").items()) {
            const int v = std::stoi(key);
            if (v < 0 || v >= n) throw ParseError("forest vertex " + key + " out of range", 0);
            seen[v] = 1;
            f.parent[v] = value.is_null() ? -1 : value.get<int>();
        }
        for (int v = 0; v < n; ++v)
            if (!seen[v]) throw ParseError("forest has no entry for vertex " + std::to_string(v), 0);
        if (j.contains("roots")) {
            auto roots = j.at("roots").get<std::vector<int>>();
            std::sort(roots.begin(), roots.end());
            if (roots != f.roots()) throw ParseError("roots do not match the parentless vertices", 0);
        }
        return f;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed forest certificate: ") + e.what(), 0);
    } catch (const std::invalid_argument&) {
        throw ParseError("forest keys must be vertex numbers", 0);
    }
}

Json bramble_to_json(const StrongBramble& b, const AlphaOrder& order) {
    Json elements = Json::array();
    for (VertexSet e : b.elements) elements.push_back(vertex_list(e));
    Json out;
    out["elements"] = elements;
    out["cover"] = vertex_list(order.cover);
    out["alpha_order"] = order.value;
    return out;
}

StrongBramble bramble_from_json(const Json& j) {
    try {
        StrongBramble b;
        for (const auto& e : j.at("elements")) b.elements.push_back(vertex_set_from_json(e));
        return b;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed bramble certificate: ") + e.what(), 0);
    }
}

Json model_to_json(const InducedMinorModel& m, const std::string& pattern) {
    Json branch = Json::object();
    for (std::size_t p = 0; p < m.branch.size(); ++p) branch[std::to_string(p)] = vertex_list(m.branch[p]);
    Json out;
    out["pattern"] = pattern;
    out["branch"] = branch;
    return out;
}

InducedMinorModel model_from_json(const Json& j) {
    try {
        const auto& branch = j.at("branch");
        InducedMinorModel m;
        m.branch.resize(branch.size());
        for (const auto& [key, value] : branch.items()) {
            const auto p = static_cast<std::size_t>(std::stoi(key));
            if (p >= m.branch.size()) throw ParseError("pattern vertex " + key + " out of range", 0);
            m.branch[p] = vertex_set_from_json(value);
        }
        return m;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed model certificate: ") + e.what(), 0);
    } catch (const std::invalid_argument&) {
        throw ParseError("model keys must be pattern vertex numbers", 0);
    }
}

Graph pattern_graph(const std::string& name) {
    if (name.size() < 2) throw ParseError("unknown pattern '" + name + "'", 0);
    int size = 0;
    try {
        size = std::stoi(name.substr(1));
    } catch (const std::exception&) {
        throw ParseError("unknown pattern '" + name + "'", 0);
    }
    switch (name[0]) {
        case 'W': return wheel_graph(size);
        case 'K': return graphs::complete(size);
        case 'P': return graphs::path(size);
        case 'C': return graphs::cycle(size);
        default: throw ParseError("unknown pattern '" + name + "'", 0);
    }
}

}  // namespace alphawidth
