#include "repvar/graphs.hpp"

#include <nlohmann/json.hpp>

#include <queue>

#include "repvar/errors.hpp"

namespace repvar {

TrivalentGraph::TrivalentGraph(int vertices, std::vector<std::array<int, 2>> edges)
    : vertices_(vertices), edges_(std::move(edges)) {
    if (vertices_ < 2) throw validation_error("TrivalentGraph: need at least 2 vertices");
    std::vector<int> degree(vertices_, 0);
    for (const auto& e : edges_) {
        for (int v : e)
            if (v < 0 || v >= vertices_)
                throw validation_error("TrivalentGraph: edge endpoint out of range");
        degree[e[0]] += 1;
        degree[e[1]] += 1;
    }
    for (int v = 0; v < vertices_; ++v)
        if (degree[v] != 3)
            throw validation_error("TrivalentGraph: vertex " + std::to_string(v) +
                                   " has degree " + std::to_string(degree[v]) + ", expected 3");
    // connectivity
    std::vector<bool> seen(vertices_, false);
    std::queue<int> queue;
    queue.push(0);
    seen[0] = true;
    int reached = 1;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop();
        for (const auto& e : edges_) {
            int other = -1;
            if (e[0] == v) other = e[1];
            else if (e[1] == v) other = e[0];
            if (other >= 0 && !seen[other]) {
                seen[other] = true;
                ++reached;
                queue.push(other);
            }
        }
    }
    if (reached != vertices_) throw validation_error("TrivalentGraph: graph is not connected");
}

std::array<int, 3> TrivalentGraph::incident_edges(int vertex) const {
    std::array<int, 3> out{};
    int count = 0;
    for (int e = 0; e < edge_count(); ++e) {
        if (edges_[e][0] == vertex) out[count++] = e;
        if (edges_[e][1] == vertex) out[count++] = e;
    }
    if (count != 3) throw validation_error("TrivalentGraph: corrupted incidence");
    return out;
}

int TrivalentGraph::incidence_rank_mod2() const {
    // rows = vertices, columns = edges; a loop contributes 0 to its vertex
    std::vector<std::vector<int>> m(vertices_, std::vector<int>(edge_count(), 0));
    for (int e = 0; e < edge_count(); ++e) {
        if (edges_[e][0] != edges_[e][1]) {
            m[edges_[e][0]][e] ^= 1;
            m[edges_[e][1]][e] ^= 1;
        }
    }
    int rank = 0;
    for (int col = 0; col < edge_count() && rank < vertices_; ++col) {
        int pivot = -1;
        for (int row = rank; row < vertices_; ++row)
            if (m[row][col]) { pivot = row; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int row = 0; row < vertices_; ++row)
            if (row != rank && m[row][col])
                for (int c = 0; c < edge_count(); ++c) m[row][c] ^= m[rank][c];
        ++rank;
    }
    return rank;
}

TrivalentGraph theta_graph() {
    return TrivalentGraph(2, {{0, 1}, {0, 1}, {0, 1}});
}

TrivalentGraph dumbbell_graph() {
    return TrivalentGraph(2, {{0, 0}, {0, 1}, {1, 1}});
}

TrivalentGraph genus_chain(int genus) {
    if (genus < 2) throw validation_error("genus_chain: genus must be >= 2");
    const int v = 2 * genus - 2;
    std::vector<std::array<int, 2>> edges;
    edges.push_back({0, 0});          // loop at the left end
    edges.push_back({v - 1, v - 1});  // loop at the right end
    for (int i = 0; i + 1 < v; ++i) {
        if (i % 2 == 0) {
            edges.push_back({i, i + 1});
        } else {
            edges.push_back({i, i + 1});
            edges.push_back({i, i + 1});
        }
    }
    return TrivalentGraph(v, std::move(edges));
}

TrivalentGraph graph_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw validation_error(std::string("graph_from_json: ") + e.what());
    }
    if (!j.contains("vertices") || !j.contains("edges"))
        throw validation_error("graph_from_json: need 'vertices' and 'edges'");
    const int v = j["vertices"].get<int>();
    std::vector<std::array<int, 2>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw validation_error("graph_from_json: each edge must be a pair");
        edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return TrivalentGraph(v, std::move(edges));
}

std::string graph_to_json(const TrivalentGraph& g) {
    nlohmann::json j;
    j["vertices"] = g.vertex_count();
    auto edges = nlohmann::json::array();
    for (const auto& e : g.edges()) edges.push_back({e[0], e[1]});
    j["edges"] = edges;
    return j.dump();
}

TrivalentGraph graph_by_name(const std::string& name) {
    if (name == "theta") return theta_graph();
    if (name == "dumbbell") return dumbbell_graph();
    if (name.rfind("chain:", 0) == 0) {
        const int g = std::stoi(name.substr(6));
        return genus_chain(g);
    }
    throw validation_error("graph_by_name: unknown graph '" + name +
                           "' (expected theta, dumbbell or chain:<genus>)");
}

} // namespace repvar
