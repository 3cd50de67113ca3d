#pragma once

#include <array>
#include <string>
#include <vector>

namespace repvar {

// Pants-decomposition graph: vertices are pairs of pants, edges are cutting
// curves.  Loops and multi-edges are allowed; every vertex has degree 3 with
// loops counting twice.  Connected, V = 2g-2 and E = 3g-3 for the genus g.
class TrivalentGraph {
public:
    TrivalentGraph(int vertices, std::vector<std::array<int, 2>> edges);

    int vertex_count() const { return vertices_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::array<int, 2>>& edges() const { return edges_; }
    int genus() const { return edge_count() - vertex_count() + 1; }

    // the three incident edge indices at a vertex, loops listed twice
    std::array<int, 3> incident_edges(int vertex) const;

    // rank over GF(2) of the vertex-edge incidence matrix (loops give zero columns)
    int incidence_rank_mod2() const;

private:
    int vertices_ = 0;
    std::vector<std::array<int, 2>> edges_;
};

// two vertices joined by three parallel edges (genus 2)
TrivalentGraph theta_graph();
// two loops joined by a bridge (genus 2)
TrivalentGraph dumbbell_graph();
// linear chain generalization: loop, bridge, doubled edges, ..., loop (genus g >= 2)
TrivalentGraph genus_chain(int genus);

// {"vertices": V, "edges": [[u,v], ...]}, loop written as [u,u]
TrivalentGraph graph_from_json(const std::string& json_text);
std::string graph_to_json(const TrivalentGraph& g);

// named builder lookup used by the CLI: "theta", "dumbbell", "chain:g"
TrivalentGraph graph_by_name(const std::string& name);

} // namespace repvar
