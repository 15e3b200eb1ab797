#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace csfkit {

// Edge between down vertex d and up vertex u, 0-based.
using Edge = std::pair<int, int>;

// Bipartite graph with r "down" and s "up" vertices; edges only across.
// adj[d] holds the bitmask of up neighbours of down vertex d.
struct BicolouredGraph {
    int r = 0;
    int s = 0;
    std::vector<std::uint32_t> adj;

    BicolouredGraph() = default;
    BicolouredGraph(int r_, int s_);

    static BicolouredGraph complete(int r, int s);
    // k disjoint edges (i, i) for i < k.
    static BicolouredGraph matching(int r, int s, int k);
    static BicolouredGraph from_edges(int r, int s, const std::vector<Edge>& edges);

    bool has_edge(int d, int u) const { return (adj[d] >> u) & 1u; }
    void set_edge(int d, int u, bool present);
    int edge_count() const;
    std::vector<Edge> edges() const;  // sorted (d, u)

    int down_degree(int d) const;
    int up_degree(int u) const;
    bool is_matching() const;  // all degrees <= 1

    BicolouredGraph transpose() const;
    BicolouredGraph without_edge(Edge e) const;
    BicolouredGraph without_down(int d) const;  // remove a down vertex, reindex
    BicolouredGraph without_up(int u) const;

    // Lexicographically minimal adjacency rows over all row and column
    // permutations; equal canonical forms iff bicoloured-isomorphic.
    BicolouredGraph canonical() const;

    bool operator==(const BicolouredGraph&) const = default;
};

// "4x2:1-1,2-1,1-2,3-2,4-2" (1-based endpoints); edgeless graphs omit the colon.
std::string graph_to_literal(const BicolouredGraph& g);
BicolouredGraph parse_graph_literal(const std::string& text);

// All graphs with the given sides, one per bicoloured-isomorphism class,
// canonically labeled and sorted. Cached; thread safe.
const std::vector<BicolouredGraph>& canonical_graphs(int r, int s);

}  // namespace csfkit
