#pragma once

#include <cstdint>
#include <vector>

#include "csfkit/bigraph.hpp"
#include "csfkit/listing.hpp"
#include "csfkit/poset.hpp"
#include "csfkit/symfunc.hpp"

namespace csfkit {

// Undirected simple graph on vertices 0..n-1 (adjacency bitmask rows).
struct SimpleGraph {
    int n = 0;
    std::vector<std::uint32_t> adj;

    static SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
};

SimpleGraph incomparability_graph(const Poset& p);

// Chromatic symmetric function in the monomial basis: the coefficient of
// m_lambda counts proper colourings with lambda_i vertices of colour i, i.e.
// (number of chain partitions with block sizes lambda) times the product of
// multiplicity factorials. Bounded at 12 vertices.
SymFunc csf_poset(const Poset& p);

// Same, memoized per isomorphism class. The cache is shared and thread safe;
// CSFKIT_MEMO_MAX caps the number of retained entries (default unlimited).
SymFunc csf_poset_cached(const Poset& p);

// Colour classes are independent sets instead of chains.
SymFunc csf_graph(const SimpleGraph& g);

SymFunc csf_listing(const PartListing& listing);
SymFunc csf_lin(const LinListing& lin);

// Exact check of csf(P) + csf(P12) = csf(P1) + csf(P2) for the listing
// A b(G) B with the graph part at the given level. Must hold whenever the
// edge pair is admissible; false signals an implementation bug.
bool verify_modular(const PartListing& prefix, int level, const BicolouredGraph& g,
                    const PartListing& suffix, Edge e1, Edge e2);

}  // namespace csfkit
