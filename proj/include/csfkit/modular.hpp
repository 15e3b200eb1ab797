#pragma once

#include <vector>

#include "csfkit/bigraph.hpp"
#include "csfkit/listing.hpp"
#include "csfkit/rational.hpp"
#include "csfkit/symfunc.hpp"

namespace csfkit {

struct ModularTriple {
    BicolouredGraph g1;   // minus e1
    BicolouredGraph g2;   // minus e2
    BicolouredGraph g12;  // minus both
};

// e1 and e2 must be distinct edges of g sharing exactly one endpoint.
ModularTriple modular_triple(const BicolouredGraph& g, Edge e1, Edge e2);

// F[k] = probability that a uniformly random maximal matching of the complete
// graph on the same sides shares exactly k edges with g; k = 0..min(r, s).
using FunctionalVector = std::vector<Rat>;
FunctionalVector functionals(const BicolouredGraph& g);

// Two-level vertex-only words on levels {1, 2}.
PartListing udu_word(int r, int s, int k);  // v2^(s-k) v1^r v2^k
PartListing dud_word(int r, int s, int k);  // v1^k v2^s v1^(r-k)

BicolouredGraph udu_graph(int r, int s, int k);
BicolouredGraph dud_graph(int r, int s, int k);

// Convex combination of udu words (r >= s) or dud words (r < s) with the
// functional values as coefficients; drops zero terms.
std::vector<std::pair<Rat, PartListing>> decompose_dual(const BicolouredGraph& g);

// Linear combination of graphs sharing one (r, s).
struct LinGraph {
    int r = 0;
    int s = 0;
    std::vector<std::pair<Rat, BicolouredGraph>> terms;
};

// Rewrite g as a combination of the canonical matchings M_0..M_min(r,s) by
// repeatedly applying the modular relation to a vertex of degree >= 2.
LinGraph matching_reduction(const BicolouredGraph& g);

// Replace every graph part by the convex combination of two-level words from
// decompose_dual (leftmost first, depth first); the result is vertex-only.
LinListing reduce_listing(const LinListing& input);
LinListing reduce_listing(const PartListing& input);

// Graph of the word v2^(s-k-1) v1^r v2^k v1, one circulation step applied to
// the udu word; lives on (r+1, s-1) sides. Requires 0 <= k < s.
BicolouredGraph circulate_udu(int r, int s, int k);

// Elementary-basis expansion of the chromatic symmetric function of the
// two-level poset encoded by g, computed stage by stage through functional
// decompositions and circulation. All coefficients are nonnegative.
SymFunc three_free_e_expansion(const BicolouredGraph& g);

}  // namespace csfkit
