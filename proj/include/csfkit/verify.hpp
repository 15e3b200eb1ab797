#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "csfkit/listing.hpp"
#include "csfkit/poset.hpp"

namespace csfkit {

// Seeded deterministic sampler. Bounded draws use plain modulo so streams are
// identical across standard libraries.
struct SampleRng {
    std::mt19937_64 eng;
    explicit SampleRng(std::uint64_t seed) : eng(seed) {}
    std::uint64_t next(std::uint64_t bound) { return bound ? eng() % bound : 0; }
};

// Random listing with at most max_vertices vertices on levels 1..max_level.
PartListing random_listing(SampleRng& rng, int max_vertices, int max_level,
                           bool with_graphs = true);

struct Counterexample {
    std::string poset_json;
    std::string e_expansion;
    std::string note;
};

struct VerificationReport {
    std::string label;
    int n = 0;
    long checked = 0;
    std::vector<Counterexample> counterexamples;
    double seconds = 0.0;

    bool pass() const { return counterexamples.empty(); }
};

std::string report_to_json_string(const VerificationReport& report);

enum Reduction : unsigned {
    kReduceNone = 0,
    kReduceSplit = 1,   // skip posets admitting an ordinal split
    kReduceDual = 2,    // keep one of {p, dual(p)} per class
    kReduceUduDud = 4,  // listing-based enumeration only; rejected here
};

// Enumerates the class at size n, applies the enabled reductions, computes
// each csf in the E basis and records every non-positive case.
VerificationReport check_epositivity(int n, PosetClass cls, unsigned reductions = kReduceNone,
                                     int jobs = 0);

// Seeded random contexts A b(G) B with an admissible edge pair, total size at
// most max_size (>= 3): checks csf(P) + csf(P12) = csf(P1) + csf(P2) exactly.
VerificationReport verify_modular_random(long samples, int max_size, std::uint64_t seed);

struct Table1 {
    // counts[k] is the number of isomorphism classes on k vertices; index 0
    // unused. The all-posets row stops at 7.
    std::vector<long> all;
    std::vector<long> three_plus_one_free;
    std::vector<long> both_free;
};

Table1 table1_counts(int max_n);

// For every (3+1)-free poset on n vertices: find a listing, reduce it, and
// check that the result is a convex combination of vertex-only listings whose
// posets avoid both patterns, with the csf preserved exactly.
VerificationReport sweep_listing_reduction(int n);

// For every bicoloured graph with r+s <= max_rs up to bicoloured isomorphism:
// the staged e-expansion must be nonnegative and agree with the direct csf.
VerificationReport sweep_staged_expansion(int max_rs);

// Listings with exactly n vertices, one representative per commutation normal
// form (no consecutive drop of two or more levels, contiguous levels from 1).
// Graph parts, when enabled, run over canonical bicoloured graphs with both
// sides nonempty. Stops early when cb returns false.
void for_each_listing(int n, bool with_graphs, const std::function<bool(const PartListing&)>& cb);

// Isomorphism classes of posets of vertex-only listings on n vertices.
std::set<CanonicalKey> vertex_only_listing_classes(int n);

// One listing per (3+1)-free isomorphism class on n vertices.
std::map<CanonicalKey, PartListing> listings_for_three_plus_one_free(int n);

}  // namespace csfkit
