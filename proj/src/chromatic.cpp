#include "csfkit/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "csfkit/modular.hpp"

namespace csfkit {

SimpleGraph SimpleGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0 || n > 16) throw std::out_of_range("SimpleGraph: vertex count out of range");
    SimpleGraph g;
    g.n = n;
    g.adj.assign(n, 0);
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n || a == b)
            throw std::invalid_argument("SimpleGraph: bad edge");
        g.adj[a] |= 1u << b;
        g.adj[b] |= 1u << a;
    }
    return g;
}

SimpleGraph incomparability_graph(const Poset& p) {
    SimpleGraph g;
    g.n = p.size();
    g.adj.assign(g.n, 0);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            if (i != j && !p.comparable(i, j)) g.adj[i] |= 1u << j;
    return g;
}

namespace {

constexpr int kCsfMaxVertices = 12;

// Partitions of the vertex set into blocks that are "compatible" cliques
// (chains for posets, independent sets for graphs), tallied by block-size
// multiset. Each block is grown from its smallest vertex in index order, so
// every set partition is visited exactly once.
struct BlockTally {
    int n;
    std::uint32_t full;
    const std::vector<std::uint32_t>& compat;  // compat[v]: vertices combinable with v
    std::map<Partition, unsigned long long> tally;
    std::vector<int> sizes;

    void run() { recurse(0); }

    void recurse(std::uint32_t used) {
        if (used == full) {
            ++tally[Partition::from_unsorted(sizes)];
            return;
        }
        int v = std::countr_zero(~used & full);
        std::uint32_t candidates = ~used & full & compat[v];
        candidates &= ~((1u << (v + 1)) - 1);  // indices above v only
        grow_block(used | (1u << v), 1u << v, candidates, 1);
    }

    void grow_block(std::uint32_t used, std::uint32_t block, std::uint32_t candidates, int size) {
        sizes.push_back(size);
        recurse(used);
        sizes.pop_back();
        std::uint32_t rest = candidates;
        while (rest) {
            int w = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint32_t next_cand = candidates & compat[w] & ~((1u << (w + 1)) - 1);
            grow_block(used | (1u << w), block | (1u << w), next_cand, size + 1);
        }
    }
};

SymFunc tally_to_symfunc(const std::map<Partition, unsigned long long>& tally) {
    SymFunc out(Basis::M);
    for (const auto& [lambda, count] : tally) {
        unsigned long long coeff = count * lambda.multiplicity_factorial();
        out.add_term(lambda, Rat(static_cast<unsigned long>(coeff)));
    }
    return out;
}

}  // namespace

SymFunc csf_poset(const Poset& p) {
    if (p.size() > kCsfMaxVertices) throw std::out_of_range("csf_poset: more than 12 vertices");
    std::vector<std::uint32_t> compat(p.size());
    for (int v = 0; v < p.size(); ++v) compat[v] = p.up_mask(v) | p.down_mask(v);
    BlockTally t{p.size(), p.full_mask(), compat, {}, {}};
    t.run();
    return tally_to_symfunc(t.tally);
}

SymFunc csf_graph(const SimpleGraph& g) {
    if (g.n > kCsfMaxVertices) throw std::out_of_range("csf_graph: more than 12 vertices");
    std::uint32_t full = g.n == 32 ? ~0u : (1u << g.n) - 1;
    std::vector<std::uint32_t> compat(g.n);
    for (int v = 0; v < g.n; ++v) compat[v] = full & ~g.adj[v] & ~(1u << v);
    BlockTally t{g.n, full, compat, {}, {}};
    t.run();
    return tally_to_symfunc(t.tally);
}

namespace {

std::size_t memo_cap() {
    static std::size_t cap = [] {
        const char* env = std::getenv("CSFKIT_MEMO_MAX");
        if (!env) return static_cast<std::size_t>(-1);
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        return (end && *end == '\0') ? static_cast<std::size_t>(v) : static_cast<std::size_t>(-1);
    }();
    return cap;
}

}  // namespace

SymFunc csf_poset_cached(const Poset& p) {
    static std::unordered_map<std::string, SymFunc> cache;
    static std::mutex mutex;
    CanonicalKey key = canonical_key(p);
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    SymFunc value = csf_poset(p);
    std::lock_guard<std::mutex> lock(mutex);
    if (cache.size() < memo_cap()) cache.emplace(std::move(key), value);
    return value;
}

SymFunc csf_listing(const PartListing& listing) {
    return csf_poset_cached(listing_to_poset(listing));
}

SymFunc csf_lin(const LinListing& lin) {
    SymFunc out(Basis::M);
    for (const auto& [c, listing] : lin.terms()) out.add_scaled(csf_listing(listing), c);
    return out;
}

bool verify_modular(const PartListing& prefix, int level, const BicolouredGraph& g,
                    const PartListing& suffix, Edge e1, Edge e2) {
    ModularTriple t = modular_triple(g, e1, e2);
    auto build = [&](const BicolouredGraph& core) {
        std::vector<Part> parts = prefix.parts();
        parts.push_back(graph_part(level, core));
        parts.insert(parts.end(), suffix.parts().begin(), suffix.parts().end());
        return csf_listing(PartListing(std::move(parts)));
    };
    SymFunc lhs = sf_add(build(g), build(t.g12));
    SymFunc rhs = sf_add(build(t.g1), build(t.g2));
    return lhs == rhs;
}

}  // namespace csfkit
