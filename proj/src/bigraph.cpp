#include "csfkit/bigraph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

#include "csfkit/listing.hpp"

namespace csfkit {

namespace {

constexpr int kMaxSide = 16;

void check_sides(int r, int s) {
    if (r < 0 || s < 0 || r > kMaxSide || s > kMaxSide)
        throw std::out_of_range("BicolouredGraph: side size out of range");
}

}  // namespace

BicolouredGraph::BicolouredGraph(int r_, int s_) : r(r_), s(s_) {
    check_sides(r_, s_);
    adj.assign(r, 0);
}

BicolouredGraph BicolouredGraph::complete(int r, int s) {
    BicolouredGraph g(r, s);
    const std::uint32_t row = s == 0 ? 0 : (1u << s) - 1;
    for (auto& a : g.adj) a = row;
    return g;
}

BicolouredGraph BicolouredGraph::matching(int r, int s, int k) {
    if (k < 0 || k > std::min(r, s))
        throw std::invalid_argument("matching: k exceeds min(r, s)");
    BicolouredGraph g(r, s);
    for (int i = 0; i < k; ++i) g.adj[i] = 1u << i;
    return g;
}

BicolouredGraph BicolouredGraph::from_edges(int r, int s, const std::vector<Edge>& edges) {
    BicolouredGraph g(r, s);
    for (auto [d, u] : edges) {
        if (d < 0 || d >= r || u < 0 || u >= s)
            throw std::invalid_argument("from_edges: endpoint out of range");
        if (g.has_edge(d, u)) throw std::invalid_argument("from_edges: duplicate edge");
        g.set_edge(d, u, true);
    }
    return g;
}

void BicolouredGraph::set_edge(int d, int u, bool present) {
    if (present)
        adj[d] |= 1u << u;
    else
        adj[d] &= ~(1u << u);
}

int BicolouredGraph::edge_count() const {
    int c = 0;
    for (std::uint32_t row : adj) c += std::popcount(row);
    return c;
}

std::vector<Edge> BicolouredGraph::edges() const {
    std::vector<Edge> out;
    for (int d = 0; d < r; ++d) {
        std::uint32_t row = adj[d];
        while (row) {
            int u = std::countr_zero(row);
            row &= row - 1;
            out.emplace_back(d, u);
        }
    }
    return out;
}

int BicolouredGraph::down_degree(int d) const { return std::popcount(adj[d]); }

int BicolouredGraph::up_degree(int u) const {
    int c = 0;
    for (std::uint32_t row : adj) c += (row >> u) & 1u;
    return c;
}

bool BicolouredGraph::is_matching() const {
    std::uint32_t seen = 0;
    for (std::uint32_t row : adj) {
        if (std::popcount(row) > 1) return false;
        if (row & seen) return false;
        seen |= row;
    }
    return true;
}

BicolouredGraph BicolouredGraph::transpose() const {
    BicolouredGraph g(s, r);
    for (int d = 0; d < r; ++d)
        for (int u = 0; u < s; ++u)
            if (has_edge(d, u)) g.set_edge(u, d, true);
    return g;
}

BicolouredGraph BicolouredGraph::without_edge(Edge e) const {
    if (!has_edge(e.first, e.second)) throw std::invalid_argument("without_edge: edge absent");
    BicolouredGraph g = *this;
    g.set_edge(e.first, e.second, false);
    return g;
}

BicolouredGraph BicolouredGraph::without_down(int d) const {
    BicolouredGraph g(r - 1, s);
    for (int i = 0, j = 0; i < r; ++i) {
        if (i == d) continue;
        g.adj[j++] = adj[i];
    }
    return g;
}

BicolouredGraph BicolouredGraph::without_up(int u) const {
    BicolouredGraph g(r, s - 1);
    const std::uint32_t low = (1u << u) - 1;
    for (int i = 0; i < r; ++i) g.adj[i] = (adj[i] & low) | ((adj[i] >> (u + 1)) << u);
    return g;
}

BicolouredGraph BicolouredGraph::canonical() const {
    // Minimize over column permutations; rows are sorted descending for each,
    // which is optimal once columns are fixed.
    std::vector<int> cols(s);
    std::iota(cols.begin(), cols.end(), 0);
    std::vector<std::uint32_t> best;
    bool have = false;
    do {
        std::vector<std::uint32_t> rows(r, 0);
        for (int d = 0; d < r; ++d)
            for (int u = 0; u < s; ++u)
                if (has_edge(d, cols[u])) rows[d] |= 1u << u;
        std::sort(rows.begin(), rows.end(), std::greater<std::uint32_t>());
        if (!have || rows < best) {
            best = std::move(rows);
            have = true;
        }
    } while (std::next_permutation(cols.begin(), cols.end()));
    BicolouredGraph g(r, s);
    if (have) g.adj = std::move(best);
    return g;
}

std::string graph_to_literal(const BicolouredGraph& g) {
    std::string out = std::to_string(g.r) + "x" + std::to_string(g.s);
    bool first = true;
    for (auto [d, u] : g.edges()) {
        out += first ? ':' : ',';
        first = false;
        out += std::to_string(d + 1);
        out += '-';
        out += std::to_string(u + 1);
    }
    return out;
}

BicolouredGraph parse_graph_literal(const std::string& text) {
    // Reuse the listing parser on a synthetic graph part token.
    PartListing listing = parse_listing("b1{" + text + "}");
    return *listing.parts()[0].graph;
}

const std::vector<BicolouredGraph>& canonical_graphs(int r, int s) {
    static std::map<std::pair<int, int>, std::vector<BicolouredGraph>> cache;
    static std::mutex mutex;
    std::pair<int, int> key{r, s};
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    if (r * s > 20) throw std::out_of_range("canonical_graphs: too many labeled graphs");
    std::vector<BicolouredGraph> out;
    if (r == 0 || s == 0) {
        out.emplace_back(r, s);
    } else {
        const std::uint64_t total = 1ull << (r * s);
        std::set<std::vector<std::uint32_t>> seen;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            BicolouredGraph g(r, s);
            for (int d = 0; d < r; ++d)
                g.adj[d] = static_cast<std::uint32_t>((mask >> (d * s)) & ((1u << s) - 1));
            BicolouredGraph c = g.canonical();
            if (seen.insert(c.adj).second) out.push_back(std::move(c));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const BicolouredGraph& a, const BicolouredGraph& b) { return a.adj < b.adj; });
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace csfkit
