#include "csfkit/modular.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <stdexcept>

namespace csfkit {

ModularTriple modular_triple(const BicolouredGraph& g, Edge e1, Edge e2) {
    if (e1 == e2) throw std::invalid_argument("modular_triple: edges must differ");
    if (!g.has_edge(e1.first, e1.second) || !g.has_edge(e2.first, e2.second))
        throw std::invalid_argument("modular_triple: edge absent from graph");
    const bool share_down = e1.first == e2.first;
    const bool share_up = e1.second == e2.second;
    if (share_down == share_up)
        throw std::invalid_argument("modular_triple: edges must share exactly one endpoint");
    ModularTriple t;
    t.g1 = g.without_edge(e1);
    t.g2 = g.without_edge(e2);
    t.g12 = t.g1.without_edge(e2);
    return t;
}

namespace {

void count_matchings(const BicolouredGraph& g, bool downs_are_smaller, int pos,
                     std::uint32_t used, int overlap, std::vector<unsigned long long>& tally) {
    const int small = downs_are_smaller ? g.r : g.s;
    const int large = downs_are_smaller ? g.s : g.r;
    if (pos == small) {
        ++tally[overlap];
        return;
    }
    for (int t = 0; t < large; ++t) {
        if ((used >> t) & 1u) continue;
        bool in_g = downs_are_smaller ? g.has_edge(pos, t) : g.has_edge(t, pos);
        count_matchings(g, downs_are_smaller, pos + 1, used | (1u << t), overlap + (in_g ? 1 : 0),
                        tally);
    }
}

}  // namespace

FunctionalVector functionals(const BicolouredGraph& g) {
    if (g.r + g.s < 1) throw std::invalid_argument("functionals: graph has no vertices");
    const int mn = std::min(g.r, g.s);
    if (mn > 8) throw std::out_of_range("functionals: min(r, s) exceeds enumeration bound");
    std::vector<unsigned long long> tally(mn + 1, 0);
    count_matchings(g, g.r <= g.s, 0, 0, 0, tally);
    unsigned long long total = 0;
    for (auto t : tally) total += t;
    FunctionalVector out(mn + 1);
    for (int k = 0; k <= mn; ++k) {
        Rat q(static_cast<unsigned long>(tally[k]), static_cast<unsigned long>(total));
        q.canonicalize();
        out[k] = q;
    }
    return out;
}

PartListing udu_word(int r, int s, int k) {
    if (r < 0 || s < 0 || k < 0 || k > s) throw std::out_of_range("udu_word: k out of range");
    std::vector<Part> parts;
    for (int i = 0; i < s - k; ++i) parts.push_back(vertex_part(2));
    for (int i = 0; i < r; ++i) parts.push_back(vertex_part(1));
    for (int i = 0; i < k; ++i) parts.push_back(vertex_part(2));
    return PartListing(std::move(parts));
}

PartListing dud_word(int r, int s, int k) {
    if (r < 0 || s < 0 || k < 0 || k > r) throw std::out_of_range("dud_word: k out of range");
    std::vector<Part> parts;
    for (int i = 0; i < k; ++i) parts.push_back(vertex_part(1));
    for (int i = 0; i < s; ++i) parts.push_back(vertex_part(2));
    for (int i = 0; i < r - k; ++i) parts.push_back(vertex_part(1));
    return PartListing(std::move(parts));
}

BicolouredGraph udu_graph(int r, int s, int k) {
    udu_word(r, s, k);  // range check
    BicolouredGraph g(r, s);
    // Ups are numbered in word order: s-k leading (isolated), then k trailing
    // (complete to all downs).
    for (int d = 0; d < r; ++d)
        for (int u = s - k; u < s; ++u) g.set_edge(d, u, true);
    return g;
}

BicolouredGraph dud_graph(int r, int s, int k) {
    dud_word(r, s, k);  // range check
    BicolouredGraph g(r, s);
    // Downs: k leading (complete to all ups), r-k trailing (isolated).
    for (int d = 0; d < k; ++d)
        for (int u = 0; u < s; ++u) g.set_edge(d, u, true);
    return g;
}

std::vector<std::pair<Rat, PartListing>> decompose_dual(const BicolouredGraph& g) {
    std::vector<std::pair<Rat, PartListing>> out;
    if (g.r + g.s == 0) {
        out.emplace_back(1, PartListing());
        return out;
    }
    FunctionalVector f = functionals(g);
    for (int k = 0; k < static_cast<int>(f.size()); ++k) {
        if (f[k] == 0) continue;
        out.emplace_back(f[k], g.r >= g.s ? udu_word(g.r, g.s, k) : dud_word(g.r, g.s, k));
    }
    return out;
}

LinGraph matching_reduction(const BicolouredGraph& g) {
    const int mn = std::min(g.r, g.s);
    if (mn > 6) throw std::out_of_range("matching_reduction: min(r, s) exceeds bound");

    std::vector<Rat> coeff(mn + 1, 0);
    std::map<std::vector<std::uint32_t>, Rat> active;
    active.emplace(g.canonical().adj, 1);
    while (!active.empty()) {
        auto it = active.begin();
        BicolouredGraph cur(g.r, g.s);
        cur.adj = it->first;
        Rat c = it->second;
        active.erase(it);
        if (c == 0) continue;
        if (cur.is_matching()) {
            coeff[cur.edge_count()] += c;
            continue;
        }
        // Smallest vertex of degree >= 2 (downs before ups), two smallest edges.
        Edge e1{-1, -1}, e2{-1, -1};
        for (int d = 0; d < cur.r && e1.first < 0; ++d) {
            if (cur.down_degree(d) >= 2) {
                std::uint32_t row = cur.adj[d];
                int u1 = std::countr_zero(row);
                row &= row - 1;
                int u2 = std::countr_zero(row);
                e1 = {d, u1};
                e2 = {d, u2};
            }
        }
        if (e1.first < 0) {
            for (int u = 0; u < cur.s && e1.first < 0; ++u) {
                if (cur.up_degree(u) >= 2) {
                    int d1 = -1, d2 = -1;
                    for (int d = 0; d < cur.r; ++d) {
                        if (!cur.has_edge(d, u)) continue;
                        if (d1 < 0)
                            d1 = d;
                        else if (d2 < 0) {
                            d2 = d;
                            break;
                        }
                    }
                    e1 = {d1, u};
                    e2 = {d2, u};
                }
            }
        }
        ModularTriple t = modular_triple(cur, e1, e2);
        auto push = [&active](const BicolouredGraph& dg, const Rat& dc) {
            auto [pos, inserted] = active.emplace(dg.canonical().adj, dc);
            if (!inserted) {
                pos->second += dc;
                if (pos->second == 0) active.erase(pos);
            }
        };
        push(t.g1, c);
        push(t.g2, c);
        push(t.g12, -c);
    }

    LinGraph out;
    out.r = g.r;
    out.s = g.s;
    for (int k = 0; k <= mn; ++k)
        if (coeff[k] != 0) out.terms.emplace_back(coeff[k], BicolouredGraph::matching(g.r, g.s, k));
    return out;
}

namespace {

int leftmost_graph_part(const PartListing& listing) {
    const auto& parts = listing.parts();
    for (int i = 0; i < static_cast<int>(parts.size()); ++i)
        if (!parts[i].is_vertex()) return i;
    return -1;
}

}  // namespace

LinListing reduce_listing(const LinListing& input) {
    std::vector<std::pair<Rat, PartListing>> done;
    std::deque<std::pair<Rat, PartListing>> work(input.terms().begin(), input.terms().end());
    while (!work.empty()) {
        auto [c, listing] = std::move(work.front());
        work.pop_front();
        int idx = leftmost_graph_part(listing);
        if (idx < 0) {
            done.emplace_back(std::move(c), std::move(listing));
            continue;
        }
        const Part& part = listing.parts()[idx];
        auto expansion = decompose_dual(*part.graph);
        // Depth first: children go to the front, preserving their order.
        for (auto rit = expansion.rbegin(); rit != expansion.rend(); ++rit) {
            std::vector<Part> parts(listing.parts().begin(), listing.parts().begin() + idx);
            PartListing shifted_word = rit->second.shifted(part.level - 1);
            for (const Part& wp : shifted_word.parts()) parts.push_back(wp);
            parts.insert(parts.end(), listing.parts().begin() + idx + 1, listing.parts().end());
            work.emplace_front(c * rit->first, PartListing(std::move(parts)));
        }
    }
    // Merge identical listings, keeping first-occurrence order.
    std::vector<std::pair<Rat, PartListing>> merged;
    std::map<std::string, std::size_t> index;
    for (auto& [c, listing] : done) {
        std::string key = serialize_listing(listing);
        auto it = index.find(key);
        if (it == index.end()) {
            index.emplace(std::move(key), merged.size());
            merged.emplace_back(std::move(c), std::move(listing));
        } else {
            merged[it->second].first += c;
        }
    }
    return LinListing(std::move(merged));
}

LinListing reduce_listing(const PartListing& input) {
    return reduce_listing(LinListing({{Rat(1), input}}));
}

BicolouredGraph circulate_udu(int r, int s, int k) {
    if (k < 0 || k >= s) throw std::out_of_range("circulate_udu: requires 0 <= k < s");
    std::vector<Part> parts;
    for (int i = 0; i < s - k - 1; ++i) parts.push_back(vertex_part(2));
    for (int i = 0; i < r; ++i) parts.push_back(vertex_part(1));
    for (int i = 0; i < k; ++i) parts.push_back(vertex_part(2));
    parts.push_back(vertex_part(1));
    return two_level_word_to_graph(PartListing(std::move(parts)), 1);
}

SymFunc three_free_e_expansion(const BicolouredGraph& g) {
    if (g.r + g.s == 0) return SymFunc::one(Basis::E);
    BicolouredGraph start = g.r >= g.s ? g : g.transpose();
    int r = start.r, s = start.s;

    SymFunc out(Basis::E);
    std::map<std::vector<std::uint32_t>, Rat> state;
    state.emplace(start.canonical().adj, 1);
    while (s > 0) {
        std::map<std::vector<std::uint32_t>, Rat> next;
        for (const auto& [rows, c] : state) {
            BicolouredGraph h(r, s);
            h.adj = rows;
            FunctionalVector f = functionals(h);
            if (f[s] != 0) {
                Rat coeff = c * f[s] * Rat(factorial(r)) * Rat(factorial(s));
                out.add_term(Partition::from_unsorted({r, s}), coeff);
            }
            for (int k = 0; k < s; ++k) {
                if (f[k] == 0) continue;
                auto key = circulate_udu(r, s, k).canonical().adj;
                auto [pos, inserted] = next.emplace(std::move(key), c * f[k]);
                if (!inserted) pos->second += c * f[k];
            }
        }
        state = std::move(next);
        r += 1;
        s -= 1;
    }
    Rat rest(0);
    for (const auto& [rows, c] : state) rest += c;
    if (rest != 0) out.add_term(Partition::from_unsorted({r}), rest * Rat(factorial(r)));
    return out;
}

}  // namespace csfkit
