#include "csfkit/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace csfkit {

namespace {

constexpr int kMaxVertices = 16;

void check_size(int n) {
    if (n < 0 || n > kMaxVertices) throw std::out_of_range("Poset: vertex count out of range");
}

}  // namespace

void Poset::rebuild_down() {
    down_.assign(n_, 0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (less(i, j)) down_[j] |= 1u << i;
}

Poset Poset::from_relations(int n, std::span<const std::pair<int, int>> pairs) {
    check_size(n);
    std::vector<std::uint32_t> up(n, 0);
    for (auto [i, j] : pairs) {
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw std::invalid_argument("from_relations: vertex index out of range");
        if (i == j) throw std::invalid_argument("from_relations: cycle (i < i)");
        up[i] |= 1u << j;
    }
    // Closure: iterate until stable.
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < n; ++i) {
            std::uint32_t acc = up[i];
            std::uint32_t rest = up[i];
            while (rest) {
                int k = std::countr_zero(rest);
                rest &= rest - 1;
                acc |= up[k];
            }
            if (acc != up[i]) {
                up[i] = acc;
                changed = true;
            }
        }
    }
    for (int i = 0; i < n; ++i)
        if ((up[i] >> i) & 1u) throw std::invalid_argument("from_relations: cycle detected");
    return from_less_masks(n, std::move(up));
}

Poset Poset::from_less_masks(int n, std::vector<std::uint32_t> up) {
    check_size(n);
    if (static_cast<int>(up.size()) != n)
        throw std::invalid_argument("from_less_masks: row count mismatch");
    Poset p;
    p.n_ = n;
    p.up_ = std::move(up);
    const std::uint32_t full = p.full_mask();
    for (int i = 0; i < n; ++i) {
        if (p.up_[i] & ~full) throw std::invalid_argument("from_less_masks: stray bits");
        if ((p.up_[i] >> i) & 1u) throw std::invalid_argument("from_less_masks: not irreflexive");
    }
    for (int i = 0; i < n; ++i) {
        std::uint32_t rest = p.up_[i];
        while (rest) {
            int j = std::countr_zero(rest);
            rest &= rest - 1;
            if ((p.up_[j] >> i) & 1u)
                throw std::invalid_argument("from_less_masks: not antisymmetric");
            if (p.up_[j] & ~p.up_[i])
                throw std::invalid_argument("from_less_masks: not transitive");
        }
    }
    p.rebuild_down();
    return p;
}

Poset Poset::dual() const {
    Poset p;
    p.n_ = n_;
    p.up_ = down_;
    p.down_ = up_;
    return p;
}

Poset Poset::restricted(std::uint32_t vertex_mask) const {
    std::vector<int> verts;
    for (int v = 0; v < n_; ++v)
        if ((vertex_mask >> v) & 1u) verts.push_back(v);
    const int m = static_cast<int>(verts.size());
    Poset p;
    p.n_ = m;
    p.up_.assign(m, 0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (less(verts[a], verts[b])) p.up_[a] |= 1u << b;
    p.rebuild_down();
    return p;
}

Poset Poset::relabeled(const std::vector<int>& perm) const {
    Poset p;
    p.n_ = n_;
    p.up_.assign(n_, 0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (less(i, j)) p.up_[perm[i]] |= 1u << perm[j];
    p.rebuild_down();
    return p;
}

std::vector<std::pair<int, int>> Poset::relation_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (less(i, j)) out.emplace_back(i, j);
    return out;
}

Poset chain_poset(int n) {
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
    return Poset::from_relations(n, rel);
}

Poset antichain_poset(int n) { return Poset::from_relations(n, {}); }

Poset three_plus_one() {
    std::vector<std::pair<int, int>> rel{{0, 1}, {1, 2}};
    return Poset::from_relations(4, rel);
}

Poset two_plus_two() {
    std::vector<std::pair<int, int>> rel{{0, 1}, {2, 3}};
    return Poset::from_relations(4, rel);
}

Poset ranked_poset(const Partition& lambda) {
    int n = lambda.weight();
    std::vector<int> rank_of;
    for (int r = 0; r < lambda.length(); ++r)
        for (int k = 0; k < lambda.parts()[r]; ++k) rank_of.push_back(r);
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (rank_of[i] < rank_of[j]) rel.emplace_back(i, j);
    return Poset::from_relations(n, rel);
}

namespace {

bool extend_embedding(const Poset& host, const Poset& pattern, std::vector<int>& image,
                      std::uint32_t used) {
    const int k = static_cast<int>(image.size());
    if (k == pattern.size()) return true;
    for (int v = 0; v < host.size(); ++v) {
        if ((used >> v) & 1u) continue;
        bool ok = true;
        for (int a = 0; a < k; ++a) {
            if (pattern.less(a, k) != host.less(image[a], v) ||
                pattern.less(k, a) != host.less(v, image[a])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        image.push_back(v);
        if (extend_embedding(host, pattern, image, used | (1u << v))) return true;
        image.pop_back();
    }
    return false;
}

}  // namespace

bool contains_induced(const Poset& host, const Poset& pattern) {
    if (pattern.size() > host.size()) return false;
    std::vector<int> image;
    return extend_embedding(host, pattern, image, 0);
}

bool is_3plus1_free(const Poset& p) {
    const int n = p.size();
    const std::uint32_t full = p.full_mask();
    for (int y = 0; y < n; ++y) {
        std::uint32_t downs = p.down_mask(y);
        if (!downs || !p.up_mask(y)) continue;
        std::uint32_t closed_y = p.up_mask(y) | downs | (1u << y);
        std::uint32_t dd = downs;
        while (dd) {
            int x = std::countr_zero(dd);
            dd &= dd - 1;
            std::uint32_t closed_xy = closed_y | p.up_mask(x) | p.down_mask(x) | (1u << x);
            std::uint32_t uu = p.up_mask(y);
            while (uu) {
                int z = std::countr_zero(uu);
                uu &= uu - 1;
                std::uint32_t rel = closed_xy | p.up_mask(z) | p.down_mask(z) | (1u << z);
                if (full & ~rel) return false;
            }
        }
    }
    return true;
}

bool is_2plus2_free(const Poset& p) {
    const int n = p.size();
    const std::uint32_t full = p.full_mask();
    for (int x = 0; x < n; ++x) {
        std::uint32_t ups = p.up_mask(x);
        while (ups) {
            int y = std::countr_zero(ups);
            ups &= ups - 1;
            std::uint32_t rel = p.up_mask(x) | p.down_mask(x) | (1u << x) | p.up_mask(y) |
                                p.down_mask(y) | (1u << y);
            std::uint32_t rest = full & ~rel;
            std::uint32_t zz = rest;
            while (zz) {
                int z = std::countr_zero(zz);
                zz &= zz - 1;
                if (p.up_mask(z) & rest) return false;
            }
        }
    }
    return true;
}

bool is_3_free(const Poset& p) {
    for (int v = 0; v < p.size(); ++v)
        if (p.up_mask(v) && p.down_mask(v)) return false;
    return true;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> ordinal_split(const Poset& p) {
    const int n = p.size();
    const std::uint32_t full = p.full_mask();
    // Valid X: every x in X is below everything outside X.
    std::vector<std::uint32_t> valid;
    for (std::uint32_t x = 1; x < full; ++x) {
        std::uint32_t y = full & ~x;
        bool ok = true;
        std::uint32_t rest = x;
        while (rest && ok) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            ok = (p.up_mask(v) & y) == y;
        }
        if (ok) valid.push_back(x);
    }
    if (valid.empty()) return std::nullopt;
    auto as_list = [n](std::uint32_t mask) {
        std::vector<int> out;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1u) out.push_back(v);
        return out;
    };
    std::uint32_t best = valid[0];
    for (std::uint32_t m : valid) {
        int pb = std::popcount(best), pm = std::popcount(m);
        if (pm < pb || (pm == pb && as_list(m) < as_list(best))) best = m;
    }
    return std::make_pair(as_list(best), as_list(full & ~best));
}

// ---------------------------------------------------------------------------
// Canonical form: equitable refinement plus individualization, taking the
// minimum relation-matrix encoding over the leaves. Discovered automorphisms
// prune branches that only revisit already-explored subtrees.

namespace {

using Cells = std::vector<std::vector<int>>;

Cells refine(const Poset& p, Cells cells) {
    const int n = p.size();
    std::vector<int> color(n, 0);
    for (;;) {
        for (std::size_t c = 0; c < cells.size(); ++c)
            for (int v : cells[c]) color[v] = static_cast<int>(c);
        Cells next;
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            // Split by (sorted up-neighbour colours, sorted down-neighbour
            // colours); sub-cell order follows signature order, so the
            // resulting ordered partition is relabeling-invariant.
            std::vector<std::pair<std::vector<int>, int>> sigs;
            sigs.reserve(cell.size());
            for (int v : cell) {
                std::vector<int> sig;
                std::uint32_t uu = p.up_mask(v);
                while (uu) {
                    int u = std::countr_zero(uu);
                    uu &= uu - 1;
                    sig.push_back(color[u]);
                }
                std::sort(sig.begin(), sig.end());
                sig.push_back(-1);
                std::size_t mark = sig.size();
                std::uint32_t dd = p.down_mask(v);
                while (dd) {
                    int u = std::countr_zero(dd);
                    dd &= dd - 1;
                    sig.push_back(color[u]);
                }
                std::sort(sig.begin() + mark, sig.end());
                sigs.emplace_back(std::move(sig), v);
            }
            std::sort(sigs.begin(), sigs.end());
            std::size_t i = 0;
            while (i < sigs.size()) {
                std::size_t j = i;
                std::vector<int> group;
                while (j < sigs.size() && sigs[j].first == sigs[i].first)
                    group.push_back(sigs[j++].second);
                std::sort(group.begin(), group.end());
                next.push_back(std::move(group));
                i = j;
            }
        }
        if (next.size() == cells.size()) return next;
        cells = std::move(next);
    }
}

struct CanonSearch {
    const Poset& p;
    int n;
    std::vector<std::uint16_t> best_rows;
    std::vector<int> best_order;
    bool have_best = false;
    std::set<std::vector<int>> generators;

    explicit CanonSearch(const Poset& poset) : p(poset), n(poset.size()) {}

    std::vector<std::uint16_t> encode(const std::vector<int>& order) const {
        std::vector<std::uint16_t> rows(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (p.less(order[i], order[j])) rows[i] |= static_cast<std::uint16_t>(1u << j);
        return rows;
    }

    void leaf(const Cells& cells) {
        std::vector<int> order;
        order.reserve(n);
        for (const auto& c : cells) order.push_back(c[0]);
        auto rows = encode(order);
        if (!have_best || rows < best_rows) {
            best_rows = std::move(rows);
            best_order = std::move(order);
            have_best = true;
        } else if (rows == best_rows) {
            // order and best_order induce the same matrix: mapping
            // best_order[i] -> order[i] is an automorphism.
            std::vector<int> g(n);
            bool identity = true;
            for (int i = 0; i < n; ++i) {
                g[best_order[i]] = order[i];
                identity = identity && best_order[i] == order[i];
            }
            if (!identity && generators.size() < 64) {
                std::vector<int> ginv(n);
                for (int i = 0; i < n; ++i) ginv[g[i]] = i;
                generators.insert(g);
                generators.insert(ginv);
            }
        }
    }

    void search(Cells cells, std::vector<int>& base) {
        cells = refine(p, cells);
        std::size_t target = cells.size();
        std::size_t target_size = 0;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < target_size)) {
                target = c;
                target_size = cells[c].size();
            }
        }
        if (target == cells.size()) {
            leaf(cells);
            return;
        }
        std::vector<int> tried;
        for (int v : cells[target]) {
            bool skip = false;
            for (const auto& g : generators) {
                bool fixes_base = true;
                for (int b : base)
                    if (g[b] != b) {
                        fixes_base = false;
                        break;
                    }
                if (!fixes_base) continue;
                if (std::find(tried.begin(), tried.end(), g[v]) != tried.end()) {
                    skip = true;
                    break;
                }
            }
            tried.push_back(v);
            if (skip) continue;
            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c != target) {
                    child.push_back(cells[c]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                for (int w : cells[target])
                    if (w != v) rest.push_back(w);
                child.push_back(std::move(rest));
            }
            base.push_back(v);
            search(std::move(child), base);
            base.pop_back();
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const Poset& p) {
    check_size(p.size());
    CanonicalForm out;
    if (p.size() == 0) {
        out.key = std::string(1, '\0');
        out.poset = p;
        return out;
    }
    CanonSearch s(p);
    std::vector<int> all(p.size());
    for (int i = 0; i < p.size(); ++i) all[i] = i;
    std::vector<int> base;
    s.search({all}, base);

    out.key.push_back(static_cast<char>(p.size()));
    for (std::uint16_t row : s.best_rows) {
        out.key.push_back(static_cast<char>(row >> 8));
        out.key.push_back(static_cast<char>(row & 0xff));
    }
    // best_order[i] is the input vertex at canonical position i.
    std::vector<int> perm(p.size());
    for (int i = 0; i < p.size(); ++i) perm[s.best_order[i]] = i;
    out.poset = p.relabeled(perm);
    // Conjugate the discovered automorphisms into the canonical labeling so
    // they act on out.poset.
    for (const auto& g : s.generators) {
        std::vector<int> conj(p.size());
        for (int i = 0; i < p.size(); ++i) conj[i] = perm[g[s.best_order[i]]];
        out.generators.push_back(std::move(conj));
    }
    return out;
}

CanonicalKey canonical_key(const Poset& p) { return canonical_form(p).key; }

bool in_class(const Poset& p, PosetClass cls) {
    switch (cls) {
        case PosetClass::All: return true;
        case PosetClass::ThreePlusOneFree: return is_3plus1_free(p);
        case PosetClass::BothFree: return is_3plus1_free(p) && is_2plus2_free(p);
    }
    return false;
}

std::string class_name(PosetClass cls) {
    switch (cls) {
        case PosetClass::All: return "all";
        case PosetClass::ThreePlusOneFree: return "3p1free";
        case PosetClass::BothFree: return "both";
    }
    return "?";
}

namespace {

struct Rep {
    Poset poset;  // canonically labeled
    std::vector<std::vector<int>> generators;
};

// Down-closed vertex subsets of p.
std::vector<std::uint32_t> order_ideals(const Poset& p) {
    const std::uint32_t full = p.full_mask();
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        bool ok = true;
        std::uint32_t rest = mask;
        while (rest && ok) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            ok = (p.down_mask(v) & ~mask) == 0;
        }
        if (ok) out.push_back(mask);
        if (full == 0) break;
    }
    return out;
}

}  // namespace

std::vector<std::vector<Poset>> enumerate_posets_by_size(int max_n, PosetClass cls) {
    if (max_n < 1) throw std::out_of_range("enumerate_posets: n must be >= 1");
    const int cap = cls == PosetClass::All ? 7 : 10;
    if (max_n > cap) throw std::out_of_range("enumerate_posets: n exceeds supported bound");

    std::vector<std::vector<Rep>> levels(max_n + 1);
    {
        CanonicalForm cf = canonical_form(antichain_poset(1));
        levels[1].push_back({cf.poset, cf.generators});
    }
    for (int m = 2; m <= max_n; ++m) {
        std::map<CanonicalKey, Rep> found;
        for (const Rep& rep : levels[m - 1]) {
            const Poset& parent = rep.poset;
            std::vector<std::uint32_t> ideals = order_ideals(parent);
            // Ideals in one orbit under the parent's automorphisms give
            // isomorphic extensions; keep one per orbit.
            std::set<std::uint32_t> seen;
            for (std::uint32_t ideal : ideals) {
                if (seen.count(ideal)) continue;
                // BFS orbit closure over the discovered generators.
                std::vector<std::uint32_t> queue{ideal};
                seen.insert(ideal);
                while (!queue.empty()) {
                    std::uint32_t cur = queue.back();
                    queue.pop_back();
                    for (const auto& g : rep.generators) {
                        std::uint32_t img = 0;
                        std::uint32_t rest = cur;
                        while (rest) {
                            int v = std::countr_zero(rest);
                            rest &= rest - 1;
                            img |= 1u << g[v];
                        }
                        if (!seen.count(img)) {
                            seen.insert(img);
                            queue.push_back(img);
                        }
                    }
                }

                // New maximal vertex above the ideal.
                std::vector<std::uint32_t> up(m, 0);
                for (int v = 0; v < m - 1; ++v) {
                    up[v] = parent.up_mask(v);
                    if ((ideal >> v) & 1u) up[v] |= 1u << (m - 1);
                }
                Poset child = Poset::from_less_masks(m, std::move(up));
                if (!in_class(child, cls)) continue;
                CanonicalForm cf = canonical_form(child);
                found.emplace(cf.key, Rep{cf.poset, cf.generators});
            }
        }
        levels[m].reserve(found.size());
        for (auto& [key, rep] : found) levels[m].push_back(std::move(rep));
    }

    std::vector<std::vector<Poset>> out(max_n + 1);
    for (int m = 1; m <= max_n; ++m) {
        out[m].reserve(levels[m].size());
        for (const Rep& r : levels[m]) out[m].push_back(r.poset);
    }
    return out;
}

std::vector<Poset> enumerate_posets(int n, PosetClass cls) {
    return enumerate_posets_by_size(n, cls).back();
}

}  // namespace csfkit
