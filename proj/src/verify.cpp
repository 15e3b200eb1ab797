#include "csfkit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <stdexcept>

#include "json.hpp"

#include "csfkit/chromatic.hpp"
#include "csfkit/io_json.hpp"
#include "csfkit/modular.hpp"
#include "csfkit/parallel.hpp"

namespace csfkit {

using nlohmann::json;

std::string report_to_json_string(const VerificationReport& report) {
    json cxs = json::array();
    for (const auto& cx : report.counterexamples) {
        json item{{"poset", json::parse(cx.poset_json)}, {"e_expansion", cx.e_expansion}};
        if (!cx.note.empty()) item["note"] = cx.note;
        cxs.push_back(std::move(item));
    }
    json j{{"class", report.label},
           {"n", report.n},
           {"checked", report.checked},
           {"counterexamples", cxs},
           {"seconds", report.seconds}};
    return j.dump();
}

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

}  // namespace

VerificationReport check_epositivity(int n, PosetClass cls, unsigned reductions, int jobs) {
    Timer timer;
    if (reductions & kReduceUduDud)
        throw std::invalid_argument(
            "check_epositivity: the udu/dud reduction applies only to listing-based "
            "enumeration and is not available here");
    if (cls == PosetClass::ThreePlusOneFree && n > 8)
        throw std::out_of_range("check_epositivity: pattern-free sweep supports n <= 8");
    std::vector<Poset> reps = enumerate_posets(n, cls);

    std::vector<Poset> work;
    for (const Poset& p : reps) {
        if ((reductions & kReduceDual) && canonical_key(p.dual()) < canonical_key(p)) continue;
        if ((reductions & kReduceSplit) && ordinal_split(p)) continue;
        work.push_back(p);
    }

    std::vector<std::optional<Counterexample>> results(work.size());
    parallel_for(jobs, work.size(), [&](std::size_t i) {
        SymFunc e = to_basis(csf_poset_cached(work[i]), Basis::E);
        if (!is_e_positive(e))
            results[i] = Counterexample{poset_to_json(work[i]).dump(), sf_to_text(e), ""};
    });

    VerificationReport report;
    report.label = class_name(cls);
    report.n = n;
    report.checked = static_cast<long>(work.size());
    for (auto& r : results)
        if (r) report.counterexamples.push_back(std::move(*r));
    report.seconds = timer.seconds();
    return report;
}

PartListing random_listing(SampleRng& rng, int max_vertices, int max_level, bool with_graphs) {
    std::vector<Part> parts;
    int budget = max_vertices;
    while (budget > 0) {
        if (rng.next(4) == 0) break;
        int level = 1 + static_cast<int>(rng.next(max_level));
        if (with_graphs && budget >= 3 && rng.next(4) == 0) {
            int r = 1 + static_cast<int>(rng.next(2));
            int s = 1 + static_cast<int>(rng.next(2));
            if (r + s <= budget) {
                BicolouredGraph g(r, s);
                for (int d = 0; d < r; ++d)
                    g.adj[d] = static_cast<std::uint32_t>(rng.next(1u << s));
                parts.push_back(graph_part(level, std::move(g)));
                budget -= r + s;
                continue;
            }
        }
        parts.push_back(vertex_part(level));
        budget -= 1;
    }
    return PartListing(std::move(parts));
}

VerificationReport verify_modular_random(long samples, int max_size, std::uint64_t seed) {
    Timer timer;
    if (max_size < 3 || max_size > 12)
        throw std::out_of_range("verify_modular_random: max_size must be in [3, 12]");
    VerificationReport report;
    report.label = "modular";
    report.n = max_size;
    SampleRng rng(seed);
    for (long i = 0; i < samples; ++i) {
        int r, s;
        do {
            r = 1 + static_cast<int>(rng.next(3));
            s = 1 + static_cast<int>(rng.next(3));
        } while (r + s > max_size || r * s < 2);
        BicolouredGraph g(r, s);
        for (int d = 0; d < r; ++d) g.adj[d] = static_cast<std::uint32_t>(rng.next(1u << s));
        // Force a shared-endpoint edge pair.
        Edge e1, e2;
        if (s >= 2 && (r < 2 || rng.next(2) == 0)) {
            int d = static_cast<int>(rng.next(r));
            int u1 = static_cast<int>(rng.next(s));
            int u2 = static_cast<int>(rng.next(s - 1));
            if (u2 >= u1) ++u2;
            e1 = {d, u1};
            e2 = {d, u2};
        } else {
            int u = static_cast<int>(rng.next(s));
            int d1 = static_cast<int>(rng.next(r));
            int d2 = static_cast<int>(rng.next(r - 1));
            if (d2 >= d1) ++d2;
            e1 = {d1, u};
            e2 = {d2, u};
        }
        g.set_edge(e1.first, e1.second, true);
        g.set_edge(e2.first, e2.second, true);

        int rest = max_size - r - s;
        int level = 1 + static_cast<int>(rng.next(3));
        PartListing prefix = random_listing(rng, static_cast<int>(rng.next(rest + 1)), 4);
        PartListing suffix = random_listing(rng, rest - prefix.vertex_count(), 4);
        ++report.checked;
        if (!verify_modular(prefix, level, g, suffix, e1, e2)) {
            std::vector<Part> parts = prefix.parts();
            parts.push_back(graph_part(level, g));
            parts.insert(parts.end(), suffix.parts().begin(), suffix.parts().end());
            PartListing whole((std::move(parts)));
            report.counterexamples.push_back(Counterexample{
                poset_to_json(listing_to_poset(whole)).dump(), "",
                "sample " + std::to_string(i) + ": " + serialize_listing(whole) + " edges " +
                    graph_to_literal(g)});
        }
    }
    report.seconds = timer.seconds();
    return report;
}

Table1 table1_counts(int max_n) {
    if (max_n < 1 || max_n > 10) throw std::out_of_range("table1_counts: max_n out of range");
    Table1 t;
    auto fill = [](std::vector<long>& row, PosetClass cls, int up_to) {
        auto by_size = enumerate_posets_by_size(up_to, cls);
        row.assign(up_to + 1, 0);
        for (int k = 1; k <= up_to; ++k) row[k] = static_cast<long>(by_size[k].size());
    };
    fill(t.all, PosetClass::All, std::min(max_n, 7));
    fill(t.three_plus_one_free, PosetClass::ThreePlusOneFree, max_n);
    fill(t.both_free, PosetClass::BothFree, max_n);
    return t;
}

// ---------------------------------------------------------------------------
// Listing enumeration in commutation normal form.

namespace {

struct ListingEnum {
    int n;
    bool with_graphs;
    const std::function<bool(const PartListing&)>& cb;
    std::vector<Part> parts;
    bool stopped = false;

    bool level_set_ok() const {
        std::uint32_t levels = 0;
        for (const Part& p : parts) {
            levels |= 1u << p.min_level();
            levels |= 1u << p.max_level();
        }
        if (!(levels & 2u)) return false;  // level 1 occupied
        levels >>= 1;
        return (levels & (levels + 1)) == 0;  // contiguous from 1
    }

    // Normal form: the next part may not sit entirely two or more levels
    // below the previous part (those pairs commute; keep the raised one last).
    bool drop_ok(const Part& next) const {
        if (parts.empty()) return true;
        return next.max_level() >= parts.back().min_level() - 1;
    }

    void emit() {
        if (!level_set_ok()) return;
        if (!cb(PartListing(parts))) stopped = true;
    }

    void recurse(int budget) {
        if (stopped) return;
        if (budget == 0) {
            emit();
            return;
        }
        for (int level = 1; level <= n && !stopped; ++level) {
            Part v = vertex_part(level);
            if (!drop_ok(v)) continue;
            parts.push_back(v);
            recurse(budget - 1);
            parts.pop_back();
        }
        if (!with_graphs) return;
        for (int r = 1; r < budget && !stopped; ++r) {
            for (int s = 1; r + s <= budget && !stopped; ++s) {
                for (int level = 1; level + 1 <= n && !stopped; ++level) {
                    Part shape;
                    shape.level = level;
                    shape.graph = BicolouredGraph(r, s);
                    if (!drop_ok(shape)) continue;
                    for (const BicolouredGraph& g : canonical_graphs(r, s)) {
                        parts.push_back(graph_part(level, g));
                        recurse(budget - r - s);
                        parts.pop_back();
                        if (stopped) break;
                    }
                }
            }
        }
    }
};

}  // namespace

void for_each_listing(int n, bool with_graphs, const std::function<bool(const PartListing&)>& cb) {
    if (n < 0) throw std::invalid_argument("for_each_listing: negative vertex count");
    if (n == 0) {
        cb(PartListing());
        return;
    }
    ListingEnum e{n, with_graphs, cb, {}, false};
    e.recurse(n);
}

std::set<CanonicalKey> vertex_only_listing_classes(int n) {
    std::set<CanonicalKey> keys;
    for_each_listing(n, false, [&](const PartListing& listing) {
        keys.insert(canonical_key(listing_to_poset(listing)));
        return true;
    });
    return keys;
}

std::map<CanonicalKey, PartListing> listings_for_three_plus_one_free(int n) {
    std::set<CanonicalKey> wanted;
    for (const Poset& p : enumerate_posets(n, PosetClass::ThreePlusOneFree))
        wanted.insert(canonical_key(p));
    std::map<CanonicalKey, PartListing> cover;
    for_each_listing(n, true, [&](const PartListing& listing) {
        CanonicalKey key = canonical_key(listing_to_poset(listing));
        if (wanted.count(key) && !cover.count(key)) cover.emplace(std::move(key), listing);
        return cover.size() < wanted.size();
    });
    return cover;
}

VerificationReport sweep_listing_reduction(int n) {
    Timer timer;
    if (n < 1 || n > 8) throw std::out_of_range("sweep_listing_reduction: n out of range");
    std::vector<Poset> reps = enumerate_posets(n, PosetClass::ThreePlusOneFree);
    std::map<CanonicalKey, PartListing> cover = listings_for_three_plus_one_free(n);

    VerificationReport report;
    report.label = "listing-reduction";
    report.n = n;
    for (const Poset& p : reps) {
        ++report.checked;
        auto fail = [&](const std::string& note) {
            report.counterexamples.push_back(
                Counterexample{poset_to_json(p).dump(), "", note});
        };
        auto it = cover.find(canonical_key(p));
        if (it == cover.end()) {
            fail("no listing found");
            continue;
        }
        const PartListing& listing = it->second;
        LinListing reduced = reduce_listing(listing);
        Rat total(0);
        bool ok = true;
        for (const auto& [c, term] : reduced.terms()) {
            total += c;
            if (c <= 0) {
                fail("negative coefficient in reduction");
                ok = false;
                break;
            }
            for (const Part& part : term.parts())
                if (!part.is_vertex()) {
                    fail("graph part survived reduction");
                    ok = false;
                    break;
                }
            if (!ok) break;
            Poset q = listing_to_poset(term);
            if (!is_3plus1_free(q) || !is_2plus2_free(q)) {
                fail("reduced term not both-free");
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        if (total != 1) {
            fail("coefficients do not sum to 1");
            continue;
        }
        if (!sf_equal(csf_lin(reduced), csf_listing(listing))) fail("csf not preserved");
    }
    report.seconds = timer.seconds();
    return report;
}

VerificationReport sweep_staged_expansion(int max_rs) {
    Timer timer;
    if (max_rs < 1 || max_rs > 8) throw std::out_of_range("sweep_staged_expansion: max_rs out of range");
    VerificationReport report;
    report.label = "staged-expansion";
    report.n = max_rs;
    for (int total = 1; total <= max_rs; ++total) {
        for (int r = 0; r <= total; ++r) {
            int s = total - r;
            for (const BicolouredGraph& g : canonical_graphs(r, s)) {
                ++report.checked;
                SymFunc expansion = three_free_e_expansion(g);
                bool nonneg = true;
                for (const auto& [p, c] : expansion.terms())
                    if (c < 0) nonneg = false;
                PartListing listing({graph_part(1, g)});
                SymFunc direct = m_to_e(csf_listing(listing));
                if (!nonneg || !(expansion == direct)) {
                    report.counterexamples.push_back(
                        Counterexample{poset_to_json(listing_to_poset(listing)).dump(),
                                       sf_to_text(expansion),
                                       "graph " + graph_to_literal(g)});
                }
            }
        }
    }
    report.seconds = timer.seconds();
    return report;
}

}  // namespace csfkit
