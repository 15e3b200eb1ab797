// Acceptance suite: the full battery of exact checks, one line per criterion.
// Exit code 0 only when every criterion passes. All comparisons are exact
// rational equalities; there are no tolerances anywhere.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "csfkit/chromatic.hpp"
#include "csfkit/io_json.hpp"
#include "csfkit/modular.hpp"
#include "csfkit/poset.hpp"
#include "csfkit/symfunc.hpp"
#include "csfkit/verify.hpp"

using namespace csfkit;

namespace {

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> check;
};

bool layered_poset_formula(std::string& detail) {
    for (int n = 0; n <= 6; ++n) {
        for (const Partition& lam : partitions_of(n)) {
            SymFunc got = m_to_e(csf_poset(ranked_poset(lam)));
            Rat scale(1);
            for (int li : lam.parts()) scale *= Rat(factorial(li));
            SymFunc want = sf_scale(scale, SymFunc::term(Basis::E, lam, 1));
            if (!(got == want)) {
                detail = "mismatch at lambda = " + lam.to_string();
                return false;
            }
        }
    }
    return true;
}

bool class_counts(std::string& detail) {
    Table1 t = table1_counts(7);
    std::vector<long> all{0, 1, 2, 5, 16, 63, 318, 2045};
    std::vector<long> free31{0, 1, 2, 5, 15, 49, 173, 639};
    if (t.all != all) {
        detail = "all-posets row mismatch";
        return false;
    }
    if (t.three_plus_one_free != free31) {
        detail = "pattern-free row mismatch";
        return false;
    }
    std::vector<long> catalan{0, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    auto by_size = enumerate_posets_by_size(10, PosetClass::BothFree);
    for (int n = 1; n <= 10; ++n) {
        if (static_cast<long>(by_size[n].size()) != catalan[n]) {
            detail = "doubly-free count at n=" + std::to_string(n) + " is " +
                     std::to_string(by_size[n].size()) + ", want " + std::to_string(catalan[n]);
            return false;
        }
    }
    return true;
}

bool epositivity_sweep(std::string& detail) {
    for (int n = 1; n <= 7; ++n) {
        VerificationReport r = check_epositivity(n, PosetClass::ThreePlusOneFree);
        if (!r.pass()) {
            detail = "counterexample at n=" + std::to_string(n) + ": " +
                     r.counterexamples[0].e_expansion;
            return false;
        }
    }
    VerificationReport all4 = check_epositivity(4, PosetClass::All);
    if (all4.checked != 16 || all4.counterexamples.size() != 1) {
        detail = "size-4 sweep should find exactly one counterexample";
        return false;
    }
    Poset cx = poset_from_json(nlohmann::json::parse(all4.counterexamples[0].poset_json));
    if (canonical_key(cx) != canonical_key(three_plus_one())) {
        detail = "the size-4 counterexample is not the chain-plus-point poset";
        return false;
    }
    return true;
}

bool modular_law(std::string& detail) {
    VerificationReport r = verify_modular_random(500, 10, 20260808);
    if (r.checked != 500 || !r.pass()) {
        detail = r.counterexamples.empty() ? "sample count mismatch"
                                           : r.counterexamples[0].note;
        return false;
    }
    return true;
}

bool dual_bases(std::string& detail) {
    for (int r = 0; r <= 5; ++r) {
        for (int s = 0; s <= r; ++s) {
            if (r + s == 0) continue;
            for (int k = 0; k <= s; ++k) {
                FunctionalVector f = functionals(udu_graph(r, s, k));
                for (int j = 0; j <= s; ++j) {
                    if (f[j] != (j == k ? 1 : 0)) {
                        detail = "udu duality fails at r=" + std::to_string(r) +
                                 " s=" + std::to_string(s) + " k=" + std::to_string(k);
                        return false;
                    }
                }
            }
        }
    }
    for (int s = 0; s <= 5; ++s) {
        for (int r = 0; r <= s; ++r) {
            if (r + s == 0) continue;
            for (int k = 0; k <= r; ++k) {
                FunctionalVector f = functionals(dud_graph(r, s, k));
                for (int j = 0; j <= r; ++j) {
                    if (f[j] != (j == k ? 1 : 0)) {
                        detail = "dud duality fails at r=" + std::to_string(r) +
                                 " s=" + std::to_string(s) + " k=" + std::to_string(k);
                        return false;
                    }
                }
            }
        }
    }
    for (int total = 1; total <= 7; ++total) {
        for (int r = 0; r <= total; ++r) {
            for (const BicolouredGraph& g : canonical_graphs(r, total - r)) {
                FunctionalVector f = functionals(g);
                Rat sum(0);
                for (const Rat& q : f) {
                    if (q < 0) {
                        detail = "negative functional value";
                        return false;
                    }
                    sum += q;
                }
                if (sum != 1) {
                    detail = "functional values do not sum to 1 on " + graph_to_literal(g);
                    return false;
                }
            }
        }
    }
    return true;
}

bool worked_example(std::string& detail) {
    BicolouredGraph g = parse_graph_literal("4x2:1-1,2-1,1-2,3-2,4-2");
    FunctionalVector f = functionals(g);
    if (!(f == FunctionalVector{rat(2, 12), rat(5, 12), rat(5, 12)})) {
        detail = "functional vector mismatch";
        return false;
    }
    SymFunc expansion = three_free_e_expansion(g);
    if (sf_to_text(expansion) != "20*e[4,2] + 40*e[5,1] + 180*e[6]") {
        detail = "expansion is " + sf_to_text(expansion);
        return false;
    }
    SymFunc direct = m_to_e(csf_listing(PartListing({graph_part(1, g)})));
    if (!(expansion == direct)) {
        detail = "staged expansion disagrees with the direct csf";
        return false;
    }
    return true;
}

bool listing_reduction_sweep(std::string& detail) {
    for (int n = 1; n <= 6; ++n) {
        VerificationReport r = sweep_listing_reduction(n);
        if (!r.pass()) {
            detail = "n=" + std::to_string(n) + ": " + r.counterexamples[0].note;
            return false;
        }
    }
    return true;
}

bool staged_expansion_sweep(std::string& detail) {
    VerificationReport r = sweep_staged_expansion(7);
    if (!r.pass()) {
        detail = r.counterexamples[0].note;
        return false;
    }
    return true;
}

bool property_suites(std::string& detail) {
    // rewrite invariance of the csf on random listings
    SampleRng rng(424242);
    int done = 0;
    while (done < 500) {
        PartListing l = random_listing(rng, 8, 4);
        if (l.empty()) continue;
        ++done;
        SymFunc f = csf_listing(l);
        if (!(csf_listing(peel(l)) == f)) {
            detail = "peel changed the csf of " + serialize_listing(l);
            return false;
        }
        if (l.parts()[0].min_level() >= 2 && !(csf_listing(circulate(l)) == f)) {
            detail = "circulation changed the csf of " + serialize_listing(l);
            return false;
        }
        for (int i = 0; i + 1 < l.size(); ++i) {
            const auto& parts = l.parts();
            bool apart = parts[i + 1].min_level() - parts[i].max_level() >= 2 ||
                         parts[i].min_level() - parts[i + 1].max_level() >= 2;
            if (!apart) continue;
            if (!(csf_listing(commute(l, i)) == f)) {
                detail = "commutation changed the csf of " + serialize_listing(l);
                return false;
            }
            break;
        }
        int hi = 0, lo_level = l.parts()[0].min_level(), hi_level = l.parts()[0].max_level();
        while (hi + 1 < l.size()) {
            int nlo = std::min(lo_level, l.parts()[hi + 1].min_level());
            int nhi = std::max(hi_level, l.parts()[hi + 1].max_level());
            if (nhi - nlo >= 2) break;
            lo_level = nlo;
            hi_level = nhi;
            ++hi;
        }
        if (!(csf_listing(combine(l, 0, hi)) == f)) {
            detail = "combination changed the csf of " + serialize_listing(l);
            return false;
        }
    }

    for (int n = 1; n <= 6; ++n) {
        for (const Poset& p : enumerate_posets(n, PosetClass::All)) {
            SymFunc f = csf_poset(p);
            if (!(f == csf_poset(p.dual()))) {
                detail = "duality invariance fails at n=" + std::to_string(n);
                return false;
            }
            if (!(f == csf_graph(incomparability_graph(p)))) {
                detail = "incomparability-graph equality fails at n=" + std::to_string(n);
                return false;
            }
            auto split = ordinal_split(p);
            if (split) {
                std::uint32_t xmask = 0;
                for (int v : split->first) xmask |= 1u << v;
                SymFunc prod = sf_mul(csf_poset(p.restricted(xmask)),
                                      csf_poset(p.restricted(p.full_mask() & ~xmask)));
                if (!(f == prod)) {
                    detail = "ordinal-split multiplicativity fails at n=" + std::to_string(n);
                    return false;
                }
            }
        }
    }

    for (int n = 0; n <= 8; ++n) {
        for (const Partition& lam : partitions_of(n)) {
            SymFunc e = SymFunc::term(Basis::E, lam, 1);
            SymFunc m = SymFunc::term(Basis::M, lam, 1);
            if (!(m_to_e(e_to_m(e)) == e) || !(e_to_m(m_to_e(m)) == m)) {
                detail = "basis roundtrip fails at " + lam.to_string();
                return false;
            }
        }
    }
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {"layered posets expand to scaled elementary terms (weights <= 6)", layered_poset_formula},
        {"class counts match through the supported sizes", class_counts},
        {"e-positivity sweep (pattern-free to 7; unique failure among all size-4)",
         epositivity_sweep},
        {"modular law holds on 500 seeded random contexts (size <= 10)", modular_law},
        {"dual bases: orthogonality to 5, stochastic functionals to 7", dual_bases},
        {"worked 4x2 example: functionals and e-expansion", worked_example},
        {"reduction sweep: convex vertex-only combinations, csf preserved (n <= 6)",
         listing_reduction_sweep},
        {"staged e-expansion nonnegative and exact for all graphs (r+s <= 7)", staged_expansion_sweep},
        {"property suites: rewrites, duality, splits, graph route, basis roundtrips",
         property_suites},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%zu/%zu] %s  %s (%.2fs)%s%s\n", i + 1, criteria.size(),
                    ok ? "PASS" : "FAIL", criteria[i].name.c_str(), secs,
                    detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
