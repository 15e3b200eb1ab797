#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "json.hpp"

#include "csfkit/chromatic.hpp"
#include "csfkit/io_json.hpp"
#include "csfkit/verify.hpp"

using namespace csfkit;

namespace {

std::set<CanonicalKey> counterexample_keys(const VerificationReport& r) {
    std::set<CanonicalKey> keys;
    for (const auto& cx : r.counterexamples)
        keys.insert(canonical_key(poset_from_json(nlohmann::json::parse(cx.poset_json))));
    return keys;
}

}  // namespace

TEST_CASE("check_epositivity finds the unique size-4 counterexample") {
    VerificationReport r = check_epositivity(4, PosetClass::All);
    CHECK(r.checked == 16);
    REQUIRE(r.counterexamples.size() == 1);
    Poset cx = poset_from_json(nlohmann::json::parse(r.counterexamples[0].poset_json));
    CHECK(canonical_key(cx) == canonical_key(three_plus_one()));
    CHECK_FALSE(r.pass());
}

TEST_CASE("check_epositivity clean classes") {
    VerificationReport r5 = check_epositivity(5, PosetClass::ThreePlusOneFree);
    CHECK(r5.checked == 49);
    CHECK(r5.pass());

    VerificationReport r1 = check_epositivity(1, PosetClass::All, kReduceSplit);
    CHECK(r1.checked == 1);
    CHECK(r1.pass());
}

TEST_CASE("the udu/dud reduction flag is rejected for poset enumeration") {
    CHECK_THROWS_AS(check_epositivity(4, PosetClass::All, kReduceUduDud), std::invalid_argument);
}

TEST_CASE("reductions never change the verdict (sizes up to 6)") {
    for (int n = 2; n <= 6; ++n) {
        VerificationReport full = check_epositivity(n, PosetClass::All);
        std::set<CanonicalKey> ground = counterexample_keys(full);

        // dual reduction: expanding by duals recovers the full set
        VerificationReport dual = check_epositivity(n, PosetClass::All, kReduceDual);
        std::set<CanonicalKey> expanded;
        for (const auto& cx : dual.counterexamples) {
            Poset p = poset_from_json(nlohmann::json::parse(cx.poset_json));
            expanded.insert(canonical_key(p));
            expanded.insert(canonical_key(p.dual()));
        }
        CHECK(expanded == ground);

        // split reduction: a skipped poset is non-positive exactly when one of
        // its ordinal factors is
        VerificationReport split = check_epositivity(n, PosetClass::All, kReduceSplit);
        std::set<CanonicalKey> from_split = counterexample_keys(split);
        for (const Poset& p : enumerate_posets(n, PosetClass::All)) {
            auto s = ordinal_split(p);
            if (!s) {
                // checked directly by the reduced run
                CHECK(from_split.count(canonical_key(p)) == ground.count(canonical_key(p)));
                continue;
            }
            std::uint32_t xmask = 0;
            for (int v : s->first) xmask |= 1u << v;
            bool factors_positive =
                is_e_positive(csf_poset(p.restricted(xmask))) &&
                is_e_positive(csf_poset(p.restricted(p.full_mask() & ~xmask)));
            CHECK(is_e_positive(csf_poset(p)) == factors_positive);
        }
    }
}

TEST_CASE("deterministic reports regardless of worker count") {
    VerificationReport a = check_epositivity(5, PosetClass::All, kReduceNone, 1);
    VerificationReport b = check_epositivity(5, PosetClass::All, kReduceNone, 3);
    CHECK(a.checked == b.checked);
    REQUIRE(a.counterexamples.size() == b.counterexamples.size());
    for (std::size_t i = 0; i < a.counterexamples.size(); ++i) {
        CHECK(a.counterexamples[i].poset_json == b.counterexamples[i].poset_json);
        CHECK(a.counterexamples[i].e_expansion == b.counterexamples[i].e_expansion);
    }
}

TEST_CASE("table1_counts") {
    Table1 t = table1_counts(5);
    CHECK(t.all == std::vector<long>{0, 1, 2, 5, 16, 63});
    CHECK(t.three_plus_one_free == std::vector<long>{0, 1, 2, 5, 15, 49});
    CHECK(t.both_free == std::vector<long>{0, 1, 2, 5, 14, 42});
    CHECK_THROWS_AS(table1_counts(11), std::out_of_range);
    CHECK_THROWS_AS(table1_counts(0), std::out_of_range);

    Table1 t8 = table1_counts(8);
    CHECK(t8.all.size() == 8);  // capped at 7 entries plus the unused slot
    CHECK(t8.all[7] == 2045);
    CHECK(t8.three_plus_one_free[8] == 2469);
    CHECK(t8.both_free[8] == 1430);
}

TEST_CASE("full filtered rows through size 10") {
    Table1 t = table1_counts(10);
    CHECK(t.all == std::vector<long>{0, 1, 2, 5, 16, 63, 318, 2045});
    CHECK(t.three_plus_one_free ==
          std::vector<long>{0, 1, 2, 5, 15, 49, 173, 639, 2469, 9997, 43109});
    CHECK(t.both_free ==
          std::vector<long>{0, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796});
}

TEST_CASE("pattern-free posets through size 8 are e-positive") {
    VerificationReport r = check_epositivity(8, PosetClass::ThreePlusOneFree);
    CHECK(r.checked == 2469);
    CHECK(r.pass());
    CHECK_THROWS_AS(check_epositivity(9, PosetClass::ThreePlusOneFree), std::out_of_range);
}

TEST_CASE("sweep_listing_reduction small sizes") {
    VerificationReport r1 = sweep_listing_reduction(1);
    CHECK(r1.checked == 1);
    CHECK(r1.pass());

    VerificationReport r4 = sweep_listing_reduction(4);
    CHECK(r4.checked == 15);
    CHECK(r4.pass());
}

TEST_CASE("sweep_staged_expansion small sizes") {
    VerificationReport r = sweep_staged_expansion(4);
    CHECK(r.pass());
    CHECK(r.checked > 0);
    CHECK_THROWS_AS(sweep_staged_expansion(9), std::out_of_range);
}

TEST_CASE("report JSON shape") {
    VerificationReport r = check_epositivity(4, PosetClass::All);
    nlohmann::json j = nlohmann::json::parse(report_to_json_string(r));
    CHECK(j.at("class") == "all");
    CHECK(j.at("n") == 4);
    CHECK(j.at("checked") == 16);
    CHECK(j.at("counterexamples").size() == 1);
    CHECK(j.at("seconds").is_number());
    CHECK(j.at("counterexamples")[0].contains("poset"));
    CHECK(j.at("counterexamples")[0].contains("e_expansion"));
}

TEST_CASE("verify_modular_random bounds") {
    CHECK_THROWS_AS(verify_modular_random(1, 2, 0), std::out_of_range);
    VerificationReport r = verify_modular_random(25, 8, 42);
    CHECK(r.checked == 25);
    CHECK(r.pass());
}

TEST_CASE("for_each_listing basics") {
    int count = 0;
    for_each_listing(0, false, [&](const PartListing& l) {
        CHECK(l.empty());
        ++count;
        return true;
    });
    CHECK(count == 1);

    // early stop is honoured
    count = 0;
    for_each_listing(4, false, [&](const PartListing&) { return ++count < 3; });
    CHECK(count == 3);

    // all produced listings are in normal form with contiguous levels
    for_each_listing(4, true, [&](const PartListing& l) {
        CHECK(l.vertex_count() == 4);
        CHECK(l.min_level() == 1);
        for (int i = 0; i + 1 < l.size(); ++i)
            CHECK(l.parts()[i + 1].max_level() >= l.parts()[i].min_level() - 1);
        return true;
    });
}
