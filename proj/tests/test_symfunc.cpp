#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "csfkit/symfunc.hpp"
#include "test_support.hpp"

using namespace csfkit;
using testsupport::part;

namespace {

// Independent recursive count of partitions of n (no shared code with
// partitions_of).
long long count_partitions_brute(int remaining, int max_part) {
    if (remaining == 0) return 1;
    long long total = 0;
    for (int k = std::min(remaining, max_part); k >= 1; --k)
        total += count_partitions_brute(remaining - k, k);
    return total;
}

SymFunc m_term(std::vector<int> p, long num, long den = 1) {
    return SymFunc::term(Basis::M, part(std::move(p)), rat(num, den));
}

SymFunc e_term(std::vector<int> p, long num, long den = 1) {
    return SymFunc::term(Basis::E, part(std::move(p)), rat(num, den));
}

}  // namespace

TEST_CASE("partitions_of basics") {
    auto p0 = partitions_of(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());

    auto p4 = partitions_of(4);
    std::vector<std::vector<int>> expected{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    REQUIRE(p4.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(p4[i].parts() == expected[i]);

    CHECK(count_partitions_brute(7, 7) == 15);
    CHECK(partitions_of(7).size() == 15);
    for (int n = 0; n <= 10; ++n)
        CHECK(static_cast<long long>(partitions_of(n).size()) == partition_count(n));
}

TEST_CASE("partitions_of is reverse-lexicographic") {
    for (int n = 1; n <= 9; ++n) {
        auto ps = partitions_of(n);
        for (std::size_t i = 1; i < ps.size(); ++i)
            CHECK(std::lexicographical_compare(ps[i].parts().begin(), ps[i].parts().end(),
                                               ps[i - 1].parts().begin(), ps[i - 1].parts().end()));
    }
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK(Partition::from_unsorted({0, 2, 1, 2}).parts() == std::vector<int>{2, 2, 1});
}

TEST_CASE("sf_add") {
    CHECK(sf_add(m_term({1}, 1), m_term({1}, 1)) == m_term({1}, 2));
    CHECK(sf_add(e_term({2}, 1), e_term({2}, -1)).is_zero());
    SymFunc a = e_term({4, 2}, 2);
    SymFunc b = sf_add(e_term({4, 2}, 3), e_term({6}, 1));
    SymFunc sum = sf_add(a, b);
    CHECK(sum.coeff(part({4, 2})) == 5);
    CHECK(sum.coeff(part({6})) == 1);
}

TEST_CASE("sf_scale") {
    CHECK(sf_scale(0, m_term({2, 1}, 7)).is_zero());
    CHECK(sf_scale(rat(5, 12), e_term({4, 2}, 48)) == e_term({4, 2}, 20));
    CHECK(sf_scale(-1, e_term({1}, 1)) == e_term({1}, -1));
}

TEST_CASE("sf_mul agrees with the exponent-vector oracle") {
    // m[1] * m[1] = m[2] + 2 m[1,1], from (x1+x2)^2.
    SymFunc prod = sf_mul(m_term({1}, 1), m_term({1}, 1));
    CHECK(prod.coeff(part({2})) == 1);
    CHECK(prod.coeff(part({1, 1})) == 2);
    CHECK(prod.terms().size() == 2);

    SymFunc one = SymFunc::one(Basis::M);
    SymFunc f = sf_add(m_term({2, 1}, 3), m_term({1}, -2));
    CHECK(sf_mul(one, f) == f);

    // all pairs of small partitions against the direct polynomial product
    std::vector<Partition> pool;
    for (int n = 1; n <= 4; ++n)
        for (const auto& p : partitions_of(n)) pool.push_back(p);
    for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t j = i; j < pool.size(); ++j) {
            const Partition &a = pool[i], &b = pool[j];
            int nvars = a.length() + b.length();
            SymFunc got = sf_mul(SymFunc::term(Basis::M, a, 1), SymFunc::term(Basis::M, b, 1));
            testsupport::Poly want = testsupport::poly_mul(testsupport::monomial_poly(a, nvars),
                                                           testsupport::monomial_poly(b, nvars));
            CHECK(testsupport::poly_from_m(got, nvars) == want);
        }
    }
}

TEST_CASE("sf_mul is commutative and associative") {
    std::mt19937_64 rng(8080);
    auto random_symfunc = [&](int max_degree) {
        SymFunc f(Basis::M);
        int terms = 1 + static_cast<int>(rng() % 3);
        for (int t = 0; t < terms; ++t) {
            int deg = 1 + static_cast<int>(rng() % max_degree);
            auto parts = partitions_of(deg);
            long coeff = static_cast<long>(rng() % 9) - 4;
            f = sf_add(f, SymFunc::term(Basis::M, parts[rng() % parts.size()], coeff));
        }
        return f;
    };
    for (int trial = 0; trial < 40; ++trial) {
        SymFunc a = random_symfunc(3);
        SymFunc b = random_symfunc(3);
        CHECK(sf_mul(a, b) == sf_mul(b, a));
    }
    for (int trial = 0; trial < 15; ++trial) {
        SymFunc a = random_symfunc(2);
        SymFunc b = random_symfunc(2);
        SymFunc c = random_symfunc(2);
        CHECK(sf_mul(sf_mul(a, b), c) == sf_mul(a, sf_mul(b, c)));
    }
}

TEST_CASE("multiplicativity of e_lambda over its parts") {
    // e[2]*e[1] equals e[2,1] once both sides sit in the same basis.
    SymFunc lhs = sf_mul(e_term({2}, 1), e_term({1}, 1));
    CHECK(sf_equal(lhs, e_term({2, 1}, 1)));
    CHECK(m_to_e(lhs) == e_term({2, 1}, 1));
}

TEST_CASE("e_to_m") {
    CHECK(e_to_m(e_term({1}, 1)) == m_term({1}, 1));
    CHECK(e_to_m(e_term({2}, 1)) == m_term({1, 1}, 1));

    // e[2,1] via the independent polynomial route in 3 variables
    testsupport::Poly oracle = testsupport::poly_mul(testsupport::elementary_poly(2, 3),
                                                     testsupport::elementary_poly(1, 3));
    SymFunc got = e_to_m(e_term({2, 1}, 1));
    CHECK(got.coeff(part({2, 1})) == testsupport::poly_coeff_of_partition(oracle, part({2, 1}), 3));
    CHECK(got.coeff(part({1, 1, 1})) ==
          testsupport::poly_coeff_of_partition(oracle, part({1, 1, 1}), 3));
    CHECK(got.coeff(part({2, 1})) == 1);
    CHECK(got.coeff(part({1, 1, 1})) == 3);
    CHECK(got.terms().size() == 2);
}

TEST_CASE("m_to_e and roundtrips") {
    CHECK(m_to_e(m_term({1}, 1)) == e_term({1}, 1));
    CHECK(m_to_e(m_term({1, 1}, 2)) == e_term({2}, 2));
    CHECK(m_to_e(sf_add(m_term({2, 1}, 1), m_term({1, 1, 1}, 3))) == e_term({2, 1}, 1));

    for (int n = 0; n <= 8; ++n) {
        for (const auto& lam : partitions_of(n)) {
            SymFunc e = SymFunc::term(Basis::E, lam, 1);
            CHECK(m_to_e(e_to_m(e)) == e);
            SymFunc m = SymFunc::term(Basis::M, lam, 1);
            CHECK(e_to_m(m_to_e(m)) == m);
        }
    }
}

TEST_CASE("conversions preserve degree") {
    for (int n = 1; n <= 8; ++n) {
        for (const auto& lam : partitions_of(n)) {
            SymFunc m = e_to_m(SymFunc::term(Basis::E, lam, 1));
            for (const auto& [mu, c] : m.terms()) CHECK(mu.weight() == n);
        }
    }
}

TEST_CASE("coefficient of m_{1^n} in e_lambda matches the polynomial oracle") {
    for (int n = 1; n <= 7; ++n) {
        Partition ones(std::vector<int>(n, 1));
        for (const auto& lam : partitions_of(n)) {
            testsupport::Poly poly{{std::vector<int>(n, 0), Rat(1)}};
            for (int k : lam.parts())
                poly = testsupport::poly_mul(poly, testsupport::elementary_poly(k, n));
            Rat want = testsupport::poly_coeff_of_partition(poly, ones, n);
            CHECK(e_to_m(SymFunc::term(Basis::E, lam, 1)).coeff(ones) == want);
        }
    }
}

TEST_CASE("is_e_positive") {
    SymFunc sample = sf_add(sf_add(e_term({4, 2}, 20), e_term({5, 1}, 40)), e_term({6}, 180));
    CHECK(is_e_positive(sample));
    CHECK(is_e_positive(SymFunc::zero(Basis::E)));
    CHECK(is_e_positive(SymFunc::zero(Basis::M)));
    CHECK_FALSE(is_e_positive(sf_add(e_term({2}, 1), e_term({1, 1}, -1))));
}

TEST_CASE("cross-basis equality") {
    CHECK(sf_equal(e_term({2}, 1), m_term({1, 1}, 1)));
    CHECK_FALSE(sf_equal(e_term({2}, 1), m_term({2}, 1)));
}

TEST_CASE("text form") {
    CHECK(sf_to_text(SymFunc::zero(Basis::E)) == "0");
    CHECK(sf_to_text(SymFunc::one(Basis::M)) == "1*m[]");
    SymFunc sample = sf_add(sf_add(e_term({4, 2}, 20), e_term({5, 1}, 40)), e_term({6}, 180));
    CHECK(sf_to_text(sample) == "20*e[4,2] + 40*e[5,1] + 180*e[6]");
    SymFunc mixed = sf_add(m_term({1}, 2), m_term({2}, -3));
    CHECK(sf_to_text(mixed) == "2*m[1] - 3*m[2]");
    CHECK(sf_to_text(e_term({2}, -1, 2)) == "-1/2*e[2]");
}

TEST_CASE("no zero coefficients are stored") {
    SymFunc f = sf_add(m_term({2}, 5), m_term({2}, -5));
    CHECK(f.terms().empty());
    CHECK(m_term({3}, 0).is_zero());
}
