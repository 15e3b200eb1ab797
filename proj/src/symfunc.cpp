#include "csfkit/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace csfkit {

SymFunc SymFunc::term(Basis b, const Partition& p, const Rat& c) {
    SymFunc f(b);
    f.add_term(p, c);
    return f;
}

Rat SymFunc::coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rat(0) : it->second;
}

void SymFunc::add_term(const Partition& p, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void SymFunc::add_scaled(const SymFunc& other, const Rat& c) {
    if (other.basis_ != basis_) throw std::invalid_argument("add_scaled: basis mismatch");
    for (const auto& [p, q] : other.terms_) add_term(p, c * q);
}

SymFunc sf_add(const SymFunc& a, const SymFunc& b) {
    SymFunc out = a;
    out.add_scaled(to_basis(b, a.basis()), 1);
    return out;
}

SymFunc sf_scale(const Rat& c, const SymFunc& a) {
    SymFunc out(a.basis());
    if (c == 0) return out;
    out.add_scaled(a, c);
    return out;
}

namespace {

// Coefficient table for m_a * m_b: for each partition nu of |a|+|b|, the
// number of ways to write the exponent vector (nu_1..nu_L) as alpha + beta
// with alpha a rearrangement of a (zero-padded) and beta one of b.
std::map<Partition, unsigned long long> monomial_pair_product(const Partition& a,
                                                              const Partition& b) {
    std::map<Partition, unsigned long long> out;
    const int total = a.weight() + b.weight();
    for (const Partition& nu : partitions_of(total)) {
        const int len = nu.length();
        if (a.length() > len || b.length() > len) continue;
        if (len > a.length() + b.length()) continue;

        std::vector<int> alpha(len, 0);
        std::copy(a.parts().begin(), a.parts().end(), alpha.begin());
        std::sort(alpha.begin(), alpha.end());

        unsigned long long count = 0;
        do {
            std::vector<int> beta(len);
            bool ok = true;
            for (int i = 0; i < len; ++i) {
                beta[i] = nu.parts()[i] - alpha[i];
                if (beta[i] < 0) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            std::erase(beta, 0);
            std::sort(beta.begin(), beta.end(), std::greater<int>());
            if (beta == b.parts()) ++count;
        } while (std::next_permutation(alpha.begin(), alpha.end()));

        if (count) out.emplace(nu, count);
    }
    return out;
}

}  // namespace

SymFunc sf_mul(const SymFunc& a, const SymFunc& b) {
    SymFunc am = to_basis(a, Basis::M);
    SymFunc bm = to_basis(b, Basis::M);
    SymFunc out(Basis::M);
    for (const auto& [pa, ca] : am.terms()) {
        for (const auto& [pb, cb] : bm.terms()) {
            // Iterate arrangements of the shorter partition.
            const bool swap = pa.length() > pb.length();
            const Partition& first = swap ? pb : pa;
            const Partition& second = swap ? pa : pb;
            for (const auto& [nu, count] : monomial_pair_product(first, second))
                out.add_term(nu, ca * cb * Rat(static_cast<unsigned long>(count)));
        }
    }
    return out;
}

SymFunc elementary_in_monomial(const Partition& lambda) {
    static std::map<Partition, SymFunc> cache;
    static std::mutex mutex;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(lambda);
        if (it != cache.end()) return it->second;
    }
    SymFunc value;
    if (lambda.empty()) {
        value = SymFunc::one(Basis::M);
    } else {
        SymFunc prefix = elementary_in_monomial(lambda.drop_last());
        int k = lambda.parts().back();
        // e_k = m_{1^k}
        SymFunc ek = SymFunc::term(Basis::M, Partition(std::vector<int>(k, 1)), 1);
        value = sf_mul(prefix, ek);
    }
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(lambda, std::move(value)).first->second;
}

SymFunc e_to_m(const SymFunc& a) {
    if (a.basis() != Basis::E) throw std::invalid_argument("e_to_m: input must be in E basis");
    SymFunc out(Basis::M);
    for (const auto& [p, c] : a.terms()) out.add_scaled(elementary_in_monomial(p), c);
    return out;
}

namespace {

// Per-degree inverse of the e->m transition matrix, rows/columns indexed by
// partitions_of(n) in reverse-lexicographic order.
struct DegreeTransition {
    std::vector<Partition> parts;
    std::vector<std::vector<Rat>> inverse;
};

const DegreeTransition& degree_transition(int n) {
    static std::map<int, DegreeTransition> cache;
    static std::mutex mutex;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }

    DegreeTransition t;
    t.parts = partitions_of(n);
    const int p = static_cast<int>(t.parts.size());
    std::map<Partition, int> index;
    for (int i = 0; i < p; ++i) index.emplace(t.parts[i], i);

    // Augmented [T | I], T[i][j] = coefficient of m_{parts[i]} in e_{parts[j]}.
    std::vector<std::vector<Rat>> aug(p, std::vector<Rat>(2 * p, 0));
    for (int j = 0; j < p; ++j) {
        SymFunc expansion = elementary_in_monomial(t.parts[j]);
        for (const auto& [mu, c] : expansion.terms()) aug[index.at(mu)][j] = c;
        aug[j][p + j] = 1;
    }

    // Gauss-Jordan; the transition matrix is invertible.
    for (int col = 0; col < p; ++col) {
        int pivot = -1;
        for (int row = col; row < p; ++row)
            if (aug[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) throw std::logic_error("degree_transition: singular matrix");
        std::swap(aug[col], aug[pivot]);
        Rat inv = 1 / aug[col][col];
        for (int k = 0; k < 2 * p; ++k) aug[col][k] *= inv;
        for (int row = 0; row < p; ++row) {
            if (row == col || aug[row][col] == 0) continue;
            Rat f = aug[row][col];
            for (int k = 0; k < 2 * p; ++k) aug[row][k] -= f * aug[col][k];
        }
    }
    t.inverse.assign(p, std::vector<Rat>(p));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) t.inverse[i][j] = aug[i][p + j];

    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(n, std::move(t)).first->second;
}

}  // namespace

SymFunc m_to_e(const SymFunc& a) {
    if (a.basis() != Basis::M) throw std::invalid_argument("m_to_e: input must be in M basis");
    // Solve degree by degree.
    std::map<int, std::map<Partition, Rat>> by_weight;
    for (const auto& [p, c] : a.terms()) by_weight[p.weight()][p] = c;

    SymFunc out(Basis::E);
    for (const auto& [n, terms] : by_weight) {
        const DegreeTransition& t = degree_transition(n);
        const int p = static_cast<int>(t.parts.size());
        std::vector<Rat> v(p, 0);
        for (int i = 0; i < p; ++i) {
            auto it = terms.find(t.parts[i]);
            if (it != terms.end()) v[i] = it->second;
        }
        for (int j = 0; j < p; ++j) {
            Rat x(0);
            for (int i = 0; i < p; ++i)
                if (v[i] != 0) x += t.inverse[j][i] * v[i];
            out.add_term(t.parts[j], x);
        }
    }
    return out;
}

SymFunc to_basis(const SymFunc& a, Basis b) {
    if (a.basis() == b) return a;
    return b == Basis::M ? e_to_m(a) : m_to_e(a);
}

bool sf_equal(const SymFunc& a, const SymFunc& b) {
    if (a.basis() == b.basis()) return a == b;
    return to_basis(a, Basis::M) == to_basis(b, Basis::M);
}

bool is_e_positive(const SymFunc& a) {
    SymFunc e = to_basis(a, Basis::E);
    for (const auto& [p, c] : e.terms())
        if (c <= 0) return false;
    return true;
}

std::string sf_to_text(const SymFunc& a) {
    if (a.is_zero()) return "0";
    const char b = a.basis() == Basis::M ? 'm' : 'e';
    std::string out;
    bool first = true;
    for (const auto& [p, c] : a.terms()) {
        Rat abs = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out += '-';
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        out += rat_to_string(abs);
        out += '*';
        out += b;
        out += p.to_string();
    }
    return out;
}

}  // namespace csfkit
