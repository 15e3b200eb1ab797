#pragma once

#include <map>
#include <string>

#include "csfkit/partition.hpp"
#include "csfkit/rational.hpp"

namespace csfkit {

enum class Basis { M, E };

// Sparse exact-rational linear combination of basis elements m_lambda or
// e_lambda. Stored coefficients are never zero; keys are canonical partitions.
class SymFunc {
  public:
    SymFunc() = default;
    explicit SymFunc(Basis b) : basis_(b) {}

    static SymFunc zero(Basis b) { return SymFunc(b); }
    static SymFunc one(Basis b) { return term(b, Partition(), 1); }
    static SymFunc term(Basis b, const Partition& p, const Rat& c);

    Basis basis() const { return basis_; }
    const std::map<Partition, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(const Partition& p) const;

    void add_term(const Partition& p, const Rat& c);
    void add_scaled(const SymFunc& other, const Rat& c);  // same basis required

    bool operator==(const SymFunc&) const = default;

  private:
    Basis basis_ = Basis::M;
    std::map<Partition, Rat> terms_;
};

SymFunc sf_add(const SymFunc& a, const SymFunc& b);
SymFunc sf_scale(const Rat& c, const SymFunc& a);

// Symmetric-function product, returned in the M basis (operands are converted
// as needed).
SymFunc sf_mul(const SymFunc& a, const SymFunc& b);

SymFunc e_to_m(const SymFunc& a);
SymFunc m_to_e(const SymFunc& a);
SymFunc to_basis(const SymFunc& a, Basis b);

// Equality across bases: both sides converted to M.
bool sf_equal(const SymFunc& a, const SymFunc& b);

// True iff every coefficient of the E-basis expansion is positive, or the
// function is zero.
bool is_e_positive(const SymFunc& a);

// Monomial expansion of e_lambda, memoized. Thread safe.
SymFunc elementary_in_monomial(const Partition& lambda);

// "20*e[4,2] + 40*e[5,1] + 180*e[6]"; zero renders as "0". Terms appear in
// ascending (weight, lexicographic) order of their partitions.
std::string sf_to_text(const SymFunc& a);

}  // namespace csfkit
