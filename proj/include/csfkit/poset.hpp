#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "csfkit/partition.hpp"

namespace csfkit {

// Finite strict partial order on vertices 0..n-1, stored as bitmask rows.
// Irreflexive, antisymmetric and transitive by construction.
class Poset {
  public:
    Poset() = default;

    // Transitive closure of the given pairs; throws on cycles.
    static Poset from_relations(int n, std::span<const std::pair<int, int>> pairs);

    // up[i] holds the bitmask of j with i < j; must already be a valid
    // strict order (checked).
    static Poset from_less_masks(int n, std::vector<std::uint32_t> up);

    int size() const { return n_; }
    bool less(int i, int j) const { return (up_[i] >> j) & 1u; }
    bool comparable(int i, int j) const { return less(i, j) || less(j, i); }
    std::uint32_t up_mask(int i) const { return up_[i]; }
    std::uint32_t down_mask(int i) const { return down_[i]; }
    std::uint32_t full_mask() const { return n_ == 32 ? ~0u : (1u << n_) - 1; }

    Poset dual() const;

    // Induced subposet on the masked vertices, renumbered in ascending order.
    Poset restricted(std::uint32_t vertex_mask) const;

    // Image under a relabeling: vertex v becomes perm[v].
    Poset relabeled(const std::vector<int>& perm) const;

    // Full strict relation as sorted pairs.
    std::vector<std::pair<int, int>> relation_pairs() const;

    bool operator==(const Poset&) const = default;

  private:
    int n_ = 0;
    std::vector<std::uint32_t> up_;
    std::vector<std::uint32_t> down_;

    void rebuild_down();
};

Poset chain_poset(int n);
Poset antichain_poset(int n);
Poset three_plus_one();
Poset two_plus_two();

// Graded poset with lambda_i vertices of rank i, every vertex of a rank below
// every vertex of each higher rank.
Poset ranked_poset(const Partition& lambda);

// True iff some vertex subset of host induces a copy of pattern.
bool contains_induced(const Poset& host, const Poset& pattern);

bool is_3plus1_free(const Poset& p);
bool is_2plus2_free(const Poset& p);
bool is_3_free(const Poset& p);  // every vertex minimal or maximal

// Some ordinal split (X, Y) with every x in X below every y in Y, if one
// exists; deterministically the split minimizing |X|, then with the
// lexicographically smallest X.
std::optional<std::pair<std::vector<int>, std::vector<int>>> ordinal_split(const Poset& p);

// Opaque isomorphism-invariant key: equal keys iff isomorphic posets.
using CanonicalKey = std::string;

struct CanonicalForm {
    CanonicalKey key;
    Poset poset;                              // canonically relabeled copy
    std::vector<std::vector<int>> generators; // automorphisms of the input labeling
};

CanonicalKey canonical_key(const Poset& p);
CanonicalForm canonical_form(const Poset& p);

enum class PosetClass { All, ThreePlusOneFree, BothFree };

bool in_class(const Poset& p, PosetClass cls);
std::string class_name(PosetClass cls);

// One canonically-labeled representative per isomorphism class, sorted by
// canonical key. Bounds: n <= 7 for All, n <= 10 for the filtered classes.
std::vector<Poset> enumerate_posets(int n, PosetClass cls);

// Representatives for every size 1..max_n (index 0 unused).
std::vector<std::vector<Poset>> enumerate_posets_by_size(int max_n, PosetClass cls);

}  // namespace csfkit
