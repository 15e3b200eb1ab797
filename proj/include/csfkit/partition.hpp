#pragma once

#include <compare>
#include <string>
#include <vector>

namespace csfkit {

// Integer partition: weakly decreasing sequence of positive parts.
// The empty sequence is the unique partition of 0.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Sorts descending and drops zeros; negative entries are rejected.
    static Partition from_unsorted(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // Product of factorials of part multiplicities (1 for the empty partition).
    unsigned long long multiplicity_factorial() const;

    Partition drop_last() const;

    bool operator==(const Partition&) const = default;

    // Total order used for term maps and serialization: weight first, then
    // lexicographic on the part sequences. Within one weight this lists
    // [1,1,...,1] first and [n] last.
    std::strong_ordering operator<=>(const Partition& other) const;

    std::string to_string() const;  // "[4,2]", "[]"

  private:
    std::vector<int> parts_;
};

// All partitions of n, reverse-lexicographic: [n] first, [1^n] last.
std::vector<Partition> partitions_of(int n);

// Number of partitions of n (independent of partitions_of, used for sanity checks).
long long partition_count(int n);

}  // namespace csfkit
