#include "csfkit/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace csfkit {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::erase(parts, 0);
    for (int p : parts)
        if (p < 0) throw std::invalid_argument("Partition: negative part");
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    Partition out;
    out.parts_ = std::move(parts);
    return out;
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

unsigned long long Partition::multiplicity_factorial() const {
    unsigned long long f = 1;
    std::size_t i = 0;
    while (i < parts_.size()) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        for (std::size_t m = 2; m <= j - i; ++m) f *= m;
        i = j;
    }
    return f;
}

Partition Partition::drop_last() const {
    Partition out = *this;
    if (!out.parts_.empty()) out.parts_.pop_back();
    return out;
}

std::strong_ordering Partition::operator<=>(const Partition& other) const {
    int wa = weight(), wb = other.weight();
    if (wa != wb) return wa <=> wb;
    return std::lexicographical_compare_three_way(parts_.begin(), parts_.end(),
                                                  other.parts_.begin(), other.parts_.end());
}

std::string Partition::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ']';
    return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        acc.push_back(k);
        partitions_rec(remaining - k, k, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> acc;
    partitions_rec(n, n, acc, out);
    return out;
}

long long partition_count(int n) {
    // p(n, k): partitions of n into parts <= k.
    std::vector<std::vector<long long>> p(n + 1, std::vector<long long>(n + 1, 0));
    for (int k = 0; k <= n; ++k) p[0][k] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= n; ++k)
            p[m][k] = p[m][k - 1] + (m >= k ? p[m - k][k] : 0);
    return p[n][n];
}

}  // namespace csfkit
