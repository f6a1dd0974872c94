#pragma once

// Littlewood-Richardson calculus: tableau-counted structure constants,
// products of irreducibles truncated to a fixed rank, iterated power
// supports, a pruned membership test for single partitions in a power, and
// the blockwise product criterion.

#include "core/partition.hpp"

#include <cstdint>
#include <map>

namespace domcert {

inline constexpr std::uint64_t kDefaultSupportCap = 1'000'000;

// Multiset of partitions of a common rank with arbitrary precision
// multiplicities, ordered lexicographically.  Supports built in
// support-only mode carry multiplicity 1 placeholders and remember it.
class TensorSupport {
public:
    TensorSupport(int rank, bool with_multiplicities)
        : rank_(rank), with_multiplicities_(with_multiplicities) {}

    int rank() const { return rank_; }
    bool with_multiplicities() const { return with_multiplicities_; }
    size_t size() const { return entries_.size(); }
    bool contains(const Partition& p) const { return entries_.count(p) > 0; }
    Int multiplicity(const Partition& p) const;

    void add(const Partition& p, const Int& mult);
    const std::map<Partition, Int>& entries() const { return entries_; }

private:
    int rank_ = 0;
    bool with_multiplicities_ = true;
    std::map<Partition, Int> entries_;
};

// Number of Littlewood-Richardson skew tableaux of shape c/a and content b:
// semistandard fillings whose reverse reading word (right to left, top to
// bottom) is a ballot sequence.  All three arguments must share one rank.
Int lr_coefficient(const Partition& a, const Partition& b, const Partition& c);
bool lr_positive(const Partition& a, const Partition& b, const Partition& c);

// Product of the irreducibles labelled a and b at their common rank;
// partitions with more nonzero rows than the rank are discarded.
TensorSupport tensor_product(const Partition& a, const Partition& b, bool with_multiplicities = true);

// Support of the m-th tensor power of a, iterated with per-factor
// memoization.  Throws cap_exceeded when the support grows past the cap.
TensorSupport tensor_power_support(const Partition& a, int m, bool with_multiplicities = true,
                                   std::uint64_t support_cap = kDefaultSupportCap);

// Is g a constituent of the m-th tensor power of a?  Intermediate supports
// are pruned to partitions fitting inside g componentwise, which is sound
// because products only ever grow parts.  m = 0 holds exactly for g = 0.
bool contains_in_power(const Partition& a, const Partition& g, int m,
                       std::uint64_t support_cap = kDefaultSupportCap);

struct BlockwiseCheck {
    bool ok = false;
    int failing_block = -1;  // 0-based, -1 when ok
    std::string reason;
};

// Sufficient criterion for c appearing in the product of a and b: every
// L-block of c appears in the product of the matching blocks of a and b.
BlockwiseCheck blockwise_product_check(const Partition& a, const Partition& b, const Partition& c,
                                       const Composition& L);

}  // namespace domcert
