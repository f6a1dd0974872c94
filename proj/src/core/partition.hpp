#pragma once

// Integer partitions of fixed length, compositions of the length, the
// dominance order together with its scale-invariant extension, conjugation,
// block splitting/joining, and the hook content dimension formula.

#include "core/numeric.hpp"

#include <string>
#include <vector>

namespace domcert {

// A non-increasing sequence of non-negative integers with explicit length.
// Trailing zeros are significant: the length is the rank of the general
// linear group acting, so [2,0] and [2,0,0] are different objects.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<Part> parts);
    static Partition zero(int rank);

    int rank() const { return int(parts_.size()); }
    Part operator[](int i) const { return parts_[size_t(i)]; }
    const std::vector<Part>& parts() const { return parts_; }
    Part weight() const;
    int nonzero_count() const;
    bool is_zero() const { return nonzero_count() == 0; }

    Partition padded(int rank) const;  // append zeros up to rank
    Partition trimmed() const;         // drop trailing zeros

    friend bool operator==(const Partition& x, const Partition& y) { return x.parts_ == y.parts_; }
    friend bool operator!=(const Partition& x, const Partition& y) { return !(x == y); }
    // Lexicographic on entries, ties broken by length; used for sorted sets.
    friend bool operator<(const Partition& x, const Partition& y);

private:
    std::vector<Part> parts_;
};

Partition operator+(const Partition& x, const Partition& y);  // equal rank
Partition scaled(const Partition& x, Part factor);

// An ordered list of positive block lengths summing to the rank it cuts.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> lengths);

    int size() const { return int(lengths_.size()); }
    int operator[](int i) const { return lengths_[size_t(i)]; }
    const std::vector<int>& lengths() const { return lengths_; }
    int total() const;

    friend bool operator==(const Composition& x, const Composition& y) { return x.lengths_ == y.lengths_; }
    friend bool operator!=(const Composition& x, const Composition& y) { return !(x == y); }
    friend bool operator<(const Composition& x, const Composition& y);

private:
    std::vector<int> lengths_;
};

bool is_partition_sequence(const std::vector<Part>& seq);

// x is below y in the dominance order: equal weight and every prefix sum of
// x is at most the matching prefix sum of y.  Requires equal rank.
bool dominance_leq(const Partition& x, const Partition& y);

// Scale-invariant comparison: |y|*x is below |x|*y.  The zero partition is
// below everything and above nothing; comparing zero with zero is rejected.
bool scaled_dominance_leq(const Partition& x, const Partition& y);

// Both scaled comparisons hold, i.e. x and y are proportional up to weight.
bool dominance_equiv(const Partition& x, const Partition& y);

// Human-readable reason why x is not below y ("" when it is).
std::string dominance_diagnostic(const Partition& x, const Partition& y, bool scaled);

Partition transpose(const Partition& a);                   // result rank = a[0]
Partition transpose(const Partition& a, int padded_rank);

std::vector<Part> join(const std::vector<Part>& left, const std::vector<Part>& right);
std::vector<std::vector<Part>> blocks(const Partition& a, const Composition& L);

// All 2^(d-1) compositions of d, sorted lexicographically.
std::vector<Composition> compositions(int d);

// Dimension of the irreducible GL(rank) representation with highest weight
// a, by the hook content formula; zero when a has more than rank rows.
Int schur_dimension(const Partition& a, int rank);

std::string format_partition(const Partition& a);              // "[4,2,0]"
Partition parse_partition(const std::string& text);
std::string format_composition(const Composition& L);          // "(1,2)"
Composition parse_composition(const std::string& text);
std::string format_sequence(const std::vector<Part>& seq);

std::vector<Partition> partitions_of_weight(Part weight, int rank);
std::vector<Partition> partitions_up_to_weight(Part max_weight, int rank);

// Calls f(const Partition&) for every partition of the given rank with
// weight at most max_weight, in lexicographically decreasing part order.
template <typename F>
void for_each_partition_up_to(Part max_weight, int rank, F&& f) {
    std::vector<Part> parts(size_t(rank), 0);
    auto rec = [&](auto&& self, int index, Part prev, Part budget) -> void {
        if (index == rank) {
            f(Partition(parts));
            return;
        }
        Part top = prev < budget ? prev : budget;
        for (Part v = top; v >= 0; --v) {
            parts[size_t(index)] = v;
            self(self, index + 1, v, budget - v);
        }
    };
    if (rank == 0) {
        f(Partition());
        return;
    }
    rec(rec, 0, max_weight, max_weight);
}

}  // namespace domcert
