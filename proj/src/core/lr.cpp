#include "core/lr.hpp"

#include <algorithm>
#include <sstream>

namespace domcert {

Int TensorSupport::multiplicity(const Partition& p) const {
    auto it = entries_.find(p);
    return it == entries_.end() ? Int(0) : it->second;
}

void TensorSupport::add(const Partition& p, const Int& mult) {
    if (p.rank() != rank_) throw std::invalid_argument("TensorSupport::add: rank mismatch");
    if (mult <= 0) throw std::invalid_argument("TensorSupport::add: multiplicity must be positive");
    entries_[p] += mult;
}

namespace {

// Backtracking count of LR fillings of c/a with content b.  Cells are
// visited in ballot reading order (top row to bottom row, right to left),
// so the ballot property and semistandardness can be enforced as each cell
// is placed.  Stops early once `limit` fillings are found.
class LrCounter {
public:
    LrCounter(const Partition& a, const Partition& b, const Partition& c, std::uint64_t limit)
        : a_(a), b_(b), c_(c), limit_(limit) {}

    std::uint64_t count() {
        int d = a_.rank();
        if (b_.weight() + a_.weight() != c_.weight()) return 0;
        for (int i = 0; i < d; ++i)
            if (a_[i] > c_[i]) return 0;
        symbols_ = b_.nonzero_count();
        used_.assign(size_t(symbols_) + 1, 0);
        rows_.assign(size_t(d), {});
        for (int i = 0; i < d; ++i) rows_[size_t(i)].assign(size_t(c_[i] - a_[i]), 0);
        found_ = 0;
        fill_row(0);
        return found_;
    }

private:
    void fill_row(int row) {
        if (found_ >= limit_) return;
        while (row < a_.rank() && c_[row] == a_[row]) ++row;
        if (row == a_.rank()) {
            ++found_;
            return;
        }
        fill_cell(row, c_[row] - 1);
    }

    void fill_cell(int row, Part col) {
        if (found_ >= limit_) return;
        if (col < a_[row]) {
            fill_row(row + 1);
            return;
        }
        int lo = 1, hi = symbols_;
        if (col + 1 < c_[row]) hi = std::min(hi, rows_[size_t(row)][size_t(col + 1 - a_[row])]);
        if (row > 0 && col < c_[row - 1] && col >= a_[row - 1])
            lo = std::max(lo, rows_[size_t(row - 1)][size_t(col - a_[row - 1])] + 1);
        for (int v = lo; v <= hi; ++v) {
            if (used_[size_t(v)] >= b_[v - 1]) continue;
            if (v > 1 && used_[size_t(v)] >= used_[size_t(v) - 1]) continue;
            ++used_[size_t(v)];
            rows_[size_t(row)][size_t(col - a_[row])] = v;
            fill_cell(row, col - 1);
            --used_[size_t(v)];
        }
    }

    const Partition& a_;
    const Partition& b_;
    const Partition& c_;
    std::uint64_t limit_;
    int symbols_ = 0;
    std::vector<Part> used_;
    std::vector<std::vector<int>> rows_;
    std::uint64_t found_ = 0;
};

std::uint64_t lr_count(const Partition& a, const Partition& b, const Partition& c, std::uint64_t limit) {
    if (a.rank() != b.rank() || a.rank() != c.rank()) throw std::invalid_argument("lr_coefficient: rank mismatch");
    return LrCounter(a, b, c, limit).count();
}

// Enumerates the outer shapes c that can carry an LR filling over a with
// content b: c contains a and b, has the right weight, at most
// rows(a)+rows(b) nonzero rows, and c_1 <= a_1 + b_1.
template <typename F>
void for_each_outer_shape(const Partition& a, const Partition& b, F&& f) {
    int d = a.rank();
    int max_rows = std::min(d, a.nonzero_count() + b.nonzero_count());
    Part budget = b.weight();
    std::vector<Part> c(size_t(d), 0);
    auto rec = [&](auto&& self, int i, Part prev, Part left) -> void {
        if (i == d) {
            if (left == 0) f(Partition(c));
            return;
        }
        if (i >= max_rows) {
            if (a[i] != 0) return;
            for (int k = i; k < d; ++k) c[size_t(k)] = 0;
            if (left == 0) f(Partition(c));
            return;
        }
        Part hi = std::min(prev, a[i] + left);
        if (i == 0) hi = std::min(hi, a[0] + b[0]);
        Part lo = std::max(a[i], b[i]);
        for (Part v = hi; v >= lo; --v) {
            // remaining rows can absorb at most (rows left) * v extra cells
            Part rest = left - (v - a[i]);
            Part capacity = 0;
            for (int k = i + 1; k < max_rows; ++k) capacity += v - a[k];
            if (rest < 0 || rest > capacity) continue;
            c[size_t(i)] = v;
            self(self, i + 1, v, rest);
        }
    };
    rec(rec, 0, PART_LIMIT, budget);
}

}  // namespace

Int lr_coefficient(const Partition& a, const Partition& b, const Partition& c) {
    std::uint64_t limit = std::uint64_t(1) << 62;
    std::uint64_t n = lr_count(a, b, c, limit);
    if (n >= limit) throw cap_exceeded("tableau count", "lr_coefficient overflow guard");
    return Int(n);
}

bool lr_positive(const Partition& a, const Partition& b, const Partition& c) {
    return lr_count(a, b, c, 1) > 0;
}

TensorSupport tensor_product(const Partition& a, const Partition& b, bool with_multiplicities) {
    if (a.rank() != b.rank()) throw std::invalid_argument("tensor_product: rank mismatch");
    TensorSupport out(a.rank(), with_multiplicities);
    for_each_outer_shape(a, b, [&](const Partition& c) {
        if (with_multiplicities) {
            Int mult = lr_coefficient(a, b, c);
            if (mult > 0) out.add(c, mult);
        } else if (lr_positive(a, b, c)) {
            out.add(c, 1);
        }
    });
    return out;
}

namespace {

TensorSupport power_iterate(const Partition& a, int m, bool with_multiplicities, std::uint64_t support_cap,
                            const Partition* box) {
    if (m < 1) throw std::invalid_argument("tensor_power_support: power must be positive");
    TensorSupport current(a.rank(), with_multiplicities);
    bool in_box = true;
    if (box)
        for (int i = 0; i < a.rank() && in_box; ++i) in_box = a[i] <= (*box)[i];
    if (in_box) current.add(a, 1);
    std::map<Partition, TensorSupport> expansions;
    for (int step = 2; step <= m; ++step) {
        TensorSupport next(a.rank(), with_multiplicities);
        for (const auto& [e, mult] : current.entries()) {
            auto it = expansions.find(e);
            if (it == expansions.end())
                it = expansions.emplace(e, tensor_product(e, a, with_multiplicities)).first;
            for (const auto& [c, cm] : it->second.entries()) {
                if (box) {
                    bool fits = true;
                    for (int i = 0; i < c.rank() && fits; ++i) fits = c[i] <= (*box)[i];
                    if (!fits) continue;
                }
                next.add(c, with_multiplicities ? Int(mult * cm) : Int(1));
                if (next.size() > support_cap) {
                    std::ostringstream detail;
                    detail << "power " << step << " of " << format_partition(a) << " exceeds " << support_cap;
                    throw cap_exceeded("support cardinality", detail.str());
                }
            }
        }
        current = std::move(next);
    }
    return current;
}

}  // namespace

TensorSupport tensor_power_support(const Partition& a, int m, bool with_multiplicities,
                                   std::uint64_t support_cap) {
    return power_iterate(a, m, with_multiplicities, support_cap, nullptr);
}

bool contains_in_power(const Partition& a, const Partition& g, int m, std::uint64_t support_cap) {
    if (a.rank() != g.rank()) throw std::invalid_argument("contains_in_power: rank mismatch");
    if (m < 0) throw std::invalid_argument("contains_in_power: negative power");
    if (m == 0) return g.is_zero();
    if (Wide(m) * a.weight() != Wide(g.weight())) return false;
    TensorSupport reached = power_iterate(a, m, false, support_cap, &g);
    return reached.contains(g);
}

BlockwiseCheck blockwise_product_check(const Partition& a, const Partition& b, const Partition& c,
                                       const Composition& L) {
    if (a.rank() != b.rank() || a.rank() != c.rank()) throw std::invalid_argument("blockwise_product_check: rank mismatch");
    if (L.total() != a.rank()) throw std::invalid_argument("blockwise_product_check: composition total differs from rank");
    auto ab = blocks(a, L);
    auto bb = blocks(b, L);
    auto cb = blocks(c, L);
    for (int i = 0; i < L.size(); ++i) {
        if (!is_partition_sequence(cb[size_t(i)]))
            return {false, i, "block is not non-increasing"};
        Partition pa{std::vector<Part>(ab[size_t(i)])};
        Partition pb{std::vector<Part>(bb[size_t(i)])};
        Partition pc{std::vector<Part>(cb[size_t(i)])};
        if (pc.weight() != pa.weight() + pb.weight())
            return {false, i, "block weight mismatch"};
        if (!lr_positive(pa, pb, pc))
            return {false, i, "block is not a constituent of the block product"};
    }
    return {true, -1, ""};
}

}  // namespace domcert
