#include "core/partition.hpp"

#include <algorithm>
#include <sstream>

namespace domcert {

namespace {

std::vector<Part> parse_int_list(const std::string& text, char open, char close, const char* what) {
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i >= text.size() || text[i] != open) throw std::invalid_argument(std::string(what) + ": expected '" + open + "' in '" + text + "'");
    ++i;
    std::vector<Part> values;
    skip_ws();
    if (i < text.size() && text[i] == close) {
        ++i;
    } else {
        while (true) {
            skip_ws();
            bool negative = false;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
                negative = text[i] == '-';
                ++i;
            }
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw std::invalid_argument(std::string(what) + ": expected integer in '" + text + "'");
            Part value = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                value = value * 10 + (text[i] - '0');
                if (value > PART_LIMIT) throw std::invalid_argument(std::string(what) + ": entry too large in '" + text + "'");
                ++i;
            }
            values.push_back(negative ? -value : value);
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == close) {
                ++i;
                break;
            }
            throw std::invalid_argument(std::string(what) + ": expected ',' or '" + close + "' in '" + text + "'");
        }
    }
    skip_ws();
    if (i != text.size()) throw std::invalid_argument(std::string(what) + ": trailing characters in '" + text + "'");
    return values;
}

std::string join_ints(const std::vector<Part>& values, char open, char close) {
    std::ostringstream out;
    out << open;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out << ',';
        out << values[i];
    }
    out << close;
    return out.str();
}

}  // namespace

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("Partition: negative entry in " + join_ints(parts_, '[', ']'));
        if (parts_[i] > PART_LIMIT) throw std::invalid_argument("Partition: entry above limit");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: entries increase in " + join_ints(parts_, '[', ']'));
    }
}

Partition Partition::zero(int rank) {
    if (rank < 0) throw std::invalid_argument("Partition::zero: negative rank");
    return Partition(std::vector<Part>(size_t(rank), 0));
}

Part Partition::weight() const {
    Part total = 0;
    for (Part p : parts_) total += p;
    return total;
}

int Partition::nonzero_count() const {
    int count = 0;
    while (count < rank() && parts_[size_t(count)] > 0) ++count;
    return count;
}

Partition Partition::padded(int rank) const {
    if (rank < this->rank()) throw std::invalid_argument("Partition::padded: rank below current length");
    std::vector<Part> out = parts_;
    out.resize(size_t(rank), 0);
    return Partition(std::move(out));
}

Partition Partition::trimmed() const {
    std::vector<Part> out(parts_.begin(), parts_.begin() + nonzero_count());
    return Partition(std::move(out));
}

bool operator<(const Partition& x, const Partition& y) {
    if (x.parts_ != y.parts_)
        return std::lexicographical_compare(x.parts_.begin(), x.parts_.end(), y.parts_.begin(), y.parts_.end());
    return false;
}

Partition operator+(const Partition& x, const Partition& y) {
    if (x.rank() != y.rank()) throw std::invalid_argument("partition sum: rank mismatch");
    std::vector<Part> out(size_t(x.rank()));
    for (int i = 0; i < x.rank(); ++i) out[size_t(i)] = x[i] + y[i];
    return Partition(std::move(out));
}

Partition scaled(const Partition& x, Part factor) {
    if (factor < 0) throw std::invalid_argument("scaled: negative factor");
    std::vector<Part> out(size_t(x.rank()));
    for (int i = 0; i < x.rank(); ++i) {
        if (factor != 0 && x[i] > PART_LIMIT / factor) throw cap_exceeded("part magnitude", "scaled partition entry");
        out[size_t(i)] = x[i] * factor;
    }
    return Partition(std::move(out));
}

Composition::Composition(std::vector<int> lengths) : lengths_(std::move(lengths)) {
    if (lengths_.empty()) throw std::invalid_argument("Composition: empty");
    for (int l : lengths_)
        if (l < 1) throw std::invalid_argument("Composition: non-positive block length");
}

int Composition::total() const {
    int total = 0;
    for (int l : lengths_) total += l;
    return total;
}

bool operator<(const Composition& x, const Composition& y) {
    return std::lexicographical_compare(x.lengths_.begin(), x.lengths_.end(), y.lengths_.begin(), y.lengths_.end());
}

bool is_partition_sequence(const std::vector<Part>& seq) {
    for (size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] < 0) return false;
        if (i > 0 && seq[i] > seq[i - 1]) return false;
    }
    return true;
}

bool dominance_leq(const Partition& x, const Partition& y) {
    if (x.rank() != y.rank()) throw std::invalid_argument("dominance_leq: rank mismatch");
    if (x.weight() != y.weight()) return false;
    Part sx = 0, sy = 0;
    for (int i = 0; i < x.rank(); ++i) {
        sx += x[i];
        sy += y[i];
        if (sx > sy) return false;
    }
    return true;
}

bool scaled_dominance_leq(const Partition& x, const Partition& y) {
    if (x.rank() != y.rank()) throw std::invalid_argument("scaled_dominance_leq: rank mismatch");
    Part wx = x.weight(), wy = y.weight();
    if (wx == 0 && wy == 0) throw std::invalid_argument("scaled_dominance_leq: both arguments are zero");
    if (wx == 0) return true;
    if (wy == 0) return false;
    Wide sx = 0, sy = 0;
    for (int i = 0; i < x.rank(); ++i) {
        sx += x[i];
        sy += y[i];
        if (Wide(wy) * sx > Wide(wx) * sy) return false;
    }
    return true;
}

bool dominance_equiv(const Partition& x, const Partition& y) {
    return scaled_dominance_leq(x, y) && scaled_dominance_leq(y, x);
}

std::string dominance_diagnostic(const Partition& x, const Partition& y, bool scaled) {
    if (x.rank() != y.rank()) return "rank mismatch";
    Part wx = x.weight(), wy = y.weight();
    if (scaled) {
        if (wx == 0 && wy == 0) return "both arguments are zero";
        if (wx == 0) return "";
        if (wy == 0) return "right side is zero";
    } else if (wx != wy) {
        std::ostringstream out;
        out << "weight mismatch: " << wx << " vs " << wy;
        return out.str();
    }
    Part mx = scaled ? wy : 1, my = scaled ? wx : 1;
    Int sx = 0, sy = 0;
    for (int i = 0; i < x.rank(); ++i) {
        sx += x[i];
        sy += y[i];
        if (mx * sx > my * sy) {
            std::ostringstream out;
            out << "partial sum " << (i + 1) << ": " << Int(mx * sx) << " > " << Int(my * sy);
            return out.str();
        }
    }
    return "";
}

Partition transpose(const Partition& a) {
    int columns = a.rank() == 0 ? 0 : int(a[0]);
    std::vector<Part> out(size_t(columns), 0);
    for (int j = 0; j < columns; ++j) {
        Part height = 0;
        for (int i = 0; i < a.rank(); ++i)
            if (a[i] > j) ++height;
        out[size_t(j)] = height;
    }
    return Partition(std::move(out));
}

Partition transpose(const Partition& a, int padded_rank) { return transpose(a).padded(padded_rank); }

std::vector<Part> join(const std::vector<Part>& left, const std::vector<Part>& right) {
    std::vector<Part> out = left;
    out.insert(out.end(), right.begin(), right.end());
    return out;
}

std::vector<std::vector<Part>> blocks(const Partition& a, const Composition& L) {
    if (L.total() != a.rank()) throw std::invalid_argument("blocks: composition total differs from rank");
    std::vector<std::vector<Part>> out;
    out.reserve(size_t(L.size()));
    int at = 0;
    for (int i = 0; i < L.size(); ++i) {
        out.emplace_back(a.parts().begin() + at, a.parts().begin() + at + L[i]);
        at += L[i];
    }
    return out;
}

std::vector<Composition> compositions(int d) {
    if (d < 1) throw std::invalid_argument("compositions: rank must be positive");
    std::vector<Composition> out;
    out.reserve(size_t(1) << (d - 1));
    for (unsigned mask = 0; mask < (1u << (d - 1)); ++mask) {
        std::vector<int> lengths;
        int run = 1;
        for (int pos = 0; pos < d - 1; ++pos) {
            if (mask & (1u << pos)) {
                lengths.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        lengths.push_back(run);
        out.emplace_back(std::move(lengths));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int schur_dimension(const Partition& a, int rank) {
    if (rank < 0) throw std::invalid_argument("schur_dimension: negative rank");
    int rows = a.nonzero_count();
    if (rows > rank) return 0;
    Partition t = transpose(a);
    Int numerator = 1, denominator = 1;
    for (int i = 0; i < rows; ++i) {
        for (Part j = 0; j < a[i]; ++j) {
            numerator *= rank + j - i;
            Part hook = (a[i] - 1 - j) + (t[int(j)] - 1 - i) + 1;
            denominator *= hook;
        }
    }
    return numerator / denominator;
}

std::string format_partition(const Partition& a) { return join_ints(a.parts(), '[', ']'); }

Partition parse_partition(const std::string& text) {
    return Partition(parse_int_list(text, '[', ']', "parse_partition"));
}

std::string format_composition(const Composition& L) {
    std::vector<Part> wide(L.lengths().begin(), L.lengths().end());
    return join_ints(wide, '(', ')');
}

Composition parse_composition(const std::string& text) {
    std::vector<Part> wide = parse_int_list(text, '(', ')', "parse_composition");
    std::vector<int> lengths;
    lengths.reserve(wide.size());
    for (Part v : wide) {
        if (v < 1 || v > 1 << 20) throw std::invalid_argument("parse_composition: block length out of range");
        lengths.push_back(int(v));
    }
    return Composition(std::move(lengths));
}

std::string format_sequence(const std::vector<Part>& seq) { return join_ints(seq, '[', ']'); }

std::vector<Partition> partitions_of_weight(Part weight, int rank) {
    std::vector<Partition> out;
    for_each_partition_up_to(weight, rank, [&](const Partition& p) {
        if (p.weight() == weight) out.push_back(p);
    });
    return out;
}

std::vector<Partition> partitions_up_to_weight(Part max_weight, int rank) {
    std::vector<Partition> out;
    for_each_partition_up_to(max_weight, rank, [&](const Partition& p) { out.push_back(p); });
    return out;
}

}  // namespace domcert
