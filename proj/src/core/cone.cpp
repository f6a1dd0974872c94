#include "core/cone.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace domcert {

namespace {

RatVec to_rat_vec(const Partition& p) {
    RatVec v;
    v.reserve(size_t(p.rank()));
    for (int i = 0; i < p.rank(); ++i) v.emplace_back(p[i]);
    return v;
}

IntVec to_int_vec(const Partition& p) {
    IntVec v;
    v.reserve(size_t(p.rank()));
    for (int i = 0; i < p.rank(); ++i) v.emplace_back(p[i]);
    return v;
}

Part to_part(const Int& n) {
    if (n < 0 || n > PART_LIMIT) throw std::overflow_error("value does not fit a partition entry");
    return n.convert_to<Part>();
}

// Columns of the scaled generators selected by the index set.
IntMat column_matrix(const std::vector<ConeGenerator>& gens, const std::vector<int>& members, int d) {
    IntMat w(size_t(d), IntVec(members.size()));
    for (size_t j = 0; j < members.size(); ++j) {
        const Partition& g = gens[size_t(members[j])].scaled;
        for (int r = 0; r < d; ++r) w[size_t(r)][j] = g[r];
    }
    return w;
}

Rat dot(const RatVec& x, const RatVec& y) {
    Rat s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

// Exact pseudo-inverse solver of the subcone's column matrix, cleared to a
// common integer denominator.
Subcone make_subcone(const std::vector<ConeGenerator>& gens, std::vector<int> members, int d) {
    int k = int(members.size());
    IntMat w = column_matrix(gens, members, d);
    auto gram = RatMat(size_t(k), RatVec(size_t(k)));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            Int s = 0;
            for (int r = 0; r < d; ++r) s += w[size_t(r)][size_t(i)] * w[size_t(r)][size_t(j)];
            gram[size_t(i)][size_t(j)] = Rat(s);
        }
    }
    auto inv = invert(gram);
    if (!inv) throw std::logic_error("subcone generators are not independent");
    auto solver = RatMat(size_t(k), RatVec(size_t(d)));
    Int den = 1;
    for (int i = 0; i < k; ++i) {
        for (int r = 0; r < d; ++r) {
            Rat s = 0;
            for (int j = 0; j < k; ++j) s += (*inv)[size_t(i)][size_t(j)] * Rat(w[size_t(r)][size_t(j)]);
            solver[size_t(i)][size_t(r)] = s;
            den = lcm(den, denominator_int(s));
        }
    }
    Subcone sc;
    sc.members = std::move(members);
    sc.solve_den = den;
    sc.solve_num.assign(size_t(k), IntVec(size_t(d)));
    for (int i = 0; i < k; ++i)
        for (int r = 0; r < d; ++r)
            sc.solve_num[size_t(i)][size_t(r)] =
                numerator_int(solver[size_t(i)][size_t(r)]) * (den / denominator_int(solver[size_t(i)][size_t(r)]));
    return sc;
}

}  // namespace

Part Decomposition::multiplier_sum() const {
    Part s = 0;
    for (const auto& t : terms) s += t.mult;
    return s;
}

ConeGenerator cone_generator(const Partition& a, const Composition& L) {
    if (L.total() != a.rank()) throw std::invalid_argument("composition does not cut the rank of the base");
    Part mu = lcm_upto_part(a.rank());
    RatVec vec;
    std::vector<Part> scaled;
    vec.reserve(size_t(a.rank()));
    scaled.reserve(size_t(a.rank()));
    int row = 0;
    for (int i = 0; i < L.size(); ++i) {
        Part len = L[i];
        Part sum = 0;
        for (int j = 0; j < len; ++j) sum += a[row + j];
        Part entry = (mu / len) * sum;
        for (int j = 0; j < len; ++j) {
            vec.emplace_back(Rat(sum, len));
            scaled.push_back(entry);
        }
        row += int(len);
    }
    return {L, std::move(vec), Partition(std::move(scaled))};
}

bool cone_member(const Partition& a, const Partition& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("cone base and candidate have different ranks");
    if (a.is_zero()) return b.is_zero();
    if (b.is_zero()) return true;
    return scaled_dominance_leq(b, a);
}

bool cone_member(const Partition& a, const RatVec& b) {
    if (int(b.size()) != a.rank()) throw std::invalid_argument("cone base and candidate have different ranks");
    int d = a.rank();
    for (int i = 0; i < d; ++i) {
        if (b[size_t(i)] < 0) return false;
        if (i > 0 && b[size_t(i)] > b[size_t(i - 1)]) return false;
    }
    Rat wb = 0;
    for (const Rat& x : b) wb += x;
    if (wb == 0) return true;
    if (a.is_zero()) return false;
    Rat wa = a.weight();
    Rat pb = 0, pa = 0;
    for (int n = 0; n + 1 < d; ++n) {
        pb += b[size_t(n)];
        pa += a[n];
        if (wa * pb > wb * pa) return false;
    }
    return true;
}

DominanceCone::DominanceCone(const Partition& a) : base_(a) {
    if (a.rank() == 0) throw std::invalid_argument("cone base must have positive rank");
    if (a.is_zero()) throw std::invalid_argument("cone base must be non-zero: the zero base gives the origin cone");
    int d = a.rank();
    scale_ = lcm_upto_part(d);
    for (const auto& L : compositions(d)) {
        ConeGenerator g = cone_generator(a, L);
        bool seen = false;
        for (const auto& kept : generators_) {
            if (kept.scaled == g.scaled) {
                seen = true;
                break;
            }
        }
        if (!seen) generators_.push_back(std::move(g));
    }

    // Placing triangulation in generator order.  While the span grows every
    // cell absorbs the new ray; once it is stable, the new ray is joined to
    // each boundary facet that is strictly visible from it.
    std::vector<int> basis;
    std::vector<std::vector<int>> cells;
    auto span_coords = [&](int gi) -> std::optional<RatVec> {
        RatMat m(size_t(d), RatVec(basis.size()));
        for (size_t j = 0; j < basis.size(); ++j) {
            const Partition& g = generators_[size_t(basis[j])].scaled;
            for (int r = 0; r < d; ++r) m[size_t(r)][j] = Rat(g[r]);
        }
        return solve_linear(std::move(m), to_rat_vec(generators_[size_t(gi)].scaled));
    };
    for (int gi = 0; gi < int(generators_.size()); ++gi) {
        if (basis.empty()) {
            basis.push_back(gi);
            cells.push_back({gi});
            continue;
        }
        auto placed = span_coords(gi);
        if (!placed) {
            basis.push_back(gi);
            for (auto& cell : cells) cell.push_back(gi);
            continue;
        }
        int k = int(basis.size());
        if (k == 1) continue;  // distinct generators share a weight, so a stable 1-dim span means gi repeats the ray
        std::map<int, RatVec> coord;
        coord[gi] = *placed;
        for (const auto& cell : cells)
            for (int m : cell)
                if (!coord.count(m)) coord[m] = *span_coords(m);
        std::map<std::vector<int>, std::pair<int, int>> facets;  // facet -> (owner count, inner witness)
        for (const auto& cell : cells) {
            for (size_t i = 0; i < cell.size(); ++i) {
                std::vector<int> f = cell;
                f.erase(f.begin() + long(i));
                auto& entry = facets[f];
                if (entry.first == 0) entry.second = cell[size_t(i)];
                entry.first += 1;
            }
        }
        std::vector<std::vector<int>> added;
        for (const auto& [f, info] : facets) {
            if (info.first != 1) continue;
            RatMat rows;
            for (int m : f) rows.push_back(coord.at(m));
            RatVec normal = nullspace_vector(rows);
            Rat inner = dot(coord.at(info.second), normal);
            if (inner > 0)
                for (Rat& q : normal) q = -q;
            if (dot(coord.at(gi), normal) > 0) {
                std::vector<int> cell = f;
                cell.push_back(gi);
                std::sort(cell.begin(), cell.end());
                added.push_back(std::move(cell));
            }
        }
        cells.insert(cells.end(), added.begin(), added.end());
    }
    dim_ = int(basis.size());
    std::sort(cells.begin(), cells.end());
    subcones_.reserve(cells.size());
    for (auto& cell : cells) subcones_.push_back(make_subcone(generators_, std::move(cell), d));
}

bool DominanceCone::member(const Partition& b) const { return cone_member(base_, b); }

Decomposition DominanceCone::decompose(const Partition& b) const {
    int d = base_.rank();
    if (b.rank() != d) throw std::invalid_argument("decomposition target has the wrong rank");
    if (!member(b))
        throw std::invalid_argument("decomposition target is outside the cone: " + dominance_diagnostic(b, base_, true));
    IntVec bi = to_int_vec(b);
    for (const auto& sc : subcones_) {
        int k = int(sc.members.size());
        auto t = IntVec(size_t(k));
        bool inside = true;
        for (int i = 0; i < k && inside; ++i) {
            Int s = 0;
            for (int r = 0; r < d; ++r) s += sc.solve_num[size_t(i)][size_t(r)] * bi[size_t(r)];
            if (s < 0) inside = false;
            t[size_t(i)] = s;
        }
        if (!inside) continue;
        if (k < d) {
            bool consistent = true;
            for (int r = 0; r < d && consistent; ++r) {
                Int s = 0;
                for (int i = 0; i < k; ++i)
                    s += Int(generators_[size_t(sc.members[size_t(i)])].scaled[r]) * t[size_t(i)];
                consistent = s == sc.solve_den * bi[size_t(r)];
            }
            if (!consistent) continue;
        }
        Decomposition out;
        out.base = base_;
        out.target = b;
        std::vector<Part> rem = b.parts();
        out.terms.reserve(size_t(k));
        for (int i = 0; i < k; ++i) {
            const ConeGenerator& g = generators_[size_t(sc.members[size_t(i)])];
            Part m = to_part(t[size_t(i)] / sc.solve_den);
            for (int r = 0; r < d; ++r) rem[size_t(r)] -= m * g.scaled[r];
            out.terms.push_back({g.label, g.scaled, m});
        }
        out.remainder = Partition(std::move(rem));
        return out;
    }
    throw std::logic_error("triangulation did not cover a cone member");
}

std::vector<Partition> DominanceCone::sigma() const {
    int d = base_.rank();
    std::vector<Partition> out;
    out.push_back(Partition::zero(d));
    for (const auto& sc : subcones_) {
        int k = int(sc.members.size());
        IntMat w = column_matrix(generators_, sc.members, d);

        // Rows of the column matrix forming an invertible square block.
        std::vector<int> pivot_rows;
        RatMat acc;
        for (int r = 0; r < d && int(pivot_rows.size()) < k; ++r) {
            auto row = RatVec(size_t(k));
            for (int j = 0; j < k; ++j) row[size_t(j)] = Rat(w[size_t(r)][size_t(j)]);
            acc.push_back(std::move(row));
            if (matrix_rank(acc) == int(pivot_rows.size()) + 1)
                pivot_rows.push_back(r);
            else
                acc.pop_back();
        }
        auto wp = IntMat(size_t(k), IntVec(size_t(k)));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) wp[size_t(i)][size_t(j)] = w[size_t(pivot_rows[size_t(i)])][size_t(j)];
        IntMat h = column_hermite(wp);
        auto wp_rat = RatMat(size_t(k), RatVec(size_t(k)));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) wp_rat[size_t(i)][size_t(j)] = Rat(wp[size_t(i)][size_t(j)]);
        RatMat winv = *invert(std::move(wp_rat));

        // One integer point per residue class of the pivot lattice, shifted
        // into the half-open parallelepiped of the subcone's generators.
        auto box = std::vector<Part>(size_t(k));
        for (int i = 0; i < k; ++i) box[size_t(i)] = to_part(h[size_t(i)][size_t(i)]);
        std::vector<Part> y(size_t(k), 0);
        while (true) {
            auto frac = RatVec(size_t(k));
            for (int i = 0; i < k; ++i) {
                Rat tau = 0;
                for (int j = 0; j < k; ++j) tau += winv[size_t(i)][size_t(j)] * Rat(y[size_t(j)]);
                frac[size_t(i)] = tau - Rat(floor_rat(tau));
            }
            auto point = std::vector<Part>(size_t(d));
            bool integral = true;
            for (int r = 0; r < d && integral; ++r) {
                Rat full = 0;
                for (int j = 0; j < k; ++j) full += Rat(w[size_t(r)][size_t(j)]) * frac[size_t(j)];
                if (denominator_int(full) == 1)
                    point[size_t(r)] = to_part(numerator_int(full));
                else
                    integral = false;
            }
            if (integral) out.push_back(Partition(std::move(point)));

            int i = 0;
            while (i < k && ++y[size_t(i)] == box[size_t(i)]) {
                y[size_t(i)] = 0;
                ++i;
            }
            if (i == k) break;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<RatVec> polytope_vertices(const Partition& a) {
    DominanceCone cone(a);
    std::vector<RatVec> out;
    out.reserve(cone.generators().size());
    for (const auto& g : cone.generators()) out.push_back(g.vector);
    return out;
}

std::vector<Partition> sigma_set(const Partition& a) { return DominanceCone(a).sigma(); }

Decomposition decompose(const Partition& a, const Partition& b) { return DominanceCone(a).decompose(b); }

}  // namespace domcert
