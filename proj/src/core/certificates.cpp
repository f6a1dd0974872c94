#include "core/certificates.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace domcert {

namespace {

Verdict reject(int step, std::string reason) { return {false, step, std::move(reason)}; }

Partition column_partition(int d, int k) {
    auto parts = std::vector<Part>(size_t(d), 0);
    for (int i = 0; i < k; ++i) parts[size_t(i)] = 1;
    return Partition(std::move(parts));
}

Partition constant_partition(int d, Part value) {
    return Partition(std::vector<Part>(size_t(d), value));
}

void encode_parts(std::ostringstream& out, const Partition& p) {
    out << '[';
    for (int i = 0; i < p.rank(); ++i) out << p[i] << ',';
    out << ']';
}

std::string step_key(const CertStep& s) {
    std::ostringstream out;
    out << int(s.kind) << '|';
    for (int p : s.premises) out << p << ',';
    out << '|';
    for (int i = 0; i < s.composition.size(); ++i) out << s.composition[i] << ',';
    out << '|';
    encode_parts(out, s.left);
    encode_parts(out, s.right);
    encode_parts(out, s.result);
    return out.str();
}

int append_wedge(CertBuilder& cb, int d, int k, int m) {
    int factor = cb.axiom(column_partition(d, k));
    int cur = factor;
    for (int j = 2; j <= m; ++j) {
        Part total = Part(j) * k;
        auto parts = std::vector<Part>(size_t(d), total / d);
        for (Part i = 0; i < total % d; ++i) parts[size_t(i)] += 1;
        cur = cb.lr(cur, factor, Partition(std::move(parts)));
    }
    return cur;
}

int append_det(CertBuilder& cb, const Partition& a) {
    int d = a.rank();
    Partition columns = transpose(a);
    int cur = -1;
    for (int j = 0; j < columns.rank(); ++j) {
        int w = append_wedge(cb, d, int(columns[j]), d);
        cur = cur < 0 ? w : cb.add(cur, w);
    }
    return cur;
}

int append_vertex(CertBuilder& cb, const Partition& a, const Composition& L) {
    int d = a.rank();
    Part mu = lcm_upto_part(d);
    auto cut = blocks(a, L);
    std::vector<int> block_ids;
    block_ids.reserve(size_t(L.size()));
    for (int i = 0; i < L.size(); ++i) {
        Part len = L[i];
        Partition block(cut[size_t(i)]);
        int cur;
        if (block.is_zero()) {
            int ax = cb.axiom(block);
            cur = ax;
            for (Part j = 2; j <= mu; ++j) cur = cb.lr(cur, ax, block);
        } else {
            int det = append_det(cb, block);
            cur = det;
            for (Part j = 2; j <= mu / len; ++j)
                cur = cb.lr(cur, det, constant_partition(int(len), j * block.weight()));
        }
        block_ids.push_back(cur);
    }
    return cb.blockwise(L, block_ids);
}

}  // namespace

bool operator==(const CertClaim& x, const CertClaim& y) {
    return x.power == y.power && x.base == y.base && x.target == y.target;
}

int CertBuilder::intern(CertStep step, CertClaim claim) {
    std::string key = step_key(step);
    auto it = pool_.find(key);
    if (it != pool_.end()) return it->second;
    steps_.push_back(std::move(step));
    claims_.push_back(std::move(claim));
    int id = int(steps_.size()) - 1;
    pool_.emplace(std::move(key), id);
    return id;
}

int CertBuilder::axiom(const Partition& a) {
    if (a.rank() == 0) throw std::invalid_argument("axiom needs a partition with positive rank");
    CertStep s;
    s.result = a;
    return intern(std::move(s), CertClaim{a, 1, a});
}

int CertBuilder::lr(int left_premise, int right_premise, const Partition& result) {
    const CertClaim& p = claim(left_premise);
    const CertClaim& q = claim(right_premise);
    if (p.base != q.base) throw std::logic_error("product premises have different bases");
    CertStep s;
    s.kind = StepKind::lr;
    s.premises = {left_premise, right_premise};
    s.left = p.target;
    s.right = q.target;
    s.result = result;
    CertClaim c{p.base, p.power + q.power, result};
    return intern(std::move(s), std::move(c));
}

int CertBuilder::add(int left_premise, int right_premise) {
    const CertClaim& p = claim(left_premise);
    const CertClaim& q = claim(right_premise);
    if (p.power != q.power) throw std::logic_error("sum premises have different powers");
    CertStep s;
    s.kind = StepKind::add;
    s.premises = {left_premise, right_premise};
    s.result = p.target + q.target;
    CertClaim c{p.base + q.base, p.power, s.result};
    return intern(std::move(s), std::move(c));
}

int CertBuilder::blockwise(const Composition& L, const std::vector<int>& premises) {
    if (L.size() == 0) throw std::logic_error("blockwise step needs a composition");
    if (int(premises.size()) != L.size()) throw std::logic_error("one premise per block");
    std::vector<Part> joined_base, joined_target;
    Part power = claim(premises[0]).power;
    for (size_t i = 0; i < premises.size(); ++i) {
        const CertClaim& p = claim(premises[i]);
        if (p.power != power) throw std::logic_error("blocks have different powers");
        if (p.base.rank() != L[int(i)]) throw std::logic_error("block rank does not match the composition");
        for (int r = 0; r < p.base.rank(); ++r) {
            joined_base.push_back(p.base[r]);
            joined_target.push_back(p.target[r]);
        }
    }
    CertStep s;
    s.kind = StepKind::blockwise;
    s.premises = premises;
    s.composition = L;
    s.result = Partition(std::move(joined_target));
    CertClaim c{Partition(std::move(joined_base)), power, s.result};
    return intern(std::move(s), std::move(c));
}

Certificate CertBuilder::finish(int conclusion) const {
    const CertClaim& c = claims_.at(size_t(conclusion));
    return Certificate{c.base.rank(), c, steps_, conclusion};
}

Certificate build_wedge_certificate(int d, int k, int m) {
    if (d < 1) throw std::invalid_argument("rank must be positive");
    if (k < 1 || k > d) throw std::invalid_argument("column height must be between one and the rank");
    if (m < 1) throw std::invalid_argument("power must be positive");
    CertBuilder cb;
    return cb.finish(append_wedge(cb, d, k, m));
}

Certificate build_det_certificate(const Partition& a) {
    if (a.rank() == 0 || a.is_zero()) throw std::invalid_argument("determinant certificates need a non-zero partition");
    CertBuilder cb;
    return cb.finish(append_det(cb, a));
}

Certificate build_vertex_certificate(const Partition& a, const Composition& L) {
    if (a.rank() == 0 || a.is_zero()) throw std::invalid_argument("vertex certificates need a non-zero base");
    if (L.total() != a.rank()) throw std::invalid_argument("composition does not cut the rank of the base");
    CertBuilder cb;
    return cb.finish(append_vertex(cb, a, L));
}

DominanceCertificate build_dominance_certificate(const Partition& a, const Partition& b, Part m,
                                                 std::uint64_t support_cap) {
    if (a.rank() == 0 || a.rank() != b.rank())
        throw std::invalid_argument("base and dominated partition must share a positive rank");
    if (m < 1) throw std::invalid_argument("power must be positive");
    if (m > Part(std::numeric_limits<int>::max())) throw std::invalid_argument("power is too large");
    if (!scaled_dominance_leq(b, a))
        throw std::invalid_argument("dominated partition is not below the base: " +
                                    dominance_diagnostic(b, a, true));
    int d = a.rank();
    DominanceCone cone(a);
    TensorSupport support = tensor_power_support(b, int(m), false, support_cap);

    DominanceCertificate out;
    out.base = a;
    out.dominated = b;
    out.power = m;
    out.records.reserve(support.size());
    for (const auto& [c, mult] : support.entries()) {
        DominanceRecord rec;
        rec.target = c;
        rec.decomposition = cone.decompose(c);
        if (rec.decomposition.multiplier_sum() == 0) {
            rec.generator_part = Certificate{d, CertClaim{a, 0, Partition::zero(d)}, {}, -1};
        } else {
            CertBuilder cb;
            std::map<Composition, int> vertex_ids;
            int cur = -1;
            Partition running = Partition::zero(d);
            for (const auto& term : rec.decomposition.terms) {
                if (term.mult == 0) continue;
                auto it = vertex_ids.find(term.label);
                if (it == vertex_ids.end())
                    it = vertex_ids.emplace(term.label, append_vertex(cb, a, term.label)).first;
                for (Part copy = 0; copy < term.mult; ++copy) {
                    running = running + term.generator;
                    cur = cur < 0 ? it->second : cb.lr(cur, it->second, running);
                }
            }
            rec.generator_part = cb.finish(cur);
        }
        out.records.push_back(std::move(rec));
    }
    return out;
}

Verdict verify_certificate(const Certificate& cert, bool deep, std::uint64_t support_cap) {
    if (cert.rank <= 0) return reject(-1, "rank must be positive");
    if (cert.claim.base.rank() != cert.rank || cert.claim.target.rank() != cert.rank)
        return reject(-1, "claim does not match the rank");
    if (cert.claim.power < 0) return reject(-1, "claim power is negative");
    int n = int(cert.steps.size());
    if (n == 0) {
        if (cert.conclusion != -1) return reject(-1, "empty certificate must conclude with the sentinel");
        if (cert.claim.power != 0 || !cert.claim.target.is_zero())
            return reject(-1, "empty certificate only establishes the zero target at power zero");
        return {true, -1, ""};
    }
    if (cert.conclusion < 0 || cert.conclusion >= n) return reject(-1, "conclusion is out of range");

    auto claims = std::vector<CertClaim>(size_t(n));
    for (int i = 0; i < n; ++i) {
        const CertStep& step = cert.steps[size_t(i)];
        for (int p : step.premises)
            if (p < 0 || p >= i) return reject(i, "premise must point to an earlier step");
        switch (step.kind) {
            case StepKind::axiom: {
                if (!step.premises.empty()) return reject(i, "axiom takes no premises");
                if (step.result.rank() == 0) return reject(i, "axiom result is empty");
                claims[size_t(i)] = CertClaim{step.result, 1, step.result};
                break;
            }
            case StepKind::lr: {
                if (step.premises.size() != 2) return reject(i, "product step takes two premises");
                const CertClaim& p = claims[size_t(step.premises[0])];
                const CertClaim& q = claims[size_t(step.premises[1])];
                if (p.base != q.base) return reject(i, "premises have different bases");
                if (p.target != step.left || q.target != step.right)
                    return reject(i, "stated factors do not match the premise targets");
                if (step.result.rank() != step.left.rank()) return reject(i, "result has the wrong rank");
                if (step.result.weight() != step.left.weight() + step.right.weight())
                    return reject(i, "weight is not conserved");
                Part power = 0;
                if (__builtin_add_overflow(p.power, q.power, &power)) return reject(i, "power overflow");
                if (!lr_positive(step.left, step.right, step.result))
                    return reject(i, "result is not a constituent of the product");
                claims[size_t(i)] = CertClaim{p.base, power, step.result};
                break;
            }
            case StepKind::add: {
                if (step.premises.size() != 2) return reject(i, "sum step takes two premises");
                const CertClaim& p = claims[size_t(step.premises[0])];
                const CertClaim& q = claims[size_t(step.premises[1])];
                if (p.power != q.power) return reject(i, "premises have different powers");
                if (p.base.rank() != q.base.rank()) return reject(i, "premises have different ranks");
                if (step.result != p.target + q.target)
                    return reject(i, "result is not the componentwise sum of the premise targets");
                claims[size_t(i)] = CertClaim{p.base + q.base, p.power, step.result};
                break;
            }
            case StepKind::blockwise: {
                int r = step.composition.size();
                if (r == 0) return reject(i, "blockwise step needs a composition");
                if (int(step.premises.size()) != r) return reject(i, "one premise per block");
                std::vector<Part> joined_base, joined_target;
                Part power = claims[size_t(step.premises[0])].power;
                for (int j = 0; j < r; ++j) {
                    const CertClaim& p = claims[size_t(step.premises[size_t(j)])];
                    if (p.power != power) return reject(i, "blocks have different powers");
                    if (p.base.rank() != step.composition[j])
                        return reject(i, "block rank does not match the composition");
                    for (int t = 0; t < p.base.rank(); ++t) {
                        joined_base.push_back(p.base[t]);
                        joined_target.push_back(p.target[t]);
                    }
                }
                if (!is_partition_sequence(joined_base)) return reject(i, "joined bases are not a partition");
                if (!is_partition_sequence(joined_target))
                    return reject(i, "joined targets are not a partition");
                if (step.result != Partition(joined_target))
                    return reject(i, "result does not join the block targets");
                claims[size_t(i)] = CertClaim{Partition(std::move(joined_base)), power, step.result};
                break;
            }
        }
    }
    if (claims[size_t(cert.conclusion)] != cert.claim)
        return reject(-1, "conclusion does not establish the claim");

    if (deep) {
        for (int i = 0; i < n; ++i) {
            StepKind kind = cert.steps[size_t(i)].kind;
            if (kind != StepKind::add && kind != StepKind::blockwise) continue;
            const CertClaim& c = claims[size_t(i)];
            if (c.power > Part(std::numeric_limits<int>::max())) continue;
            try {
                if (!contains_in_power(c.base, c.target, int(c.power), support_cap))
                    return reject(i, "oracle re-check refuted the step");
            } catch (const cap_exceeded&) {
                // deep mode only promises re-checks where the support fits the cap
            }
        }
    }
    return {true, -1, ""};
}

Verdict verify_dominance_certificate(const DominanceCertificate& cert, bool deep,
                                     std::uint64_t support_cap) {
    const Partition& a = cert.base;
    const Partition& b = cert.dominated;
    if (a.rank() == 0 || a.rank() != b.rank())
        return reject(-1, "base and dominated partition must share a positive rank");
    if (a.is_zero()) return reject(-1, "base must be non-zero");
    if (cert.power < 1) return reject(-1, "power must be positive");
    if (cert.power > Part(std::numeric_limits<int>::max())) return reject(-1, "power is too large");
    if (!scaled_dominance_leq(b, a)) return reject(-1, "dominated partition is not below the base");

    TensorSupport support = tensor_power_support(b, int(cert.power), false, support_cap);
    std::set<Partition> covered;
    for (const auto& rec : cert.records) {
        if (!support.contains(rec.target))
            return reject(-1, "record " + format_partition(rec.target) + " is not in the support");
        if (!covered.insert(rec.target).second)
            return reject(-1, "duplicate record " + format_partition(rec.target));
    }
    for (const auto& [c, mult] : support.entries())
        if (!covered.count(c)) return reject(-1, "support element " + format_partition(c) + " has no record");

    int d = a.rank();
    Int mu = lcm_upto_part(d);
    DominanceCone cone(a);
    auto domain = cone.sigma();
    for (const auto& rec : cert.records) {
        std::string where = "record " + format_partition(rec.target) + ": ";
        const Decomposition& dec = rec.decomposition;
        if (dec.base != a) return reject(-1, where + "decomposition base mismatch");
        if (dec.target != rec.target) return reject(-1, where + "decomposition target mismatch");
        if (dec.remainder.rank() != d) return reject(-1, where + "remainder has the wrong rank");
        auto acc = IntVec(size_t(d), 0);
        auto gen_sum = IntVec(size_t(d), 0);
        Int s = 0;
        for (const auto& term : dec.terms) {
            if (term.mult < 0) return reject(-1, where + "negative multiplier");
            if (term.label.total() != d || term.generator.rank() != d)
                return reject(-1, where + "term does not match the rank");
            if (cone_generator(a, term.label).scaled != term.generator)
                return reject(-1, where + "stated generator does not match its composition");
            for (int r = 0; r < d; ++r) gen_sum[size_t(r)] += Int(term.mult) * term.generator[r];
            s += term.mult;
        }
        for (int r = 0; r < d; ++r) acc[size_t(r)] = gen_sum[size_t(r)] + dec.remainder[r];
        for (int r = 0; r < d; ++r)
            if (acc[size_t(r)] != rec.target[r])
                return reject(-1, where + "decomposition does not reconstruct the target");
        if (!std::binary_search(domain.begin(), domain.end(), dec.remainder))
            return reject(-1, where + "remainder is outside the fundamental domain");
        if (Int(rec.target.weight()) != Int(dec.remainder.weight()) + mu * a.weight() * s)
            return reject(-1, where + "weight identity fails");

        const Certificate& gc = rec.generator_part;
        if (gc.claim.base != a) return reject(-1, where + "generator certificate has the wrong base");
        if (Int(gc.claim.power) != mu * s)
            return reject(-1, where + "generator certificate has the wrong power");
        auto gpart = std::vector<Part>(size_t(d));
        for (int r = 0; r < d; ++r) gpart[size_t(r)] = gen_sum[size_t(r)].convert_to<Part>();
        if (gc.claim.target != Partition(std::move(gpart)))
            return reject(-1, where + "generator certificate does not cover the generator part");
        Verdict v = verify_certificate(gc, deep, support_cap);
        if (!v.accepted)
            return reject(-1, where + "generator certificate rejected: " + v.reason);
    }
    return {true, -1, ""};
}

}  // namespace domcert
