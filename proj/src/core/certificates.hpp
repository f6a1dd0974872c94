#pragma once

// Machine-checkable derivations of tensor-power containments.  A certificate
// is an acyclic list of steps, each one an instance of a containment rule;
// the verifier replays every step against the Littlewood-Richardson oracle
// and exact arithmetic, so checking never searches.

#include "core/cone.hpp"
#include "core/lr.hpp"

#include <string>
#include <vector>

namespace domcert {

enum class StepKind { axiom, lr, add, blockwise };

// What a step establishes: target is a constituent of base raised to power.
struct CertClaim {
    Partition base;
    Part power = 0;
    Partition target;
};

bool operator==(const CertClaim& x, const CertClaim& y);
inline bool operator!=(const CertClaim& x, const CertClaim& y) { return !(x == y); }

// axiom:     no premises, result in result^1
// lr:        premises p, q with a common base; left/right restate their
//            targets and the result is a constituent of left*right
// add:       premises p, q at one power; bases and targets add componentwise
// blockwise: one premise per block of the composition; bases and targets
//            join along it
struct CertStep {
    StepKind kind = StepKind::axiom;
    std::vector<int> premises;
    Composition composition;  // blockwise only
    Partition left;           // lr only
    Partition right;          // lr only
    Partition result;
};

struct Certificate {
    int rank = 0;
    CertClaim claim;
    std::vector<CertStep> steps;
    int conclusion = -1;  // -1 exactly for the empty certificate of power 0
};

struct Verdict {
    bool accepted = false;
    int failing_step = -1;  // -1 when the failure is not tied to a step
    std::string reason;
};

// Appends steps with hash-consing: re-deriving an identical step returns
// the existing id, so shared sub-derivations are stored once.
class CertBuilder {
public:
    int axiom(const Partition& a);
    int lr(int left_premise, int right_premise, const Partition& result);
    int add(int left_premise, int right_premise);
    int blockwise(const Composition& L, const std::vector<int>& premises);

    const CertClaim& claim(int id) const { return claims_[size_t(id)]; }
    Certificate finish(int conclusion) const;

private:
    int intern(CertStep step, CertClaim claim);

    std::vector<CertStep> steps_;
    std::vector<CertClaim> claims_;
    std::map<std::string, int> pool_;
};

// One record per constituent of the dominated power: its decomposition
// against the base cone and a certificate for the generator part.
struct DominanceRecord {
    Partition target;
    Decomposition decomposition;
    Certificate generator_part;
};

struct DominanceCertificate {
    Partition base;
    Partition dominated;
    Part power = 0;
    std::vector<DominanceRecord> records;
};

// The column partition with k leading ones, raised to the m-th power:
// certifies q*1_d + (1_s v 0) in (1_k v 0)^m where mk = qd + s, 0 <= s < d.
Certificate build_wedge_certificate(int d, int k, int m);

// |a| * 1_d in a^d, one wedge chain per column of the transpose, merged by
// componentwise sums.
Certificate build_det_certificate(const Partition& a);

// The scaled cone generator of the composition inside a^lcm(1..d): per
// block, a det chain repeated up to the common exponent, then one
// blockwise join.
Certificate build_vertex_certificate(const Partition& a, const Composition& L);

// For every constituent of the dominated partition's m-th power, a
// decomposition against the base and a chained generator certificate.
DominanceCertificate build_dominance_certificate(const Partition& a, const Partition& b, Part m,
                                                 std::uint64_t support_cap = kDefaultSupportCap);

// Checks structure, acyclicity, weight conservation and every rule
// application.  Deep mode re-confirms derived claims against the tensor
// power oracle where the support cap permits.
Verdict verify_certificate(const Certificate& cert, bool deep = false,
                           std::uint64_t support_cap = kDefaultSupportCap);

// Accepts exactly when the records cover the full support, decompositions
// reconstruct with remainders in the fundamental domain, weight bookkeeping
// holds, and every generator certificate verifies.
Verdict verify_dominance_certificate(const DominanceCertificate& cert, bool deep = false,
                                     std::uint64_t support_cap = kDefaultSupportCap);

}  // namespace domcert
