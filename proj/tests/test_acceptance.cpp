// Acceptance gate for the release: every criterion prints one PASS or FAIL
// line with a short account of what was swept, and the binary exits non-zero
// if any criterion fails. Criteria with a stated time budget fail when they
// run over it.

#include <algorithm>
#include <chrono>
#include <exception>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "core/json_io.hpp"
#include "core/selftest.hpp"

using namespace domcert;

namespace {

using Clock = std::chrono::steady_clock;

Partition P(std::vector<Part> parts) { return Partition(std::move(parts)); }

Partition wedge_shape(int d, int k) {
    std::vector<Part> parts(size_t(d), 0);
    for (int i = 0; i < k; ++i) parts[size_t(i)] = 1;
    return Partition(parts);
}

// Every constituent of a product lies below the sum of the factors in the
// dominance order.
bool product_dominance_sweep(std::string& detail) {
    long long constituents = 0;
    for (int d = 1; d <= 4; ++d) {
        auto shapes = partitions_up_to_weight(5, d);
        for (const Partition& a : shapes)
            for (const Partition& b : shapes) {
                Partition sum = a + b;
                TensorSupport product = tensor_product(a, b, false);
                for (const auto& [c, mult] : product.entries()) {
                    ++constituents;
                    if (!dominance_leq(c, sum)) {
                        detail = format_partition(c) + " escapes " + format_partition(sum);
                        return false;
                    }
                }
            }
    }
    detail = std::to_string(constituents) + " constituents checked";
    return true;
}

// Multiplicities conserve dimension: the dimensions of the constituents,
// counted with multiplicity, add up to the product of the factor dimensions.
// Rank 10 never truncates weights up to 5 + 5.
bool dimension_conservation_sweep(std::string& detail) {
    const int rank = 10;
    long long products = 0;
    auto shapes = partitions_up_to_weight(5, rank);
    for (const Partition& a : shapes)
        for (const Partition& b : shapes) {
            TensorSupport product = tensor_product(a, b);
            Int total = 0;
            for (const auto& [c, mult] : product.entries()) total += mult * schur_dimension(c, rank);
            if (total != schur_dimension(a, rank) * schur_dimension(b, rank)) {
                detail = "dimension mismatch for " + format_partition(a) + " * " + format_partition(b);
                return false;
            }
            ++products;
        }
    detail = std::to_string(products) + " products balanced";
    return true;
}

bool wedge_certificate_sweep(std::string& detail) {
    long long built = 0, confirmed = 0;
    for (int d = 1; d <= 5; ++d)
        for (int k = 1; k <= d; ++k)
            for (int m = 1; m <= 5; ++m) {
                Certificate cert = build_wedge_certificate(d, k, m);
                Part q = Part(m) * k / d, s = Part(m) * k % d;
                std::vector<Part> expected(size_t(d), q);
                for (Part i = 0; i < s; ++i) expected[size_t(i)] += 1;
                if (cert.claim.base != wedge_shape(d, k) || cert.claim.power != m ||
                    cert.claim.target != Partition(expected)) {
                    detail = "wrong claim at d=" + std::to_string(d) + " k=" + std::to_string(k) +
                             " m=" + std::to_string(m);
                    return false;
                }
                Verdict v = verify_certificate(cert);
                if (!v.accepted) {
                    detail = "rejected at d=" + std::to_string(d) + " k=" + std::to_string(k) +
                             " m=" + std::to_string(m) + ": " + v.reason;
                    return false;
                }
                ++built;
                if (m * k <= 20) {
                    if (!contains_in_power(cert.claim.base, cert.claim.target, m)) {
                        detail = "oracle refutes d=" + std::to_string(d) + " k=" + std::to_string(k) +
                                 " m=" + std::to_string(m);
                        return false;
                    }
                    ++confirmed;
                }
            }
    detail = std::to_string(built) + " certificates verified, " + std::to_string(confirmed) +
             " oracle-confirmed";
    return true;
}

bool det_certificate_sweep(std::string& detail) {
    long long built = 0;
    for (int d = 1; d <= 4; ++d)
        for (const Partition& a : partitions_up_to_weight(4, d)) {
            if (a.is_zero()) continue;
            Certificate cert = build_det_certificate(a);
            Partition target(std::vector<Part>(size_t(d), a.weight()));
            if (cert.claim.base != a || cert.claim.power != d || cert.claim.target != target) {
                detail = "wrong claim for " + format_partition(a);
                return false;
            }
            Verdict v = verify_certificate(cert);
            if (!v.accepted) {
                detail = "rejected for " + format_partition(a) + ": " + v.reason;
                return false;
            }
            if (!contains_in_power(a, target, d)) {
                detail = "oracle refutes " + format_partition(a);
                return false;
            }
            ++built;
        }
    detail = std::to_string(built) + " certificates verified and oracle-confirmed";
    return true;
}

bool vertex_certificate_sweep(std::string& detail) {
    long long built = 0, confirmed = 0, capped = 0;
    for (int d = 1; d <= 3; ++d) {
        Part mu = lcm_upto_part(d);
        for (const Partition& a : partitions_up_to_weight(3, d)) {
            if (a.is_zero()) continue;
            for (const Composition& L : compositions(d)) {
                Certificate cert = build_vertex_certificate(a, L);
                ConeGenerator gen = cone_generator(a, L);
                if (cert.claim.base != a || cert.claim.power != mu || cert.claim.target != gen.scaled) {
                    detail = "wrong claim for " + format_partition(a) + " " + format_composition(L);
                    return false;
                }
                Verdict v = verify_certificate(cert);
                if (!v.accepted) {
                    detail = "rejected for " + format_partition(a) + " " + format_composition(L) +
                             ": " + v.reason;
                    return false;
                }
                ++built;
                try {
                    if (!contains_in_power(a, cert.claim.target, int(mu))) {
                        detail = "oracle refutes " + format_partition(a) + " " + format_composition(L);
                        return false;
                    }
                    ++confirmed;
                } catch (const cap_exceeded&) {
                    ++capped;
                }
            }
        }
    }
    detail = std::to_string(built) + " certificates verified, " + std::to_string(confirmed) +
             " oracle-confirmed, " + std::to_string(capped) + " skipped at the cap";
    return true;
}

// Every integer point of the cone inside three fundamental-weight layers
// decomposes exactly, with the remainder inside the finite fundamental set;
// scaled generators are integral one rank further out.
bool cone_geometry_sweep(std::string& detail) {
    long long points = 0, bases = 0;
    for (int d = 1; d <= 4; ++d) {
        Part mu = lcm_upto_part(d);
        for (const Partition& a : partitions_up_to_weight(6, d)) {
            if (a.is_zero()) continue;
            ++bases;
            DominanceCone cone(a);
            auto sigma = cone.sigma();
            std::string failure;
            for_each_partition_up_to(3 * mu * a.weight(), d, [&](const Partition& b) {
                if (!failure.empty() || !cone.member(b)) return;
                Decomposition dec = cone.decompose(b);
                std::vector<Part> parts = dec.remainder.parts();
                Part s = 0;
                for (const DecompositionTerm& term : dec.terms) {
                    for (int r = 0; r < d; ++r) parts[size_t(r)] += term.mult * term.generator[r];
                    s += term.mult;
                }
                if (parts != b.parts())
                    failure = "reconstruction fails at " + format_partition(b);
                else if (!std::binary_search(sigma.begin(), sigma.end(), dec.remainder))
                    failure = "remainder escapes at " + format_partition(b);
                else if (b.weight() != dec.remainder.weight() + mu * a.weight() * s)
                    failure = "weight bookkeeping fails at " + format_partition(b);
                ++points;
            });
            if (!failure.empty()) {
                detail = failure + " over " + format_partition(a);
                return false;
            }
        }
    }
    long long generators = 0;
    for (int d = 1; d <= 6; ++d) {
        Part mu = lcm_upto_part(d);
        for (const Partition& a : partitions_up_to_weight(8, d)) {
            if (a.is_zero()) continue;
            Partition ma = scaled(a, mu);
            for (const Composition& L : compositions(d)) {
                ConeGenerator gen = cone_generator(ma, L);
                for (const Rat& entry : gen.vector)
                    if (denominator_int(entry) != 1) {
                        detail = "fractional generator for " + format_partition(ma) + " " +
                                 format_composition(L);
                        return false;
                    }
                ++generators;
            }
        }
    }
    detail = std::to_string(points) + " cone points decomposed over " + std::to_string(bases) +
             " bases, " + std::to_string(generators) + " scaled generators integral";
    return true;
}

// The full pipeline: for every dominated pair the certificate builds,
// verifies, and every record satisfies the weight identity
// power * |dominated| = |remainder| + lcm(1..d) * |base| * multiplier sum.
bool dominance_pipeline_sweep(std::string& detail) {
    long long certificates = 0, records = 0;
    for (int d = 1; d <= 3; ++d) {
        Part mu = lcm_upto_part(d);
        auto shapes = partitions_up_to_weight(3, d);
        for (const Partition& a : shapes) {
            if (a.is_zero()) continue;
            for (const Partition& b : shapes) {
                if (!scaled_dominance_leq(b, a)) continue;
                for (Part m = 1; m <= 3; ++m) {
                    DominanceCertificate dc = build_dominance_certificate(a, b, m);
                    Verdict v = verify_dominance_certificate(dc);
                    if (!v.accepted) {
                        detail = "rejected for " + format_partition(a) + " over " +
                                 format_partition(b) + " at power " + std::to_string(m) + ": " +
                                 v.reason;
                        return false;
                    }
                    ++certificates;
                    for (const DominanceRecord& record : dc.records) {
                        Part s = record.decomposition.multiplier_sum();
                        if (m * b.weight() !=
                            record.decomposition.remainder.weight() + mu * a.weight() * s) {
                            detail = "weight identity fails at record " +
                                     format_partition(record.target);
                            return false;
                        }
                        ++records;
                    }
                }
            }
        }
    }
    detail = std::to_string(certificates) + " certificates verified, " + std::to_string(records) +
             " record identities checked";
    return true;
}

// Integers whose legal range is structural (step ids, premises, the
// conclusion) get out-of-range values; every other integer is nudged by one
// in both directions.
void collect_integer_mutations(const Json& node, const std::string& path, const std::string& key,
                               std::vector<std::pair<std::string, Json>>& out) {
    if (node.is_object()) {
        for (const auto& [k, v] : node.items()) collect_integer_mutations(v, path + "/" + k, k, out);
    } else if (node.is_array()) {
        for (size_t i = 0; i < node.size(); ++i)
            collect_integer_mutations(node[i], path + "/" + std::to_string(i), key, out);
    } else if (node.is_number_integer()) {
        if (key == "premises" || key == "conclusion" || key == "id") {
            out.emplace_back(path, Json(-5));
            out.emplace_back(path, Json(9999));
        } else {
            Part value = node.get<Part>();
            out.emplace_back(path, Json(value - 1));
            out.emplace_back(path, Json(value + 1));
        }
    }
}

template <typename Parse, typename Verify>
bool reject_all_mutations(const Json& document, Parse parse, Verify verify, long long& tried,
                          std::string& detail) {
    auto sites = std::vector<std::pair<std::string, Json>>();
    collect_integer_mutations(document, "", "", sites);
    for (const auto& [pointer, value] : sites) {
        Json mutated = document;
        mutated[Json::json_pointer(pointer)] = value;
        bool detected = false;
        try {
            detected = !verify(parse(parse_json(dump_json(mutated)))).accepted;
        } catch (const std::exception&) {
            detected = true;
        }
        ++tried;
        if (!detected) {
            detail = "mutation at " + pointer + " to " + value.dump() + " slipped through";
            return false;
        }
    }
    return true;
}

bool tamper_rejection_sweep(std::string& detail) {
    auto parse_cert = [](const Json& j) { return certificate_from_json(j); };
    auto verify_cert = [](const Certificate& c) { return verify_certificate(c); };
    auto parse_dom = [](const Json& j) { return dominance_from_json(j); };
    auto verify_dom = [](const DominanceCertificate& c) { return verify_dominance_certificate(c); };

    long long tried = 0;
    for (const auto& [a, b, m] : std::vector<std::tuple<Partition, Partition, Part>>{
             {P({2, 0}), P({1, 1}), 2},
             {P({1, 0}), P({1, 0}), 3},
             {P({2, 1, 0}), P({1, 1, 1}), 2},
             {P({2, 1}), P({2, 1}), 1}}) {
        DominanceCertificate dc = build_dominance_certificate(a, b, m);
        if (!verify_dominance_certificate(dc).accepted) {
            detail = "corpus certificate does not verify";
            return false;
        }
        if (!reject_all_mutations(to_json(dc), parse_dom, verify_dom, tried, detail)) return false;
    }
    for (const Certificate& cert : {build_vertex_certificate(P({4, 2, 0}), Composition({1, 2})),
                                    build_det_certificate(P({2, 1, 0})),
                                    build_wedge_certificate(3, 2, 4)}) {
        if (!verify_certificate(cert).accepted) {
            detail = "corpus certificate does not verify";
            return false;
        }
        if (!reject_all_mutations(to_json(cert), parse_cert, verify_cert, tried, detail)) return false;
    }
    if (tried < 200) {
        detail = "only " + std::to_string(tried) + " mutations available";
        return false;
    }
    detail = std::to_string(tried) + " single-integer mutations all rejected";
    return true;
}

bool selftest_determinism_sweep(std::string& detail) {
    SelfTestReport first = run_selftest(1);
    if (!first.ok) {
        detail = "selftest failed at one worker";
        return false;
    }
    for (int jobs : {2, 8}) {
        SelfTestReport report = run_selftest(jobs);
        if (!report.ok) {
            detail = "selftest failed at " + std::to_string(jobs) + " workers";
            return false;
        }
        if (report.json != first.json) {
            detail = "report differs at " + std::to_string(jobs) + " workers";
            return false;
        }
    }
    detail = "reports identical at 1, 2 and 8 workers";
    return true;
}

struct Criterion {
    int number;
    const char* label;
    bool (*run)(std::string&);
    double seconds_limit;  // 0 when the criterion has no time budget
};

const Criterion kCriteria[] = {
    {1, "product constituents dominated by the factor sum", product_dominance_sweep, 120.0},
    {2, "product multiplicities conserve dimension", dimension_conservation_sweep, 120.0},
    {3, "wedge power certificates", wedge_certificate_sweep, 0.0},
    {4, "determinant power certificates", det_certificate_sweep, 600.0},
    {5, "cone vertex certificates", vertex_certificate_sweep, 0.0},
    {6, "integral cone decomposition", cone_geometry_sweep, 300.0},
    {7, "dominance certificate pipeline", dominance_pipeline_sweep, 0.0},
    {8, "single-integer tamper rejection", tamper_rejection_sweep, 0.0},
    {9, "selftest determinism across workers", selftest_determinism_sweep, 0.0},
};

}  // namespace

int main() {
    bool all_passed = true;
    for (const Criterion& criterion : kCriteria) {
        std::string detail;
        bool passed = false;
        auto start = Clock::now();
        try {
            passed = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (passed && criterion.seconds_limit > 0 && seconds > criterion.seconds_limit) {
            passed = false;
            detail += "; over the " + std::to_string(int(criterion.seconds_limit)) + "s budget";
        }
        std::ostringstream line;
        line << (passed ? "PASS" : "FAIL") << " criterion " << criterion.number << ": "
             << criterion.label << " (" << detail << "; " << std::fixed << std::setprecision(1)
             << seconds << "s)";
        std::cout << line.str() << std::endl;
        all_passed = all_passed && passed;
    }
    std::cout << (all_passed ? "acceptance: all criteria passed" : "acceptance: FAILURES above")
              << std::endl;
    return all_passed ? 0 : 1;
}
