#include "core/selftest.hpp"

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "core/certificates.hpp"
#include "core/cone.hpp"
#include "core/json_io.hpp"
#include "core/lr.hpp"
#include "core/parallel.hpp"
#include "core/partition.hpp"

namespace domcert {

namespace {

struct UnitOutcome {
    long checks = 0;
    long failures = 0;
};

using Unit = std::function<void(UnitOutcome&)>;

struct Expect {
    UnitOutcome& out;
    void operator()(bool ok) {
        ++out.checks;
        if (!ok) ++out.failures;
    }
};

void order_axioms(UnitOutcome& out) {
    Expect expect{out};
    for (int d = 1; d <= 3; ++d) {
        auto all = partitions_up_to_weight(4, d);
        for (const Partition& x : all) {
            expect(dominance_leq(x, x));
            for (const Partition& y : all) {
                if (dominance_leq(x, y)) {
                    expect(x.weight() == y.weight());
                    if (dominance_leq(y, x)) expect(x == y);
                }
            }
        }
    }
}

void order_transitivity(UnitOutcome& out) {
    Expect expect{out};
    for (int d = 1; d <= 3; ++d) {
        auto all = partitions_up_to_weight(d < 3 ? 4 : 3, d);
        for (const Partition& x : all)
            for (const Partition& y : all) {
                if (!dominance_leq(x, y)) continue;
                for (const Partition& z : all)
                    if (dominance_leq(y, z)) expect(dominance_leq(x, z));
            }
    }
}

void scaled_order_rules(UnitOutcome& out) {
    Expect expect{out};
    bool threw = false;
    try {
        scaled_dominance_leq(Partition::zero(2), Partition::zero(2));
    } catch (const std::invalid_argument&) {
        threw = true;
    }
    expect(threw);
    for (int d = 1; d <= 3; ++d)
        for (const Partition& x : partitions_up_to_weight(3, d)) {
            if (x.is_zero()) continue;
            expect(scaled_dominance_leq(Partition::zero(d), x));
            expect(!scaled_dominance_leq(x, Partition::zero(d)));
            for (const Partition& y : partitions_up_to_weight(3, d)) {
                if (y.is_zero()) continue;
                bool base = scaled_dominance_leq(x, y);
                for (Part c = 2; c <= 3; ++c) {
                    expect(scaled_dominance_leq(scaled(x, c), y) == base);
                    expect(scaled_dominance_leq(x, scaled(y, c)) == base);
                }
            }
        }
}

void product_commutativity(UnitOutcome& out) {
    Expect expect{out};
    for (int d = 1; d <= 3; ++d) {
        auto all = partitions_up_to_weight(3, d);
        for (const Partition& x : all)
            for (const Partition& y : all) {
                auto xy = tensor_product(x, y);
                auto yx = tensor_product(y, x);
                expect(xy.entries() == yx.entries());
            }
    }
}

void product_dimensions(UnitOutcome& out) {
    Expect expect{out};
    for (int d = 1; d <= 3; ++d) {
        auto all = partitions_up_to_weight(3, d);
        for (const Partition& x : all)
            for (const Partition& y : all) {
                auto product = tensor_product(x, y);
                Int total = 0;
                for (const auto& [c, mult] : product.entries()) total += mult * schur_dimension(c, d);
                expect(total == schur_dimension(x, d) * schur_dimension(y, d));
            }
    }
}

void product_dominance_bound(UnitOutcome& out) {
    Expect expect{out};
    for (int d = 1; d <= 3; ++d) {
        auto all = partitions_up_to_weight(3, d);
        for (const Partition& x : all)
            for (const Partition& y : all) {
                auto product = tensor_product(x, y);
                for (const auto& [c, mult] : product.entries()) expect(dominance_leq(c, x + y));
            }
    }
}

void cone_checks(UnitOutcome& out, int d) {
    Expect expect{out};
    Part mu = lcm_upto_part(d);
    for (const Partition& a : partitions_up_to_weight(3, d)) {
        if (a.is_zero()) continue;
        DominanceCone cone(a);
        for (const ConeGenerator& gen : cone.generators()) {
            expect(cone.member(gen.scaled));
            Decomposition dec = cone.decompose(gen.scaled);
            expect(dec.remainder.is_zero());
            expect(dec.multiplier_sum() == 1);
        }
        for (const Partition& f : cone.sigma()) {
            expect(cone.member(f));
            expect(f.weight() < Part(d) * mu * a.weight());
        }
    }
}

void certificate_pipeline(UnitOutcome& out) {
    Expect expect{out};
    for (int d = 1; d <= 2; ++d)
        for (const Partition& a : partitions_up_to_weight(2, d)) {
            if (a.is_zero()) continue;
            for (const Partition& b : partitions_up_to_weight(2, d)) {
                if (b.is_zero() || !scaled_dominance_leq(b, a)) continue;
                for (Part m = 1; m <= 2; ++m) {
                    DominanceCertificate dc = build_dominance_certificate(a, b, m);
                    expect(verify_dominance_certificate(dc).accepted);
                    expect(verify_dominance_certificate(dc, true).accepted);
                    DominanceCertificate reread = dominance_from_json(parse_json(dump_json(to_json(dc))));
                    expect(verify_dominance_certificate(reread).accepted);
                }
            }
        }
}

void certificate_rejections(UnitOutcome& out) {
    Expect expect{out};
    Certificate wedge = build_wedge_certificate(2, 1, 2);
    wedge.steps[1].result = Partition(std::vector<Part>{2, 0});
    expect(!verify_certificate(wedge).accepted);

    Certificate det = build_det_certificate(Partition(std::vector<Part>{2, 0}));
    det.conclusion = 0;
    expect(!verify_certificate(det).accepted);

    DominanceCertificate dc =
        build_dominance_certificate(Partition(std::vector<Part>{1, 0}), Partition(std::vector<Part>{1, 0}), 2);
    dc.records.pop_back();
    expect(!verify_dominance_certificate(dc).accepted);

    dc = build_dominance_certificate(Partition(std::vector<Part>{1, 0}), Partition(std::vector<Part>{1, 0}), 2);
    dc.power = 3;
    expect(!verify_dominance_certificate(dc).accepted);
}

}  // namespace

SelfTestReport run_selftest(int jobs) {
    auto suites = std::vector<std::pair<std::string, std::vector<Unit>>>();
    suites.push_back({"dominance-order", {order_axioms, order_transitivity, scaled_order_rules}});
    suites.push_back({"tensor-products", {product_commutativity, product_dimensions, product_dominance_bound}});
    suites.push_back({"cone-geometry",
                      {[](UnitOutcome& out) { cone_checks(out, 1); },
                       [](UnitOutcome& out) { cone_checks(out, 2); },
                       [](UnitOutcome& out) { cone_checks(out, 3); }}});
    suites.push_back({"certificates", {certificate_pipeline, certificate_rejections}});

    auto flat = std::vector<const Unit*>();
    for (const auto& [name, units] : suites)
        for (const Unit& unit : units) flat.push_back(&unit);
    auto slots = std::vector<UnitOutcome>(flat.size());
    parallel_for(flat.size(), jobs, [&](std::size_t i) { (*flat[i])(slots[i]); });

    Json suite_reports = Json::array();
    bool all_ok = true;
    std::size_t cursor = 0;
    for (const auto& [name, units] : suites) {
        long checks = 0;
        long failures = 0;
        for (std::size_t u = 0; u < units.size(); ++u, ++cursor) {
            checks += slots[cursor].checks;
            failures += slots[cursor].failures;
        }
        Json entry;
        entry["name"] = name;
        entry["checks"] = checks;
        entry["failures"] = failures;
        entry["status"] = failures == 0 ? "ok" : "failed";
        suite_reports.push_back(std::move(entry));
        all_ok = all_ok && failures == 0;
    }
    Json report;
    report["status"] = all_ok ? "ok" : "failed";
    report["suites"] = std::move(suite_reports);
    return {all_ok, dump_json(report)};
}

}  // namespace domcert
