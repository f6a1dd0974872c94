#include "domcert.h"

#include <cstdlib>
#include <cstring>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>

#include "core/certificates.hpp"
#include "core/cone.hpp"
#include "core/json_io.hpp"
#include "core/lr.hpp"
#include "core/numeric.hpp"
#include "core/partition.hpp"
#include "core/selftest.hpp"

using namespace domcert;

struct dc_cone {
    DominanceCone cone;
};

struct dc_document {
    bool dominance = false;
    Certificate cert;
    DominanceCertificate dom;
};

namespace {

thread_local std::string g_last_error;

char* alloc_string(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, text.data(), text.size() + 1);
    return out;
}

template <typename F>
dc_status guarded(F&& body) {
    g_last_error.clear();
    try {
        return body();
    } catch (const cap_exceeded& e) {
        g_last_error = e.what();
        return DC_ERROR_CAP;
    } catch (const Json::exception& e) {
        g_last_error = e.what();
        return DC_ERROR_ARGUMENT;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return DC_ERROR_ARGUMENT;
    } catch (const std::out_of_range& e) {
        g_last_error = e.what();
        return DC_ERROR_ARGUMENT;
    } catch (const std::overflow_error& e) {
        g_last_error = e.what();
        return DC_ERROR_ARGUMENT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return DC_ERROR_INTERNAL;
    }
}

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

std::uint64_t effective_cap(std::uint64_t support_cap) {
    return support_cap == 0 ? kDefaultSupportCap : support_cap;
}

int checked_power(std::int64_t power) {
    require(power >= 0 && power <= std::int64_t(std::numeric_limits<int>::max()),
            "power out of range");
    return int(power);
}

}  // namespace

extern "C" {

const char* dc_version(void) { return "1.0.0"; }

const char* dc_last_error(void) { return g_last_error.c_str(); }

void dc_string_free(char* text) { std::free(text); }

dc_status dc_dominates(const char* x, const char* y, int scaled) {
    return guarded([&]() -> dc_status {
        require(x && y, "null pointer");
        Partition px = parse_partition(x);
        Partition py = parse_partition(y);
        bool below = scaled ? scaled_dominance_leq(px, py) : dominance_leq(px, py);
        return below ? DC_OK : DC_FALSE;
    });
}

dc_status dc_dominance_diagnostic(const char* x, const char* y, int scaled, char** out_text) {
    return guarded([&]() -> dc_status {
        require(x && y && out_text, "null pointer");
        *out_text = alloc_string(dominance_diagnostic(parse_partition(x), parse_partition(y), scaled != 0));
        return DC_OK;
    });
}

dc_status dc_tensor_power(const char* base, int64_t power, int with_multiplicities,
                          uint64_t support_cap, char** out_json) {
    return guarded([&]() -> dc_status {
        require(base && out_json, "null pointer");
        auto support = tensor_power_support(parse_partition(base), checked_power(power),
                                            with_multiplicities != 0, effective_cap(support_cap));
        Json j = to_json(support);
        j["power"] = power;
        *out_json = alloc_string(dump_json(j));
        return DC_OK;
    });
}

dc_status dc_contains_in_power(const char* base, const char* target, int64_t power,
                               uint64_t support_cap) {
    return guarded([&]() -> dc_status {
        require(base && target, "null pointer");
        bool inside = contains_in_power(parse_partition(base), parse_partition(target),
                                        checked_power(power), effective_cap(support_cap));
        return inside ? DC_OK : DC_FALSE;
    });
}

dc_status dc_cone_create(const char* base, dc_cone** out) {
    return guarded([&]() -> dc_status {
        require(base && out, "null pointer");
        *out = new dc_cone{DominanceCone(parse_partition(base))};
        return DC_OK;
    });
}

void dc_cone_free(dc_cone* cone) { delete cone; }

dc_status dc_cone_member(const dc_cone* cone, const char* target) {
    return guarded([&]() -> dc_status {
        require(cone && target, "null pointer");
        return cone->cone.member(parse_partition(target)) ? DC_OK : DC_FALSE;
    });
}

dc_status dc_cone_vertices(const dc_cone* cone, char** out_json) {
    return guarded([&]() -> dc_status {
        require(cone && out_json, "null pointer");
        Json generators = Json::array();
        for (const ConeGenerator& gen : cone->cone.generators()) {
            Json g;
            g["label"] = to_json(gen.label);
            g["scaled"] = to_json(gen.scaled);
            Json point = Json::array();
            for (const Rat& entry : gen.vector) point.push_back(to_fraction(entry));
            g["vertex"] = std::move(point);
            generators.push_back(std::move(g));
        }
        Json j;
        j["base"] = to_json(cone->cone.base());
        j["dimension"] = cone->cone.dimension();
        j["scale"] = cone->cone.scale();
        j["generators"] = std::move(generators);
        *out_json = alloc_string(dump_json(j));
        return DC_OK;
    });
}

dc_status dc_cone_sigma(const dc_cone* cone, char** out_json) {
    return guarded([&]() -> dc_status {
        require(cone && out_json, "null pointer");
        auto points = cone->cone.sigma();
        Json list = Json::array();
        for (const Partition& p : points) list.push_back(to_json(p));
        Json j;
        j["base"] = to_json(cone->cone.base());
        j["size"] = points.size();
        j["points"] = std::move(list);
        *out_json = alloc_string(dump_json(j));
        return DC_OK;
    });
}

dc_status dc_cone_decompose(const dc_cone* cone, const char* target, char** out_json) {
    return guarded([&]() -> dc_status {
        require(cone && target && out_json, "null pointer");
        Decomposition dec = cone->cone.decompose(parse_partition(target));
        *out_json = alloc_string(dump_json(to_json(dec)));
        return DC_OK;
    });
}

dc_status dc_certify_wedge(int rank, int column, int64_t power, char** out_json) {
    return guarded([&]() -> dc_status {
        require(out_json != nullptr, "null pointer");
        *out_json = alloc_string(dump_json(to_json(build_wedge_certificate(rank, column, checked_power(power)))));
        return DC_OK;
    });
}

dc_status dc_certify_det(const char* base, char** out_json) {
    return guarded([&]() -> dc_status {
        require(base && out_json, "null pointer");
        *out_json = alloc_string(dump_json(to_json(build_det_certificate(parse_partition(base)))));
        return DC_OK;
    });
}

dc_status dc_certify_vertex(const char* base, const char* composition, char** out_json) {
    return guarded([&]() -> dc_status {
        require(base && composition && out_json, "null pointer");
        Certificate cert = build_vertex_certificate(parse_partition(base), parse_composition(composition));
        *out_json = alloc_string(dump_json(to_json(cert)));
        return DC_OK;
    });
}

dc_status dc_certify_dominance(const char* base, const char* dominated, int64_t power,
                               uint64_t support_cap, char** out_json) {
    return guarded([&]() -> dc_status {
        require(base && dominated && out_json, "null pointer");
        DominanceCertificate cert =
            build_dominance_certificate(parse_partition(base), parse_partition(dominated),
                                        checked_power(power), effective_cap(support_cap));
        *out_json = alloc_string(dump_json(to_json(cert)));
        return DC_OK;
    });
}

dc_status dc_document_parse(const char* text, dc_document** out) {
    return guarded([&]() -> dc_status {
        require(text && out, "null pointer");
        Json j = parse_json(text);
        require(j.is_object(), "expected a JSON object");
        auto doc = std::make_unique<dc_document>();
        if (j.contains("records")) {
            doc->dominance = true;
            doc->dom = dominance_from_json(j);
        } else if (j.contains("steps")) {
            doc->cert = certificate_from_json(j);
        } else {
            throw std::invalid_argument("document has neither 'records' nor 'steps'");
        }
        *out = doc.release();
        return DC_OK;
    });
}

void dc_document_free(dc_document* doc) { delete doc; }

int dc_document_is_dominance(const dc_document* doc) { return doc && doc->dominance ? 1 : 0; }

dc_status dc_document_verify(const dc_document* doc, int deep, uint64_t support_cap,
                             char** out_reason) {
    return guarded([&]() -> dc_status {
        require(doc != nullptr, "null pointer");
        Verdict verdict = doc->dominance
                              ? verify_dominance_certificate(doc->dom, deep != 0, effective_cap(support_cap))
                              : verify_certificate(doc->cert, deep != 0, effective_cap(support_cap));
        if (out_reason) *out_reason = alloc_string(verdict.reason);
        return verdict.accepted ? DC_OK : DC_FALSE;
    });
}

dc_status dc_document_dump(const dc_document* doc, char** out_json) {
    return guarded([&]() -> dc_status {
        require(doc && out_json, "null pointer");
        Json j = doc->dominance ? to_json(doc->dom) : to_json(doc->cert);
        *out_json = alloc_string(dump_json(j));
        return DC_OK;
    });
}

dc_status dc_selftest(int jobs, char** out_json) {
    return guarded([&]() -> dc_status {
        SelfTestReport report = run_selftest(jobs);
        if (out_json) *out_json = alloc_string(report.json);
        return report.ok ? DC_OK : DC_FALSE;
    });
}

}  // extern "C"
