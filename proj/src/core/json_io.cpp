#include "core/json_io.hpp"

#include <fstream>
#include <limits>
#include <stdexcept>

namespace domcert {

namespace {

Part int_from_json(const Json& j, const char* what) {
    if (!j.is_number_integer())
        throw std::invalid_argument(std::string(what) + ": expected an integer");
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > std::uint64_t(std::numeric_limits<Part>::max()))
        throw std::invalid_argument(std::string(what) + ": value too large");
    return j.get<Part>();
}

int index_from_json(const Json& j, const char* what) {
    Part value = int_from_json(j, what);
    if (value < std::numeric_limits<int>::min() || value > std::numeric_limits<int>::max())
        throw std::invalid_argument(std::string(what) + ": value out of range");
    return int(value);
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw std::invalid_argument("expected an object with a '" + std::string(key) + "' field");
    auto it = j.find(key);
    if (it == j.end()) throw std::invalid_argument("missing field '" + std::string(key) + "'");
    return *it;
}

StepKind kind_from_json(const Json& j) {
    if (!j.is_string()) throw std::invalid_argument("step kind: expected a string");
    std::string name = j.get<std::string>();
    if (name == "axiom") return StepKind::axiom;
    if (name == "lr-step") return StepKind::lr;
    if (name == "add") return StepKind::add;
    if (name == "blockwise") return StepKind::blockwise;
    throw std::invalid_argument("unknown step kind '" + name + "'");
}

const char* kind_name(StepKind kind) {
    switch (kind) {
        case StepKind::axiom: return "axiom";
        case StepKind::lr: return "lr-step";
        case StepKind::add: return "add";
        case StepKind::blockwise: return "blockwise";
    }
    throw std::logic_error("unhandled step kind");
}

Json step_to_json(const CertStep& step, int id) {
    Json j;
    j["id"] = id;
    j["kind"] = kind_name(step.kind);
    switch (step.kind) {
        case StepKind::axiom:
            break;
        case StepKind::lr:
            j["premises"] = step.premises;
            j["left"] = to_json(step.left);
            j["right"] = to_json(step.right);
            break;
        case StepKind::add:
            j["premises"] = step.premises;
            break;
        case StepKind::blockwise:
            j["premises"] = step.premises;
            j["composition"] = to_json(step.composition);
            break;
    }
    j["result"] = to_json(step.result);
    return j;
}

CertStep step_from_json(const Json& j, int id) {
    CertStep step;
    step.kind = kind_from_json(field(j, "kind"));
    if (index_from_json(field(j, "id"), "step id") != id)
        throw std::invalid_argument("step id does not match its position");
    if (step.kind != StepKind::axiom) {
        const Json& premises = field(j, "premises");
        if (!premises.is_array()) throw std::invalid_argument("premises: expected an array");
        for (const Json& p : premises) step.premises.push_back(index_from_json(p, "premise"));
    }
    if (step.kind == StepKind::lr) {
        step.left = partition_from_json(field(j, "left"));
        step.right = partition_from_json(field(j, "right"));
    }
    if (step.kind == StepKind::blockwise) step.composition = composition_from_json(field(j, "composition"));
    step.result = partition_from_json(field(j, "result"));
    return step;
}

}  // namespace

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const Composition& L) { return Json(L.lengths()); }

Json to_json(const Decomposition& dec) {
    Json terms = Json::array();
    for (const DecompositionTerm& term : dec.terms) {
        Json t;
        t["label"] = to_json(term.label);
        t["generator"] = to_json(term.generator);
        t["mult"] = term.mult;
        terms.push_back(std::move(t));
    }
    Json j;
    j["base"] = to_json(dec.base);
    j["target"] = to_json(dec.target);
    j["remainder"] = to_json(dec.remainder);
    j["terms"] = std::move(terms);
    return j;
}

Json to_json(const CertClaim& claim) {
    Json j;
    j["base"] = to_json(claim.base);
    j["power"] = claim.power;
    j["target"] = to_json(claim.target);
    return j;
}

Json to_json(const Certificate& cert) {
    Json steps = Json::array();
    for (size_t i = 0; i < cert.steps.size(); ++i) steps.push_back(step_to_json(cert.steps[i], int(i)));
    Json j;
    j["rank"] = cert.rank;
    j["claim"] = to_json(cert.claim);
    j["steps"] = std::move(steps);
    j["conclusion"] = cert.conclusion;
    return j;
}

Json to_json(const DominanceCertificate& cert) {
    Json records = Json::array();
    for (const DominanceRecord& rec : cert.records) {
        Json r;
        r["target"] = to_json(rec.target);
        r["decomposition"] = to_json(rec.decomposition);
        r["certificate"] = to_json(rec.generator_part);
        records.push_back(std::move(r));
    }
    Json j;
    j["base"] = to_json(cert.base);
    j["dominated"] = to_json(cert.dominated);
    j["power"] = cert.power;
    j["records"] = std::move(records);
    return j;
}

Json to_json(const TensorSupport& support) {
    Json entries = Json::array();
    for (const auto& [partition, mult] : support.entries()) {
        Json e;
        e["partition"] = to_json(partition);
        if (mult <= Int(std::numeric_limits<std::int64_t>::max()))
            e["multiplicity"] = mult.convert_to<std::int64_t>();
        else
            e["multiplicity"] = to_decimal(mult);
        entries.push_back(std::move(e));
    }
    Json j;
    j["rank"] = support.rank();
    j["size"] = entries.size();
    j["entries"] = std::move(entries);
    return j;
}

Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition: expected an array");
    std::vector<Part> parts;
    parts.reserve(j.size());
    for (const Json& e : j) parts.push_back(int_from_json(e, "partition entry"));
    return Partition(std::move(parts));
}

Composition composition_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("composition: expected an array");
    std::vector<int> lengths;
    lengths.reserve(j.size());
    for (const Json& e : j) lengths.push_back(index_from_json(e, "composition entry"));
    return Composition(std::move(lengths));
}

Decomposition decomposition_from_json(const Json& j) {
    Decomposition dec;
    dec.base = partition_from_json(field(j, "base"));
    dec.target = partition_from_json(field(j, "target"));
    dec.remainder = partition_from_json(field(j, "remainder"));
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) throw std::invalid_argument("terms: expected an array");
    for (const Json& t : terms) {
        DecompositionTerm term;
        term.label = composition_from_json(field(t, "label"));
        term.generator = partition_from_json(field(t, "generator"));
        term.mult = int_from_json(field(t, "mult"), "term multiplier");
        dec.terms.push_back(std::move(term));
    }
    return dec;
}

CertClaim claim_from_json(const Json& j) {
    CertClaim claim;
    claim.base = partition_from_json(field(j, "base"));
    claim.power = int_from_json(field(j, "power"), "claim power");
    claim.target = partition_from_json(field(j, "target"));
    return claim;
}

Certificate certificate_from_json(const Json& j) {
    Certificate cert;
    cert.rank = index_from_json(field(j, "rank"), "rank");
    cert.claim = claim_from_json(field(j, "claim"));
    const Json& steps = field(j, "steps");
    if (!steps.is_array()) throw std::invalid_argument("steps: expected an array");
    for (size_t i = 0; i < steps.size(); ++i) cert.steps.push_back(step_from_json(steps[i], int(i)));
    cert.conclusion = index_from_json(field(j, "conclusion"), "conclusion");
    return cert;
}

DominanceCertificate dominance_from_json(const Json& j) {
    DominanceCertificate cert;
    cert.base = partition_from_json(field(j, "base"));
    cert.dominated = partition_from_json(field(j, "dominated"));
    cert.power = int_from_json(field(j, "power"), "power");
    const Json& records = field(j, "records");
    if (!records.is_array()) throw std::invalid_argument("records: expected an array");
    for (const Json& r : records) {
        DominanceRecord rec;
        rec.target = partition_from_json(field(r, "target"));
        rec.decomposition = decomposition_from_json(field(r, "decomposition"));
        rec.generator_part = certificate_from_json(field(r, "certificate"));
        cert.records.push_back(std::move(rec));
    }
    return cert;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) { return Json::parse(text); }

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << dump_json(j);
    if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace domcert
