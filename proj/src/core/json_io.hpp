// JSON wire formats for every structure the command line reads or writes.
// Serialization is canonical: keys are emitted in sorted order, so equal
// values always produce byte-identical text. Parsing is strict about types
// and ranges and throws std::invalid_argument or nlohmann exceptions on
// anything malformed; semantic validation stays with the verifiers.
#pragma once

#include <json.hpp>

#include <string>

#include "core/certificates.hpp"
#include "core/cone.hpp"
#include "core/lr.hpp"
#include "core/partition.hpp"

namespace domcert {

using Json = nlohmann::json;

Json to_json(const Partition& p);
Json to_json(const Composition& L);
Json to_json(const Decomposition& dec);
Json to_json(const CertClaim& claim);
Json to_json(const Certificate& cert);
Json to_json(const DominanceCertificate& cert);
Json to_json(const TensorSupport& support);

Partition partition_from_json(const Json& j);
Composition composition_from_json(const Json& j);
Decomposition decomposition_from_json(const Json& j);
CertClaim claim_from_json(const Json& j);
Certificate certificate_from_json(const Json& j);
DominanceCertificate dominance_from_json(const Json& j);

// Two-space indent plus a trailing newline.
std::string dump_json(const Json& j);

Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace domcert
