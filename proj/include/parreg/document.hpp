#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "parreg/oracle.hpp"
#include "parreg/system.hpp"
#include "parreg/witness.hpp"

namespace parreg {

using Json = nlohmann::ordered_json;

/// Parse a system document. Field paths are reported in ParseError; the
/// right-hand side must be nonzero.
SystemInstance parse_system(const Json& doc);
SystemInstance parse_system_text(const std::string& text);

/// Canonical system document: fixed field order, integers as decimal
/// strings. serialize(parse(doc)) is byte-identical for canonical input.
Json serialize_system(const SystemInstance& sys);

/// 16-hex-digit content digest of the canonical system document.
std::string system_digest(const SystemInstance& sys);

Json serialize_certificate(const WitnessCertificate& cert);
WitnessCertificate parse_certificate(const Json& doc);
WitnessCertificate parse_certificate_text(const std::string& text);

/// Result document for a decision, including the induced colour classes for
/// small finite modules and the interval-bucket analysis of the certificate.
Json decide_result_document(const SystemInstance& sys, const Verdict& verdict);

Json check_report_document(const std::string& digest, const CheckReport& report);

Json exhaust_result_document(const SystemInstance& sys, const ExhaustiveResult& result);

/// 64-bit FNV-1a of a byte string, rendered as 16 hex digits.
std::string fnv1a64_hex(const std::string& bytes);

}  // namespace parreg
