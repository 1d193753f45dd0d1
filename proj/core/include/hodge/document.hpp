#pragma once

#include <string>
#include <variant>

#include "hodge/constructions.hpp"
#include "hodge/datum.hpp"
#include "hodge/report.hpp"

namespace hodge {

inline constexpr const char* kDatumFormat = "hodge-datum/1";
inline constexpr const char* kCertificateFormat = "hodge-certificate/1";

/// Any object the document layer reads or writes. Certificates carry no stored verdicts on
/// parse; their checks are recomputed by verify().
using Document = std::variant<HodgeDatum, OrbitDatum, PolarizedMixed, EmbeddingCertificate, SurjectionCertificate>;

/// Canonical text: sorted keys, two-space indent, trailing newline, scalars as exact
/// ["re", "im"] fraction strings.
std::string serialize(const HodgeDatum& h);
std::string serialize(const OrbitDatum& o);
std::string serialize(const PolarizedMixed& p);
std::string serialize(const EmbeddingCertificate& c);
std::string serialize(const SurjectionCertificate& c);
std::string serialize(const Document& d);
/// List of {k|p, basis} steps, as used inside datum documents.
std::string serialize(const Filtration& f);

/// Throws ParseError (with line/column or field path) on malformed text and ValidationError
/// when a parsed object violates a type invariant.
Document parse_document(const std::string& text);
HodgeDatum parse_mixed(const std::string& text);
OrbitDatum parse_orbit(const std::string& text);

std::string kind_of(const Document& d);

/// Structured (JSON) and plain text forms of a report.
std::string report_json(const VerdictReport& r);
std::string report_text(const VerdictReport& r);

}  // namespace hodge
