#pragma once

#include <string>

#include <json.hpp>

#include "divaudit/asymptotics.hpp"
#include "divaudit/audit.hpp"
#include "divaudit/multinomial.hpp"

namespace divaudit {

/// A distribution serializes to a plain JSON array of numbers;
/// deserialization runs the same validation as Multinomial::from_weights.
nlohmann::json to_json(const Multinomial& p);
Multinomial multinomial_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CauchyParams& p);
CauchyParams cauchy_from_json(const nlohmann::json& j);

/// Certificate schema (versioned with "schema": 1):
/// {schema, family, points, alpha, d12, d23, d13, margin, generator,
///  search_meta}.
nlohmann::json to_json(const TriangleCertificate& cert);
TriangleCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LimitEstimate& est);
nlohmann::json to_json(const AuditReport& report);

/// Writes text to path atomically (write to a sibling temp file, rename).
void write_file_atomic(const std::string& path, const std::string& text);

}  // namespace divaudit
