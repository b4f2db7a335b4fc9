#ifndef WSBOUND_CERTIFICATE_IO_HPP
#define WSBOUND_CERTIFICATE_IO_HPP

#include <string>

#include <json.hpp>

#include "wsbound/bound_engine.hpp"
#include "wsbound/t_bound_engine.hpp"

namespace wsbound {

/// Self-contained certificate document: embeds the model, the path, and the
/// per-edge weights with their witnesses, so it can be re-checked later with
/// no other inputs.
nlohmann::json certificate_to_json(const BoundCertificate& cert, const CurveModel& model);
nlohmann::json certificate_to_json(const TBoundCertificate& cert, const CurveModel& model);

struct VerifySummary {
  std::string kind;  // "multipoint" or "tbound"
  Int weight = 0;
  Int bound = 0;  // total_bound for tbound certificates
};

/// Recompute every edge weight and the bound of a certificate document from
/// its embedded model. Throws CertificateMismatch (carrying the edge index
/// when one edge disagrees), InvalidPath, or a parse/validation error.
VerifySummary verify_certificate_json(const nlohmann::json& doc);

}  // namespace wsbound

#endif  // WSBOUND_CERTIFICATE_IO_HPP
