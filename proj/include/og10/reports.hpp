#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "og10/enriques.hpp"
#include "og10/mukai_llv.hpp"
#include "og10/poly_table.hpp"
#include "og10/weyl.hpp"

namespace og10 {

// All machine-readable output uses insertion-ordered JSON so identical inputs
// produce byte-identical documents. Exact values only: int64 as JSON
// integers, non-integral rationals as lowest-term "p/q" strings (the printed
// coefficients of reference rows keep their verbatim spelling).
using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);  // integer or "p/q" string
Rational rational_from_json(const Json& j);

Json to_json(const RationalPolynomial& p);  // ascending coefficient array
RationalPolynomial polynomial_from_json(const Json& j);

Json to_json(const ManifoldProfile& profile);
ManifoldProfile profile_from_json(const Json& j);

Json to_json(const ComponentInvariants& inv);
ComponentInvariants component_invariants_from_json(const Json& j);

Json to_json(const ErratumReport& report);
ErratumReport erratum_report_from_json(const Json& j);

Json to_json(const ScanCandidate& candidate);
ScanCandidate scan_candidate_from_json(const Json& j);

Json to_json(const ScanReport& report);
ScanReport scan_report_from_json(const Json& j);

Json to_json(const AdmissibleIndices& indices);
AdmissibleIndices admissible_indices_from_json(const Json& j);

Json to_json(const PlethysmCertificate& cert);
PlethysmCertificate plethysm_certificate_from_json(const Json& j);

Json to_json(const CompositeProbe& probe);
CompositeProbe composite_probe_from_json(const Json& j);

// Common output envelope: artifact identity and version, command echo,
// profile in effect, notices for any detected reference errata, and the
// command-specific results payload. `status` is "ok" or "finding" (the
// latter when a scan solution or a reference discrepancy was detected).
Json make_envelope(const std::string& command, Json arguments, const ManifoldProfile& profile,
                   Json results, std::vector<std::string> errata_notices,
                   const std::string& status);

}  // namespace og10
