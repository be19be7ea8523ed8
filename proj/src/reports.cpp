#include "og10/reports.hpp"

#include <stdexcept>

#include "og10/version.hpp"

namespace og10 {

Json to_json(const Rational& r) {
  if (r.is_integer()) {
    return Json(r.numerator());
  }
  return Json(r.str());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return Rational(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    return Rational::parse(j.get<std::string>());
  }
  throw std::invalid_argument("expected integer or \"p/q\" string for a rational value");
}

Json to_json(const RationalPolynomial& p) {
  Json coeffs = Json::array();
  for (const Rational& c : p.coefficients()) {
    coeffs.push_back(to_json(c));
  }
  Json out;
  out["degree"] = p.degree();
  out["coefficients_ascending"] = std::move(coeffs);
  out["rendered"] = p.str();
  return out;
}

RationalPolynomial polynomial_from_json(const Json& j) {
  std::vector<Rational> coeffs;
  for (const Json& c : j.at("coefficients_ascending")) {
    coeffs.push_back(rational_from_json(c));
  }
  return RationalPolynomial(std::move(coeffs));
}

Json to_json(const ManifoldProfile& profile) {
  Json out;
  out["second_betti"] = profile.second_betti;
  out["total_euler"] = profile.total_euler;
  out["complex_dimension"] = profile.complex_dimension;
  return out;
}

ManifoldProfile profile_from_json(const Json& j) {
  ManifoldProfile profile;
  profile.second_betti = j.at("second_betti").get<std::int64_t>();
  profile.total_euler = j.at("total_euler").get<std::int64_t>();
  profile.complex_dimension = j.at("complex_dimension").get<std::int64_t>();
  return profile;
}

Json to_json(const ComponentInvariants& inv) {
  Json out;
  out["verbitsky_fixed"] = inv.verbitsky_fixed;
  out["v22_fixed"] = inv.v22_fixed;
  out["total_case_a"] = inv.total_case_a;
  if (inv.total_case_b) {
    out["total_case_b"] = *inv.total_case_b;
  }
  return out;
}

ComponentInvariants component_invariants_from_json(const Json& j) {
  ComponentInvariants inv;
  inv.verbitsky_fixed = j.at("verbitsky_fixed").get<std::int64_t>();
  inv.v22_fixed = j.at("v22_fixed").get<std::int64_t>();
  inv.total_case_a = j.at("total_case_a").get<std::int64_t>();
  if (j.contains("total_case_b")) {
    inv.total_case_b = j.at("total_case_b").get<std::int64_t>();
  }
  return inv;
}

Json to_json(const ErratumReport& report) {
  Json mismatched = Json::array();
  for (const ErratumReport::Mismatch& m : report.mismatched) {
    Json entry;
    entry["degree"] = m.degree;
    entry["printed"] = m.printed;
    entry["printed_value"] = to_json(m.printed_value);
    entry["derived"] = to_json(m.derived);
    mismatched.push_back(std::move(entry));
  }
  Json out;
  out["target"] = report.target;
  out["exact_match"] = report.exact_match();
  out["matched_coefficients"] = report.matched_coefficients;
  out["mismatched"] = std::move(mismatched);
  return out;
}

ErratumReport erratum_report_from_json(const Json& j) {
  ErratumReport report;
  report.target = j.at("target").get<std::string>();
  report.matched_coefficients = j.at("matched_coefficients").get<std::vector<int>>();
  for (const Json& entry : j.at("mismatched")) {
    ErratumReport::Mismatch m;
    m.degree = entry.at("degree").get<int>();
    m.printed = entry.at("printed").get<std::string>();
    m.printed_value = rational_from_json(entry.at("printed_value"));
    m.derived = rational_from_json(entry.at("derived"));
    report.mismatched.push_back(std::move(m));
  }
  return report;
}

Json to_json(const ScanCandidate& candidate) {
  Json out;
  out["invariant_dim"] = candidate.invariant_dim;
  out["sign_case"] = std::string(1, candidate.sign_case);
  out["total"] = candidate.total;
  out["passes"] = candidate.passes;
  return out;
}

ScanCandidate scan_candidate_from_json(const Json& j) {
  ScanCandidate candidate;
  candidate.invariant_dim = j.at("invariant_dim").get<std::int64_t>();
  const auto sign_case = j.at("sign_case").get<std::string>();
  if (sign_case.size() != 1) {
    throw std::invalid_argument("sign_case must be a single character");
  }
  candidate.sign_case = sign_case[0];
  candidate.total = j.at("total").get<std::int64_t>();
  candidate.passes = j.at("passes").get<bool>();
  return candidate;
}

Json to_json(const ScanReport& report) {
  Json candidates = Json::array();
  for (const ScanCandidate& c : report.candidates) {
    candidates.push_back(to_json(c));
  }
  Json solutions = Json::array();
  for (const ScanCandidate& c : report.solutions) {
    solutions.push_back(to_json(c));
  }
  Json out;
  out["order"] = report.order;
  out["polynomial_source"] = to_string(report.source);
  out["candidates"] = std::move(candidates);
  out["solutions"] = std::move(solutions);
  out["published_claim"] = report.published_claim_discrepant ? "discrepant" : "consistent";
  out["note"] = report.note;
  return out;
}

ScanReport scan_report_from_json(const Json& j) {
  ScanReport report;
  report.order = j.at("order").get<std::int64_t>();
  report.source = poly_source_from_string(j.at("polynomial_source").get<std::string>());
  for (const Json& c : j.at("candidates")) {
    report.candidates.push_back(scan_candidate_from_json(c));
  }
  for (const Json& c : j.at("solutions")) {
    report.solutions.push_back(scan_candidate_from_json(c));
  }
  const auto claim = j.at("published_claim").get<std::string>();
  if (claim != "discrepant" && claim != "consistent") {
    throw std::invalid_argument("published_claim must be 'consistent' or 'discrepant'");
  }
  report.published_claim_discrepant = (claim == "discrepant");
  report.note = j.at("note").get<std::string>();
  return report;
}

Json to_json(const AdmissibleIndices& indices) {
  Json out;
  out["chi_structure_sheaf"] = indices.chi;
  out["indices"] = indices.indices;
  out["derivation_note"] = indices.derivation_note;
  return out;
}

AdmissibleIndices admissible_indices_from_json(const Json& j) {
  AdmissibleIndices out;
  out.chi = j.at("chi_structure_sheaf").get<std::int64_t>();
  out.indices = j.at("indices").get<std::vector<std::int64_t>>();
  out.derivation_note = j.at("derivation_note").get<std::string>();
  return out;
}

Json to_json(const PlethysmCertificate& cert) {
  Json decomposition = Json::array();
  for (std::size_t i = 0; i < cert.decomposition.size(); ++i) {
    Json entry;
    entry["highest_weight"] = cert.decomposition[i].first;
    entry["multiplicity"] = cert.decomposition[i].second;
    entry["dimension"] = cert.decomposition_dims[i];
    decomposition.push_back(std::move(entry));
  }
  Json out;
  out["rank"] = cert.rank;
  out["dim_vector"] = cert.dim_vector;
  out["dim_sym2"] = cert.dim_sym2;
  out["dim_lambda4"] = cert.dim_lambda4;
  out["dim_sym2lambda2"] = cert.dim_sym2lambda2;
  out["dim_v22"] = cert.dim_v22;
  out["three_term_identity"] = cert.three_term_identity;
  out["decomposition"] = std::move(decomposition);
  out["work_units"] = cert.work_units;
  return out;
}

PlethysmCertificate plethysm_certificate_from_json(const Json& j) {
  PlethysmCertificate cert;
  cert.rank = j.at("rank").get<int>();
  cert.dim_vector = j.at("dim_vector").get<std::int64_t>();
  cert.dim_sym2 = j.at("dim_sym2").get<std::int64_t>();
  cert.dim_lambda4 = j.at("dim_lambda4").get<std::int64_t>();
  cert.dim_sym2lambda2 = j.at("dim_sym2lambda2").get<std::int64_t>();
  cert.dim_v22 = j.at("dim_v22").get<std::int64_t>();
  cert.three_term_identity = j.at("three_term_identity").get<bool>();
  for (const Json& entry : j.at("decomposition")) {
    cert.decomposition.emplace_back(entry.at("highest_weight").get<Weight>(),
                                    entry.at("multiplicity").get<std::int64_t>());
    cert.decomposition_dims.push_back(entry.at("dimension").get<std::int64_t>());
  }
  cert.work_units = j.at("work_units").get<std::int64_t>();
  return cert;
}

Json to_json(const CompositeProbe& probe) {
  Json out;
  out["order"] = probe.order;
  out["invariants"] = to_json(probe.invariants);
  out["passes_case_a"] = probe.passes_case_a;
  if (probe.passes_case_b) {
    out["passes_case_b"] = *probe.passes_case_b;
  }
  out["note"] = probe.note;
  return out;
}

CompositeProbe composite_probe_from_json(const Json& j) {
  CompositeProbe probe;
  probe.order = j.at("order").get<std::int64_t>();
  probe.invariants = component_invariants_from_json(j.at("invariants"));
  probe.passes_case_a = j.at("passes_case_a").get<bool>();
  if (j.contains("passes_case_b")) {
    probe.passes_case_b = j.at("passes_case_b").get<bool>();
  }
  probe.note = j.at("note").get<std::string>();
  return probe;
}

Json make_envelope(const std::string& command, Json arguments, const ManifoldProfile& profile,
                   Json results, std::vector<std::string> errata_notices,
                   const std::string& status) {
  Json out;
  out["artifact"] = kArtifactName;
  out["version"] = kArtifactVersion;
  out["reference_data_version"] = reference_data_version();
  out["command"] = command;
  out["arguments"] = std::move(arguments);
  out["profile"] = to_json(profile);
  out["status"] = status;
  out["errata_notices"] = errata_notices;
  out["results"] = std::move(results);
  return out;
}

}  // namespace og10
