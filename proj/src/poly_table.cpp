#include "og10/poly_table.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "og10/rational.hpp"

namespace og10 {

// Embedded copy of data/reference_polynomials.txt, generated at configure
// time so the file on disk stays the single source of truth.
extern const char* const kReferencePolynomialsText;

namespace {

struct ReferenceTable {
  int version = 0;
  std::map<std::string, ReferencePolynomial> rows;
};

ReferenceTable parse_reference_table(const std::string& text) {
  ReferenceTable table;
  std::istringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) {
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    std::istringstream fields(line);
    std::string head;
    fields >> head;
    if (head == "version") {
      fields >> table.version;
      if (!fields || table.version < 1) {
        throw std::logic_error("reference data: malformed version line");
      }
      continue;
    }
    ReferencePolynomial row;
    row.id = head;
    std::vector<Rational> coeffs;
    std::string token;
    while (fields >> token) {
      row.printed_coefficients.push_back(token);
      coeffs.push_back(Rational::parse(token));
    }
    if (coeffs.empty()) {
      throw std::logic_error("reference data: row '" + row.id + "' has no coefficients");
    }
    row.polynomial = RationalPolynomial(std::move(coeffs));
    if (!table.rows.emplace(row.id, std::move(row)).second) {
      throw std::logic_error("reference data: duplicate id '" + head + "'");
    }
  }
  if (table.version == 0) {
    throw std::logic_error("reference data: missing version line");
  }
  return table;
}

const ReferenceTable& reference_table() {
  static const ReferenceTable table = parse_reference_table(kReferencePolynomialsText);
  return table;
}

void require_order(std::int64_t order) {
  if (order != 2 && order != 3) {
    throw std::invalid_argument("reconstruction is defined for orders 2 and 3, not " +
                                std::to_string(order));
  }
}

int expected_degree(Target t) {
  switch (t) {
    case Target::sym2:
    case Target::lambda2:
    case Target::lambda2_zeta:
      return 2;
    case Target::lambda4:
    case Target::sym2lambda2:
    case Target::v22:
      return 4;
    case Target::verbitsky:
    case Target::total_a:
    case Target::total_b:
    case Target::total_c:
      return 5;
  }
  throw std::logic_error("unreachable target");
}

}  // namespace

std::string to_string(Target t) {
  switch (t) {
    case Target::sym2: return "sym2";
    case Target::lambda2: return "lambda2";
    case Target::lambda2_zeta: return "lambda2_zeta";
    case Target::lambda4: return "lambda4";
    case Target::sym2lambda2: return "sym2lambda2";
    case Target::v22: return "v22";
    case Target::verbitsky: return "verbitsky";
    case Target::total_a: return "total_a";
    case Target::total_b: return "total_b";
    case Target::total_c: return "total_c";
  }
  throw std::logic_error("unreachable target");
}

Target target_from_string(const std::string& name) {
  for (const Target t : {Target::sym2, Target::lambda2, Target::lambda2_zeta, Target::lambda4,
                         Target::sym2lambda2, Target::v22, Target::verbitsky, Target::total_a,
                         Target::total_b, Target::total_c}) {
    if (to_string(t) == name) {
      return t;
    }
  }
  throw std::invalid_argument("unknown reconstruction target '" + name + "'");
}

std::vector<Target> targets_for_order(std::int64_t order) {
  require_order(order);
  if (order == 2) {
    return {Target::sym2,      Target::lambda2,   Target::lambda4, Target::sym2lambda2,
            Target::v22,       Target::verbitsky, Target::total_a, Target::total_b};
  }
  return {Target::sym2,        Target::lambda2, Target::lambda2_zeta, Target::lambda4,
          Target::sym2lambda2, Target::v22,     Target::verbitsky,    Target::total_c};
}

std::vector<std::int64_t> admissible_arguments(std::int64_t order) {
  require_order(order);
  const std::int64_t last = (order == 2) ? 24 : 12;
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(last) + 1);
  for (std::int64_t r = 0; r <= last; ++r) {
    out.push_back(r);
  }
  return out;
}

std::int64_t sample_target(std::int64_t order, Target t, std::int64_t r) {
  require_order(order);
  const ManifoldProfile profile = ManifoldProfile::og10();
  const std::int64_t invariant_dim = (order == 2) ? r : 2 * r;
  const CyclicCharacter h2 = h2_from_invariant_dim(order, invariant_dim, profile);
  const CyclicCharacter v = mukai_extend(h2, profile);
  switch (t) {
    case Target::sym2:
      return sym_power(v, 2).eig(0);
    case Target::lambda2:
      return ext_power(v, 2).eig(0);
    case Target::lambda2_zeta:
      if (order != 3) {
        throw std::invalid_argument("lambda2_zeta is an order-3 target");
      }
      return ext_power(v, 2).eig(1);
    case Target::lambda4:
      return ext_power(v, 4).eig(0);
    case Target::sym2lambda2:
      return sym_power(ext_power(v, 2), 2).eig(0);
    case Target::v22:
      return v22_character(v, profile).certify_non_negative().eig(0);
    case Target::verbitsky:
      return verbitsky_character(v, profile).certify_non_negative().eig(0);
    case Target::total_a: {
      return total_invariants(h2, profile).total_case_a;
    }
    case Target::total_b: {
      if (order != 2) {
        throw std::invalid_argument("total_b is an order-2 target");
      }
      // The published row-b combination: Verbitsky count minus (2,2) count.
      // This is a signed quantity, not the case-b fixed dimension (which is
      // this value plus the full (2,2)-component dimension).
      const ComponentInvariants inv = total_invariants(h2, profile);
      return checked_sub(inv.verbitsky_fixed, inv.v22_fixed);
    }
    case Target::total_c: {
      if (order != 3) {
        throw std::invalid_argument("total_c is an order-3 target");
      }
      return total_invariants(h2, profile).total_case_a;
    }
  }
  throw std::logic_error("unreachable target");
}

RationalPolynomial reconstruct(std::int64_t order, Target t) {
  require_order(order);
  // Validate the order/target pairing up front for a clean diagnostic.
  const std::vector<Target> legal = targets_for_order(order);
  bool ok = false;
  for (const Target lt : legal) {
    ok = ok || (lt == t);
  }
  if (!ok) {
    throw std::invalid_argument("target '" + to_string(t) + "' is not defined at order " +
                                std::to_string(order));
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> points;
  for (const std::int64_t r : admissible_arguments(order)) {
    points.emplace_back(r, sample_target(order, t, r));
  }
  return interpolate_exact(points, expected_degree(t));
}

const ReferencePolynomial& reference_polynomial(const std::string& reference_id) {
  const auto& rows = reference_table().rows;
  const auto it = rows.find(reference_id);
  if (it == rows.end()) {
    throw std::invalid_argument("unknown reference id '" + reference_id + "'");
  }
  return it->second;
}

std::vector<std::string> reference_ids() {
  std::vector<std::string> out;
  for (const auto& [id, row] : reference_table().rows) {
    out.push_back(id);
  }
  return out;
}

int reference_data_version() { return reference_table().version; }

std::string reference_id_for(std::int64_t order, Target t) {
  require_order(order);
  const std::string id = "ord" + std::to_string(order) + "_" + to_string(t);
  if (reference_table().rows.find(id) == reference_table().rows.end()) {
    throw std::invalid_argument("no reference row for target '" + to_string(t) + "' at order " +
                                std::to_string(order));
  }
  return id;
}

ErratumReport compare_with_reference(const RationalPolynomial& derived,
                                     const std::string& reference_id) {
  const ReferencePolynomial& ref = reference_polynomial(reference_id);
  ErratumReport report;
  report.target = reference_id;
  const int max_degree = std::max(derived.degree(), ref.polynomial.degree());
  for (int k = 0; k <= max_degree; ++k) {
    const Rational printed = ref.polynomial.coefficient(k);
    const Rational got = derived.coefficient(k);
    if (printed == got) {
      report.matched_coefficients.push_back(k);
    } else {
      ErratumReport::Mismatch mismatch;
      mismatch.degree = k;
      mismatch.printed = (k <= ref.polynomial.degree())
                             ? ref.printed_coefficients[static_cast<std::size_t>(k)]
                             : "0";
      mismatch.printed_value = printed;
      mismatch.derived = got;
      report.mismatched.push_back(std::move(mismatch));
    }
  }
  return report;
}

}  // namespace og10
