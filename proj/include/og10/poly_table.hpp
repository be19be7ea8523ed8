#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "og10/mukai_llv.hpp"
#include "og10/polynomial.hpp"

namespace og10 {

// Reconstruction targets: the counting series whose closed forms the
// published source prints. Each is an exact function of the sample variable r
// (order 2: invariant dimension r; order 3: invariant dimension 2r).
enum class Target {
  sym2,          // eig(Sym^2 V, 1)
  lambda2,       // eig(Lambda^2 V, 1)
  lambda2_zeta,  // eig(Lambda^2 V, zeta), order 3 only
  lambda4,       // eig(Lambda^4 V, 1)
  sym2lambda2,   // eig(Sym^2 Lambda^2 V, 1)
  v22,           // eig on the (2,2)-component
  verbitsky,     // eig on the Verbitsky component
  total_a,       // total fixed dimension, sign case a
  total_b,       // verbitsky minus v22 (the published row-b combination), order 2 only
  total_c,       // total fixed dimension at order 3
};

std::string to_string(Target t);
Target target_from_string(const std::string& name);  // throws std::invalid_argument

// Targets legal at the given order, in canonical order.
std::vector<Target> targets_for_order(std::int64_t order);

// Sample abscissae used for reconstruction: the full admissible range
// (order 2: 0..24; order 3: 0..12), not the minimal count, so that the
// postcondition of exact interpolation doubles as a whole-pipeline check.
std::vector<std::int64_t> admissible_arguments(std::int64_t order);

// Exact value of the target at one sample point (derived from the character
// machinery, never from reference data).
std::int64_t sample_target(std::int64_t order, Target t, std::int64_t r);

// Reconstructs the closed form of the target by exact interpolation over the
// full admissible range. Throws std::invalid_argument for an illegal
// order/target combination. Default profile only.
RationalPolynomial reconstruct(std::int64_t order, Target t);

// One row of the shipped reference table: the parsed polynomial plus the
// coefficient strings exactly as printed (unreduced, e.g. "21/3").
struct ReferencePolynomial {
  std::string id;
  RationalPolynomial polynomial;
  std::vector<std::string> printed_coefficients;  // ascending degree
};

// Coefficientwise exact diff of a derived polynomial against one reference
// row. `mismatched` empty iff the match is exact.
struct ErratumReport {
  struct Mismatch {
    int degree = 0;
    std::string printed;  // verbatim printed coefficient
    Rational printed_value;
    Rational derived;

    friend bool operator==(const Mismatch& a, const Mismatch& b) {
      return a.degree == b.degree && a.printed == b.printed &&
             a.printed_value == b.printed_value && a.derived == b.derived;
    }
  };

  std::string target;  // reference id
  std::vector<int> matched_coefficients;  // degrees that agree
  std::vector<Mismatch> mismatched;

  bool exact_match() const { return mismatched.empty(); }

  friend bool operator==(const ErratumReport& a, const ErratumReport& b) {
    return a.target == b.target && a.matched_coefficients == b.matched_coefficients &&
           a.mismatched == b.mismatched;
  }
};

// Shipped reference rows (embedded copy of data/reference_polynomials.txt).
const ReferencePolynomial& reference_polynomial(const std::string& reference_id);
std::vector<std::string> reference_ids();
int reference_data_version();

// Reference id for an (order, target) pair; throws std::invalid_argument when
// no reference row exists for the combination.
std::string reference_id_for(std::int64_t order, Target t);

ErratumReport compare_with_reference(const RationalPolynomial& derived,
                                     const std::string& reference_id);

}  // namespace og10
