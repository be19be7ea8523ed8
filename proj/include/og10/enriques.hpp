#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "og10/mukai_llv.hpp"

namespace og10 {

// Which closed forms supply the candidate totals: the artifact's own exact
// computation, or the published reference rows evaluated verbatim.
enum class PolySource { derived, published };

std::string to_string(PolySource source);
PolySource poly_source_from_string(const std::string& name);  // throws std::invalid_argument

// Quotient indices admitted by the integrality condition
// d * chi(O_quotient) = chi(O_X), with chi(O_X) = complex_dimension/2 + 1:
// divisors of chi exceeding 1, reduced to the prime orders they contain.
struct AdmissibleIndices {
  std::int64_t chi = 0;
  std::vector<std::int64_t> indices;
  std::string derivation_note;
};

AdmissibleIndices admissible_indices(const ManifoldProfile& profile = ManifoldProfile::og10());

struct ScanCandidate {
  std::int64_t invariant_dim = 0;  // invariant dimension of the H^2 action
  char sign_case = 'a';
  std::int64_t total = 0;  // fixed-subspace dimension of total cohomology
  bool passes = false;     // order * total == total_euler exactly

  friend bool operator==(const ScanCandidate& x, const ScanCandidate& y) {
    return x.invariant_dim == y.invariant_dim && x.sign_case == y.sign_case &&
           x.total == y.total && x.passes == y.passes;
  }
};

// Verdict of the Euler-characteristic feasibility scan for one order and one
// polynomial source. The scan tests the NECESSARY numerical condition only:
// a passing candidate does not construct an automorphism or a quotient.
struct ScanReport {
  std::int64_t order = 0;
  PolySource source = PolySource::derived;
  std::vector<ScanCandidate> candidates;  // ordered by (invariant_dim, case)
  std::vector<ScanCandidate> solutions;   // the candidates with passes = true
  // The published source asserts this scan has no solutions; nonempty
  // solutions therefore flag a discrepancy.
  bool published_claim_discrepant = false;
  std::string note;

  friend bool operator==(const ScanReport& x, const ScanReport& y) {
    return x.order == y.order && x.source == y.source && x.candidates == y.candidates &&
           x.solutions == y.solutions &&
           x.published_claim_discrepant == y.published_claim_discrepant && x.note == y.note;
  }
};

// Runs the scan: order 2 iterates the invariant dimension r over 0..24 in
// both sign cases; order 3 iterates invariant dimensions 2r, r in 0..12,
// sign case a only. Candidate totals come from the exact character machinery
// (derived) or from the shipped reference rows evaluated as printed
// (published). Default profile only for the published source.
ScanReport scan(std::int64_t order, PolySource source,
                const ManifoldProfile& profile = ManifoldProfile::og10());

// Direct probe for composite orders (the scan proper covers the prime
// indices): evaluates the necessary condition for one user-supplied
// second-cohomology character at its own order.
struct CompositeProbe {
  std::int64_t order = 0;
  ComponentInvariants invariants;
  bool passes_case_a = false;
  std::optional<bool> passes_case_b;
  std::string note;

  friend bool operator==(const CompositeProbe& a, const CompositeProbe& b) {
    return a.order == b.order && a.invariants == b.invariants &&
           a.passes_case_a == b.passes_case_a && a.passes_case_b == b.passes_case_b &&
           a.note == b.note;
  }
};

CompositeProbe composite_probe(const CyclicCharacter& h2,
                               const ManifoldProfile& profile = ManifoldProfile::og10());

}  // namespace og10
