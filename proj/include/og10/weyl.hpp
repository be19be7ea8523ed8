#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "og10/cyclic_character.hpp"

namespace og10 {

// Integer weight in the standard epsilon-coordinates of so(2n), type D_n.
// Dominant means w[0] >= w[1] >= ... >= w[n-2] >= |w[n-1]|.
using Weight = std::vector<int>;

// Thrown when a character expansion exceeds the configured work budget.
struct WorkCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Budget for weight-tuple enumeration. Character constructions charge one
// unit per expanded orbit element or enumerated tuple; exceeding the cap
// throws WorkCapExceeded. The default allows the rank-13 certification with
// ample headroom and is overridable via the OG10_WORK_CAP environment
// variable (or explicitly in code / via the CLI flag).
class WorkCounter {
 public:
  WorkCounter() : cap_(default_cap()) {}
  explicit WorkCounter(std::int64_t cap) : cap_(cap) {}

  static std::int64_t default_cap();

  void charge(std::int64_t units = 1) {
    used_ += units;
    if (used_ > cap_) {
      throw WorkCapExceeded("character expansion exceeded the work cap of " +
                            std::to_string(cap_) +
                            " weight operations; raise OG10_WORK_CAP to override");
    }
  }

  std::int64_t used() const { return used_; }
  std::int64_t cap() const { return cap_; }

 private:
  std::int64_t cap_;
  std::int64_t used_ = 0;
};

bool is_dominant(const Weight& w);

// The dominant Weyl-chamber representative of an arbitrary weight: sort
// absolute values descending; when every entry is nonzero and the number of
// negative entries is odd, the last entry stays negative.
Weight dominant_representative(const Weight& w);

// Orbit of a dominant weight under the D_n Weyl group (permutations and
// even sign changes): distinct arrangements of the absolute values, with all
// sign patterns on the nonzero entries when some entry is zero, and only the
// patterns of matching sign parity otherwise.
std::vector<Weight> weyl_orbit(const Weight& dominant, WorkCounter* counter = nullptr);

// |weyl_orbit| by counting formula (no enumeration).
std::int64_t weyl_orbit_size(const Weight& dominant);

// Weyl-group-invariant character stored over dominant representatives only;
// orbits are expanded lazily. Multiplicities may not be negative here;
// virtual (signed) combinations are handled by the free functions below.
class DominantCharacter {
 public:
  explicit DominantCharacter(int rank);

  int rank() const { return rank_; }
  const std::map<Weight, std::int64_t>& mults() const { return mults_; }

  // Adds `mult` copies of the orbit of `dominant` (collecting, erasing zero
  // entries). The weight must be dominant of the right rank.
  void add(const Weight& dominant, std::int64_t mult);

  std::int64_t multiplicity(const Weight& dominant) const;

  // Total size of the implied full weight expansion.
  std::int64_t expanded_dimension() const;

  friend bool operator==(const DominantCharacter& a, const DominantCharacter& b) {
    return a.rank_ == b.rank_ && a.mults_ == b.mults_;
  }
  friend bool operator!=(const DominantCharacter& a, const DominantCharacter& b) {
    return !(a == b);
  }

 private:
  int rank_;
  std::map<Weight, std::int64_t> mults_;  // dominant weight -> positive multiplicity
};

// Dimension of the irreducible with the given highest weight, by the exact
// product formula over the positive roots {e_i - e_j, e_i + e_j : i < j}.
// Throws std::invalid_argument on a non-dominant weight.
std::int64_t weyl_dimension(int rank, const Weight& highest_weight);

// Inner multiplicities of all dominant weights of the irreducible, by the
// Freudenthal recursion. The expanded size always equals weyl_dimension.
DominantCharacter irreducible_character(int rank, const Weight& highest_weight);

// The 2n-dimensional defining (vector) representation.
DominantCharacter vector_character(int rank);

// Characters of tensor constructions, computed on full weight expansions and
// re-collected over dominant representatives. Each verifies that the
// collected result expands back to the expected dimension.
DominantCharacter char_tensor(const DominantCharacter& a, const DominantCharacter& b,
                              WorkCounter& counter);
DominantCharacter char_sym_power(const DominantCharacter& c, int k, WorkCounter& counter);
DominantCharacter char_ext_power(const DominantCharacter& c, int k, WorkCounter& counter);

// Greedy leading-weight decomposition into irreducibles: repeatedly take the
// lexicographically largest dominant weight present (the dominance order's
// maximal elements are lex-maximal within a character) and subtract its
// irreducible character. Throws std::logic_error if the remainder ever goes
// negative (the input was not a genuine character).
std::vector<std::pair<Weight, std::int64_t>> decompose(const DominantCharacter& c);

// Substitutes the order-n torus element with exponent vector `assignment`
// (one exponent per epsilon-coordinate) into the full weight expansion: each
// weight w contributes to eigenvalue index sum_i assignment[i]*w[i] mod n.
// Bridge between the Weyl-side and cyclic-side computations.
CyclicCharacter torus_specialize(const DominantCharacter& c,
                                 const std::vector<std::int64_t>& assignment, std::int64_t order);

// Everything the plethysm certification establishes at one rank, from
// scratch: Sym^2 Lambda^2 V minus Sym^2 V minus Lambda^4 V equals the
// irreducible of highest weight (2,2,0,...,0) exactly, plus the greedy
// decomposition of Sym^2 Lambda^2 V itself with dimensions.
struct PlethysmCertificate {
  int rank = 0;
  std::int64_t dim_vector = 0;
  std::int64_t dim_sym2 = 0;
  std::int64_t dim_lambda4 = 0;
  std::int64_t dim_sym2lambda2 = 0;
  std::int64_t dim_v22 = 0;  // by the Weyl dimension formula
  bool three_term_identity = false;
  std::vector<std::pair<Weight, std::int64_t>> decomposition;
  std::vector<std::int64_t> decomposition_dims;
  std::int64_t work_units = 0;

  friend bool operator==(const PlethysmCertificate& a, const PlethysmCertificate& b) {
    return a.rank == b.rank && a.dim_vector == b.dim_vector && a.dim_sym2 == b.dim_sym2 &&
           a.dim_lambda4 == b.dim_lambda4 && a.dim_sym2lambda2 == b.dim_sym2lambda2 &&
           a.dim_v22 == b.dim_v22 && a.three_term_identity == b.three_term_identity &&
           a.decomposition == b.decomposition && a.decomposition_dims == b.decomposition_dims &&
           a.work_units == b.work_units;
  }
};

PlethysmCertificate verify_plethysm(int rank, WorkCounter& counter);

}  // namespace og10
