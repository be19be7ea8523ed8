#include "og10/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "og10/rational.hpp"

namespace og10 {
namespace {

void require_rank(int rank) {
  if (rank < 2) {
    throw std::invalid_argument("type-D rank must be at least 2");
  }
}

void require_dominant(int rank, const Weight& w) {
  require_rank(rank);
  if (static_cast<int>(w.size()) != rank) {
    throw std::invalid_argument("weight length " + std::to_string(w.size()) +
                                " does not match rank " + std::to_string(rank));
  }
  if (!is_dominant(w)) {
    throw std::invalid_argument("weight is not dominant");
  }
}

// rho = (n-1, n-2, ..., 1, 0).
std::vector<int> rho_vector(int rank) {
  std::vector<int> rho(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) {
    rho[static_cast<std::size_t>(i)] = rank - 1 - i;
  }
  return rho;
}

std::int64_t dot(const std::vector<int>& a, const std::vector<int>& b) {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc += static_cast<std::int64_t>(a[i]) * b[i];
  }
  return acc;
}

// Positive roots as index pairs: (i, j, +1) for e_i + e_j, (i, j, -1) for
// e_i - e_j, i < j.
struct PositiveRoot {
  int i;
  int j;
  int sign;  // of the e_j coefficient
};

std::vector<PositiveRoot> positive_roots(int rank) {
  std::vector<PositiveRoot> roots;
  roots.reserve(static_cast<std::size_t>(rank) * (rank - 1));
  for (int i = 0; i < rank; ++i) {
    for (int j = i + 1; j < rank; ++j) {
      roots.push_back({i, j, -1});
      roots.push_back({i, j, +1});
    }
  }
  return roots;
}

// Is v a non-negative integer combination of the simple roots of D_n?
// With prefix sums S_k of v: the simple-root coefficients are c_k = S_k for
// k <= n-2, c_n = S_n/2 and c_{n-1} = (S_n - 2 v_n)/2, so the test is:
// S_k >= 0 for k <= n-2, S_n even and >= 0, and S_n - 2 v_n >= 0.
bool in_positive_root_lattice(const std::vector<int>& v) {
  const int n = static_cast<int>(v.size());
  std::int64_t prefix = 0;
  for (int k = 0; k < n - 2; ++k) {
    prefix += v[static_cast<std::size_t>(k)];
    if (prefix < 0) {
      return false;
    }
  }
  const std::int64_t total = prefix + v[static_cast<std::size_t>(n - 2)] +
                             v[static_cast<std::size_t>(n - 1)];
  if (total < 0 || total % 2 != 0) {
    return false;
  }
  return total - 2 * static_cast<std::int64_t>(v[static_cast<std::size_t>(n - 1)]) >= 0;
}

// Height of a positive-root-lattice element: the sum of its simple-root
// coefficients. Pre: in_positive_root_lattice(v).
std::int64_t root_lattice_height(const std::vector<int>& v) {
  const int n = static_cast<int>(v.size());
  std::int64_t height = 0;
  std::int64_t prefix = 0;
  for (int k = 0; k < n - 2; ++k) {
    prefix += v[static_cast<std::size_t>(k)];
    height += prefix;
  }
  const std::int64_t total = prefix + v[static_cast<std::size_t>(n - 2)] +
                             v[static_cast<std::size_t>(n - 1)];
  const std::int64_t c_last = total / 2;
  const std::int64_t c_second_last =
      (total - 2 * static_cast<std::int64_t>(v[static_cast<std::size_t>(n - 1)])) / 2;
  return height + c_last + c_second_last;
}

// All dominant weights mu with lam - mu in the positive root lattice,
// enumerated as non-increasing non-negative tuples bounded by lam[0], plus
// the negated-last-entry variants.
std::vector<Weight> dominant_weights_below(int rank, const Weight& lam) {
  std::vector<Weight> out;
  Weight current(static_cast<std::size_t>(rank), 0);
  std::vector<int> difference(static_cast<std::size_t>(rank), 0);

  const auto consider = [&](const Weight& mu) {
    for (int i = 0; i < rank; ++i) {
      difference[static_cast<std::size_t>(i)] =
          lam[static_cast<std::size_t>(i)] - mu[static_cast<std::size_t>(i)];
    }
    if (in_positive_root_lattice(difference)) {
      out.push_back(mu);
    }
  };

  const auto rec = [&](auto&& self, int position, int bound) -> void {
    if (position == rank) {
      consider(current);
      if (current[static_cast<std::size_t>(rank - 1)] > 0) {
        Weight flipped = current;
        flipped[static_cast<std::size_t>(rank - 1)] =
            -flipped[static_cast<std::size_t>(rank - 1)];
        consider(flipped);
      }
      return;
    }
    for (int value = bound; value >= 0; --value) {
      current[static_cast<std::size_t>(position)] = value;
      self(self, position + 1, value);
    }
  };
  rec(rec, 0, lam.empty() ? 0 : std::max(lam[0], 0));
  return out;
}

}  // namespace

std::int64_t WorkCounter::default_cap() {
  if (const char* env = std::getenv("OG10_WORK_CAP")) {
    char* end = nullptr;
    const long long parsed = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && parsed > 0) {
      return parsed;
    }
  }
  return 100'000'000;
}

bool is_dominant(const Weight& w) {
  const int n = static_cast<int>(w.size());
  if (n < 2) {
    return false;
  }
  for (int i = 0; i + 2 < n; ++i) {
    if (w[static_cast<std::size_t>(i)] < w[static_cast<std::size_t>(i + 1)]) {
      return false;
    }
  }
  return w[static_cast<std::size_t>(n - 2)] >= std::abs(w[static_cast<std::size_t>(n - 1)]);
}

Weight dominant_representative(const Weight& w) {
  Weight out(w.size());
  bool has_zero = false;
  int negatives = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 0) {
      ++negatives;
    }
    if (w[i] == 0) {
      has_zero = true;
    }
    out[i] = std::abs(w[i]);
  }
  std::sort(out.begin(), out.end(), std::greater<int>());
  if (!has_zero && negatives % 2 == 1) {
    out.back() = -out.back();
  }
  return out;
}

std::vector<Weight> weyl_orbit(const Weight& dominant, WorkCounter* counter) {
  const std::size_t n = dominant.size();
  std::vector<int> arrangement(n);
  bool has_zero = false;
  int negatives = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (dominant[i] < 0) {
      ++negatives;
    }
    if (dominant[i] == 0) {
      has_zero = true;
    }
    arrangement[i] = std::abs(dominant[i]);
  }
  const int parity = negatives % 2;
  std::sort(arrangement.begin(), arrangement.end());

  std::vector<Weight> orbit;
  do {
    std::vector<int> nonzero_positions;
    for (std::size_t i = 0; i < n; ++i) {
      if (arrangement[i] != 0) {
        nonzero_positions.push_back(static_cast<int>(i));
      }
    }
    const std::size_t z = nonzero_positions.size();
    for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << z); ++pattern) {
      const int flips = __builtin_popcountll(pattern);
      if (!has_zero && flips % 2 != parity) {
        continue;
      }
      if (counter != nullptr) {
        counter->charge();
      }
      Weight w(arrangement.begin(), arrangement.end());
      for (std::size_t b = 0; b < z; ++b) {
        if ((pattern >> b) & 1U) {
          const auto pos = static_cast<std::size_t>(nonzero_positions[b]);
          w[pos] = -w[pos];
        }
      }
      orbit.push_back(std::move(w));
    }
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  return orbit;
}

std::int64_t weyl_orbit_size(const Weight& dominant) {
  const std::size_t n = dominant.size();
  // Distinct arrangements of the absolute values: n! / prod(count!).
  std::map<int, int> counts;
  std::size_t zeros = 0;
  for (const int v : dominant) {
    ++counts[std::abs(v)];
    if (v == 0) {
      ++zeros;
    }
  }
  std::int64_t arrangements = 1;
  std::size_t placed = 0;
  for (const auto& [value, count] : counts) {
    // multiply by C(placed + count, count)
    arrangements = checked_mul(arrangements,
                               binomial(static_cast<std::int64_t>(placed + count), count));
    placed += static_cast<std::size_t>(count);
  }
  const std::size_t nonzeros = n - zeros;
  std::int64_t sign_patterns = 1;
  if (nonzeros > 0) {
    const std::size_t exponent = (zeros > 0) ? nonzeros : nonzeros - 1;
    sign_patterns = std::int64_t{1} << exponent;
  }
  return checked_mul(arrangements, sign_patterns);
}

DominantCharacter::DominantCharacter(int rank) : rank_(rank) { require_rank(rank); }

void DominantCharacter::add(const Weight& dominant, std::int64_t mult) {
  require_dominant(rank_, dominant);
  if (mult == 0) {
    return;
  }
  // Validate the new total before touching the container so that a throwing
  // add leaves the character unchanged.
  const auto it = mults_.find(dominant);
  const std::int64_t next = checked_add(it == mults_.end() ? 0 : it->second, mult);
  if (next < 0) {
    throw std::logic_error("dominant character driven negative at a weight");
  }
  if (next == 0) {
    if (it != mults_.end()) {
      mults_.erase(it);
    }
    return;
  }
  if (it == mults_.end()) {
    mults_.emplace(dominant, next);
  } else {
    it->second = next;
  }
}

std::int64_t DominantCharacter::multiplicity(const Weight& dominant) const {
  const auto it = mults_.find(dominant);
  return (it == mults_.end()) ? 0 : it->second;
}

std::int64_t DominantCharacter::expanded_dimension() const {
  std::int64_t total = 0;
  for (const auto& [w, m] : mults_) {
    total = checked_add(total, checked_mul(m, weyl_orbit_size(w)));
  }
  return total;
}

std::int64_t weyl_dimension(int rank, const Weight& highest_weight) {
  require_dominant(rank, highest_weight);
  const std::vector<int> rho = rho_vector(rank);
  std::vector<int> shifted(highest_weight.size());
  for (std::size_t i = 0; i < shifted.size(); ++i) {
    shifted[i] = highest_weight[i] + rho[i];
  }

  // Collect numerator and denominator factors, cancel by gcd, then multiply
  // under an overflow guard: the reduced numerator factors multiply out to
  // the dimension, which fits comfortably.
  std::vector<std::int64_t> numerators;
  std::vector<std::int64_t> denominators;
  for (const PositiveRoot& root : positive_roots(rank)) {
    const auto i = static_cast<std::size_t>(root.i);
    const auto j = static_cast<std::size_t>(root.j);
    numerators.push_back(shifted[i] + root.sign * shifted[j]);
    denominators.push_back(rho[i] + root.sign * rho[j]);
  }
  for (std::int64_t& den : denominators) {
    for (std::int64_t& num : numerators) {
      if (den == 1) {
        break;
      }
      const std::int64_t g = std::gcd(num, den);
      if (g > 1) {
        num /= g;
        den /= g;
      }
    }
    if (den != 1) {
      throw std::logic_error("Weyl dimension formula did not reduce to an integer");
    }
  }
  __int128 product = 1;
  for (const std::int64_t num : numerators) {
    product *= num;
    if (product > static_cast<__int128>(INT64_MAX)) {
      throw std::overflow_error("Weyl dimension exceeds int64");
    }
  }
  return static_cast<std::int64_t>(product);
}

DominantCharacter irreducible_character(int rank, const Weight& highest_weight) {
  require_dominant(rank, highest_weight);
  const std::vector<int> rho = rho_vector(rank);
  const std::vector<PositiveRoot> roots = positive_roots(rank);

  std::vector<Weight> doms = dominant_weights_below(rank, highest_weight);
  std::sort(doms.begin(), doms.end(), [&](const Weight& a, const Weight& b) {
    std::vector<int> da(a.size());
    std::vector<int> db(b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      da[i] = highest_weight[i] - a[i];
      db[i] = highest_weight[i] - b[i];
    }
    const std::int64_t ha = root_lattice_height(da);
    const std::int64_t hb = root_lattice_height(db);
    if (ha != hb) {
      return ha < hb;
    }
    return a < b;
  });

  std::vector<int> lam_rho(highest_weight.size());
  for (std::size_t i = 0; i < lam_rho.size(); ++i) {
    lam_rho[i] = highest_weight[i] + rho[i];
  }
  const std::int64_t lam_norm = dot(lam_rho, lam_rho);

  std::map<Weight, std::int64_t> mult;
  std::vector<int> probe(highest_weight.size());
  for (const Weight& mu : doms) {
    if (mu == highest_weight) {
      mult[mu] = 1;
      continue;
    }
    std::vector<int> mu_rho(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) {
      mu_rho[i] = mu[i] + rho[i];
    }
    const std::int64_t denom = lam_norm - dot(mu_rho, mu_rho);
    if (denom <= 0) {
      throw std::logic_error("Freudenthal denominator not positive; weight ordering is broken");
    }
    std::int64_t rhs = 0;
    for (const PositiveRoot& root : roots) {
      const auto i = static_cast<std::size_t>(root.i);
      const auto j = static_cast<std::size_t>(root.j);
      for (std::int64_t k = 1;; ++k) {
        for (std::size_t t = 0; t < probe.size(); ++t) {
          probe[t] = mu[t];
        }
        probe[i] += static_cast<int>(k);
        probe[j] += root.sign * static_cast<int>(k);
        const auto rep = dominant_representative(probe);
        const auto it = mult.find(rep);
        const std::int64_t m = (it == mult.end()) ? 0 : it->second;
        if (m == 0) {
          break;  // weight strings through mu are unbroken
        }
        // <mu + k*alpha, alpha> with alpha = e_i +- e_j.
        const std::int64_t pairing =
            static_cast<std::int64_t>(probe[i]) + root.sign * static_cast<std::int64_t>(probe[j]);
        rhs += 2 * m * pairing;
      }
    }
    if (rhs % denom != 0) {
      throw std::logic_error("Freudenthal recursion produced a non-integer multiplicity");
    }
    const std::int64_t value = rhs / denom;
    if (value < 0) {
      throw std::logic_error("Freudenthal recursion produced a negative multiplicity");
    }
    if (value > 0) {
      mult[mu] = value;
    }
  }

  DominantCharacter out(rank);
  for (const auto& [w, m] : mult) {
    out.add(w, m);
  }
  const std::int64_t expected = weyl_dimension(rank, highest_weight);
  if (out.expanded_dimension() != expected) {
    throw std::logic_error("Freudenthal character size disagrees with the Weyl dimension");
  }
  return out;
}

DominantCharacter vector_character(int rank) {
  DominantCharacter out(rank);
  Weight e1(static_cast<std::size_t>(rank), 0);
  e1[0] = 1;
  out.add(e1, 1);
  return out;
}

namespace {

// Full weight expansion as a collected map weight -> multiplicity.
std::map<Weight, std::int64_t> expand_full(const DominantCharacter& c, WorkCounter& counter) {
  std::map<Weight, std::int64_t> full;
  for (const auto& [dominant, mult] : c.mults()) {
    for (Weight& w : weyl_orbit(dominant, &counter)) {
      full[std::move(w)] += mult;
    }
  }
  return full;
}

// Flat list of weight instances (each weight repeated per multiplicity), the
// index set for k-subset / k-multiset enumeration.
std::vector<const Weight*> flatten(const std::map<Weight, std::int64_t>& full,
                                   WorkCounter& counter) {
  std::vector<const Weight*> list;
  for (const auto& [w, m] : full) {
    counter.charge(m);
    for (std::int64_t copy = 0; copy < m; ++copy) {
      list.push_back(&w);
    }
  }
  return list;
}

DominantCharacter collect_dominant(int rank, const std::map<Weight, std::int64_t>& full,
                                   std::int64_t expected_dimension) {
  DominantCharacter out(rank);
  std::int64_t seen = 0;
  for (const auto& [w, m] : full) {
    seen = checked_add(seen, m);
    if (is_dominant(w)) {
      out.add(w, m);
    }
  }
  if (seen != expected_dimension) {
    throw std::logic_error("weight expansion lost mass: " + std::to_string(seen) + " of " +
                           std::to_string(expected_dimension));
  }
  if (out.expanded_dimension() != expected_dimension) {
    throw std::logic_error(
        "collected character does not expand back to the construction dimension; the input "
        "was not Weyl-invariant");
  }
  return out;
}

enum class TupleKind { multisets, subsets };

// Enumerates k-multisets or k-subsets of the flattened weight list,
// accumulating the sum weight of each tuple.
std::map<Weight, std::int64_t> enumerate_tuples(const std::vector<const Weight*>& list, int k,
                                                TupleKind kind, std::size_t rank,
                                                WorkCounter& counter) {
  std::map<Weight, std::int64_t> acc;
  Weight sum(rank, 0);
  const int n = static_cast<int>(list.size());
  const auto rec = [&](auto&& self, int next, int remaining) -> void {
    if (remaining == 0) {
      counter.charge();
      acc[sum] += 1;
      return;
    }
    // Prune: not enough elements left (subsets) — multisets may reuse.
    if (next >= n) {
      return;
    }
    if (kind == TupleKind::subsets && n - next < remaining) {
      return;
    }
    for (int idx = next; idx < n; ++idx) {
      const Weight& w = *list[static_cast<std::size_t>(idx)];
      for (std::size_t t = 0; t < rank; ++t) {
        sum[t] += w[t];
      }
      self(self, (kind == TupleKind::subsets) ? idx + 1 : idx, remaining - 1);
      for (std::size_t t = 0; t < rank; ++t) {
        sum[t] -= w[t];
      }
    }
  };
  if (k == 0) {
    acc[sum] = 1;
    return acc;
  }
  rec(rec, 0, k);
  return acc;
}

std::int64_t pointer_dimension(const std::vector<const Weight*>& list) {
  return static_cast<std::int64_t>(list.size());
}

}  // namespace

DominantCharacter char_tensor(const DominantCharacter& a, const DominantCharacter& b,
                              WorkCounter& counter) {
  if (a.rank() != b.rank()) {
    throw std::invalid_argument("tensor factors have different ranks");
  }
  const auto full_a = expand_full(a, counter);
  const auto full_b = expand_full(b, counter);
  std::map<Weight, std::int64_t> acc;
  Weight sum(static_cast<std::size_t>(a.rank()), 0);
  for (const auto& [wa, ma] : full_a) {
    for (const auto& [wb, mb] : full_b) {
      counter.charge();
      for (std::size_t t = 0; t < sum.size(); ++t) {
        sum[t] = wa[t] + wb[t];
      }
      acc[sum] = checked_add(acc[sum], checked_mul(ma, mb));
    }
  }
  const std::int64_t expected = checked_mul(a.expanded_dimension(), b.expanded_dimension());
  return collect_dominant(a.rank(), acc, expected);
}

DominantCharacter char_sym_power(const DominantCharacter& c, int k, WorkCounter& counter) {
  if (k < 0) {
    throw std::invalid_argument("negative symmetric power");
  }
  const auto full = expand_full(c, counter);
  const auto list = flatten(full, counter);
  const auto acc = enumerate_tuples(list, k, TupleKind::multisets,
                                    static_cast<std::size_t>(c.rank()), counter);
  const std::int64_t expected = binomial(pointer_dimension(list) + k - 1, k);
  return collect_dominant(c.rank(), acc, expected);
}

DominantCharacter char_ext_power(const DominantCharacter& c, int k, WorkCounter& counter) {
  if (k < 0) {
    throw std::invalid_argument("negative exterior power");
  }
  const auto full = expand_full(c, counter);
  const auto list = flatten(full, counter);
  const auto acc = enumerate_tuples(list, k, TupleKind::subsets,
                                    static_cast<std::size_t>(c.rank()), counter);
  const std::int64_t expected = binomial(pointer_dimension(list), k);
  return collect_dominant(c.rank(), acc, expected);
}

std::vector<std::pair<Weight, std::int64_t>> decompose(const DominantCharacter& c) {
  std::map<Weight, std::int64_t> work = c.mults();
  std::vector<std::pair<Weight, std::int64_t>> parts;
  while (!work.empty()) {
    // Lexicographically largest weight: among the maximal elements of the
    // dominance order every one is lex-maximal, so this is a valid leading
    // weight of the remaining character.
    const auto lead = std::prev(work.end());
    const Weight leading = lead->first;
    const std::int64_t mult = lead->second;
    if (mult < 0) {
      throw std::logic_error("decomposition drove a leading weight negative: input is not a "
                             "genuine character");
    }
    const DominantCharacter irr = irreducible_character(static_cast<int>(leading.size()),
                                                        leading);
    for (const auto& [w, m] : irr.mults()) {
      const auto it = work.emplace(w, 0).first;
      it->second -= checked_mul(mult, m);
      if (it->second == 0) {
        work.erase(it);
      } else if (it->second < 0) {
        throw std::logic_error(
            "decomposition produced a negative remainder: input is not a genuine character");
      }
    }
    parts.emplace_back(leading, mult);
  }
  return parts;
}

CyclicCharacter torus_specialize(const DominantCharacter& c,
                                 const std::vector<std::int64_t>& assignment,
                                 std::int64_t order) {
  if (order < 1) {
    throw std::invalid_argument("torus order must be >= 1");
  }
  if (static_cast<int>(assignment.size()) != c.rank()) {
    throw std::invalid_argument("assignment length does not match the rank");
  }
  std::vector<std::int64_t> mults(static_cast<std::size_t>(order), 0);
  WorkCounter counter;  // expansion here is small; default cap applies
  for (const auto& [dominant, mult] : c.mults()) {
    for (const Weight& w : weyl_orbit(dominant, &counter)) {
      std::int64_t index = 0;
      for (std::size_t t = 0; t < w.size(); ++t) {
        index += assignment[t] * w[t];
      }
      index %= order;
      if (index < 0) {
        index += order;
      }
      mults[static_cast<std::size_t>(index)] =
          checked_add(mults[static_cast<std::size_t>(index)], mult);
    }
  }
  return CyclicCharacter(order, std::move(mults));
}

PlethysmCertificate verify_plethysm(int rank, WorkCounter& counter) {
  require_rank(rank);
  PlethysmCertificate cert;
  cert.rank = rank;

  const DominantCharacter vec = vector_character(rank);
  const DominantCharacter lambda2 = char_ext_power(vec, 2, counter);
  const DominantCharacter sym2lambda2 = char_sym_power(lambda2, 2, counter);
  const DominantCharacter sym2 = char_sym_power(vec, 2, counter);
  const DominantCharacter lambda4 = char_ext_power(vec, 4, counter);

  cert.dim_vector = vec.expanded_dimension();
  cert.dim_sym2 = sym2.expanded_dimension();
  cert.dim_lambda4 = lambda4.expanded_dimension();
  cert.dim_sym2lambda2 = sym2lambda2.expanded_dimension();

  Weight w22(static_cast<std::size_t>(rank), 0);
  w22[0] = 2;
  w22[1] = 2;
  cert.dim_v22 = weyl_dimension(rank, w22);

  // Signed residual Sym^2 Lambda^2 V - Sym^2 V - Lambda^4 V, then exact
  // comparison with the Freudenthal character of the (2,2,0,...,0)
  // irreducible: equality certifies the three-term decomposition.
  std::map<Weight, std::int64_t> residual = sym2lambda2.mults();
  for (const DominantCharacter* sub : {&sym2, &lambda4}) {
    for (const auto& [w, m] : sub->mults()) {
      residual[w] -= m;
      if (residual[w] == 0) {
        residual.erase(w);
      }
    }
  }
  const DominantCharacter irr22 = irreducible_character(rank, w22);
  cert.three_term_identity = (residual == irr22.mults());

  cert.decomposition = decompose(sym2lambda2);
  for (const auto& [w, m] : cert.decomposition) {
    cert.decomposition_dims.push_back(weyl_dimension(rank, w));
  }
  cert.work_units = counter.used();
  return cert;
}

}  // namespace og10
