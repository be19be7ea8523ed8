#pragma once

// Independent test oracles. Everything here is deliberately implemented by
// direct enumeration over flattened eigenvalue lists, so it shares no code
// path with the recurrence- and product-based routes under test.

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "og10/cyclic_character.hpp"

namespace oracles {

// One eigenvalue exponent per dimension.
inline std::vector<std::int64_t> flatten(const og10::CyclicCharacter& c) {
  std::vector<std::int64_t> out;
  for (std::int64_t i = 0; i < c.order(); ++i) {
    for (std::int64_t j = 0; j < c.mults()[static_cast<std::size_t>(i)]; ++j) {
      out.push_back(i);
    }
  }
  return out;
}

namespace detail {

inline void enumerate(const std::vector<std::int64_t>& exps, std::int64_t order, std::int64_t k,
                      bool strict, std::size_t first, std::int64_t residue,
                      std::vector<std::int64_t>& accum) {
  if (k == 0) {
    ++accum[static_cast<std::size_t>(residue)];
    return;
  }
  for (std::size_t i = first; i < exps.size(); ++i) {
    enumerate(exps, order, k - 1, strict, strict ? i + 1 : i,
              (residue + exps[i]) % order, accum);
  }
}

}  // namespace detail

// k-th symmetric power by enumerating k-multisets of eigenvalues.
inline og10::CyclicCharacter brute_sym_power(const og10::CyclicCharacter& c, std::int64_t k) {
  const std::vector<std::int64_t> exps = flatten(c);
  std::vector<std::int64_t> accum(static_cast<std::size_t>(c.order()), 0);
  detail::enumerate(exps, c.order(), k, /*strict=*/false, 0, 0, accum);
  return og10::CyclicCharacter(c.order(), accum);
}

// k-th exterior power by enumerating k-subsets of eigenvalues.
inline og10::CyclicCharacter brute_ext_power(const og10::CyclicCharacter& c, std::int64_t k) {
  const std::vector<std::int64_t> exps = flatten(c);
  std::vector<std::int64_t> accum(static_cast<std::size_t>(c.order()), 0);
  detail::enumerate(exps, c.order(), k, /*strict=*/true, 0, 0, accum);
  return og10::CyclicCharacter(c.order(), accum);
}

inline std::int64_t choose(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) {
    return 0;
  }
  std::int64_t result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

// Galois-rational random character: multiplicities constant on the classes
// {i : gcd(i, n) = d}, one independent draw per divisor class.
inline og10::CyclicCharacter random_rational_character(std::mt19937_64& rng, std::int64_t order,
                                                       std::int64_t max_class_mult) {
  std::vector<std::int64_t> mults(static_cast<std::size_t>(order), 0);
  std::uniform_int_distribution<std::int64_t> dist(0, max_class_mult);
  for (std::int64_t d = 1; d <= order; ++d) {
    if (order % d != 0) {
      continue;
    }
    const std::int64_t value = dist(rng);
    for (std::int64_t i = 0; i < order; ++i) {
      const std::int64_t g = (i == 0) ? order : std::gcd(i, order);
      if (g == d) {
        mults[static_cast<std::size_t>(i)] = value;
      }
    }
  }
  return og10::CyclicCharacter(order, mults);
}

// Galois-rational random character with prescribed total dimension: greedily
// fills divisor classes whose size still fits, one class element at a time.
inline og10::CyclicCharacter random_rational_character_of_dim(std::mt19937_64& rng,
                                                              std::int64_t order,
                                                              std::int64_t dimension) {
  std::vector<std::int64_t> class_of(static_cast<std::size_t>(order), 0);
  std::vector<std::int64_t> divisors;
  std::vector<std::int64_t> class_size;
  for (std::int64_t d = 1; d <= order; ++d) {
    if (order % d == 0) {
      divisors.push_back(d);
      std::int64_t size = 0;
      for (std::int64_t i = 0; i < order; ++i) {
        const std::int64_t g = (i == 0) ? order : std::gcd(i, order);
        if (g == d) {
          ++size;
        }
      }
      class_size.push_back(size);
    }
  }
  std::vector<std::int64_t> class_mult(divisors.size(), 0);
  std::int64_t remaining = dimension;
  while (remaining > 0) {
    std::vector<std::size_t> fitting;
    for (std::size_t j = 0; j < divisors.size(); ++j) {
      if (class_size[j] <= remaining) {
        fitting.push_back(j);
      }
    }
    std::uniform_int_distribution<std::size_t> pick(0, fitting.size() - 1);
    const std::size_t j = fitting[pick(rng)];
    ++class_mult[j];
    remaining -= class_size[j];
  }
  std::vector<std::int64_t> mults(static_cast<std::size_t>(order), 0);
  for (std::size_t j = 0; j < divisors.size(); ++j) {
    for (std::int64_t i = 0; i < order; ++i) {
      const std::int64_t g = (i == 0) ? order : std::gcd(i, order);
      if (g == divisors[j]) {
        mults[static_cast<std::size_t>(i)] = class_mult[j];
      }
    }
  }
  return og10::CyclicCharacter(order, mults);
}

// Arbitrary (not necessarily rational) random character of bounded dimension.
inline og10::CyclicCharacter random_character(std::mt19937_64& rng, std::int64_t order,
                                              std::int64_t max_dimension) {
  std::uniform_int_distribution<std::int64_t> dim_dist(1, max_dimension);
  std::uniform_int_distribution<std::int64_t> exp_dist(0, order - 1);
  std::vector<std::int64_t> mults(static_cast<std::size_t>(order), 0);
  const std::int64_t dim = dim_dist(rng);
  for (std::int64_t i = 0; i < dim; ++i) {
    ++mults[static_cast<std::size_t>(exp_dist(rng))];
  }
  return og10::CyclicCharacter(order, mults);
}

}  // namespace oracles
