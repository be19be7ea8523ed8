#include "og10/cyclic_character.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "og10/rational.hpp"

namespace og10 {
namespace {

std::int64_t mod_reduce(std::int64_t k, std::int64_t n) {
  std::int64_t m = k % n;
  return (m < 0) ? m + n : m;
}

std::int64_t lcm_order(std::int64_t a, std::int64_t b) {
  return a / std::gcd(a, b) * b;
}

// Cyclic convolution of signed multiplicity vectors of equal length.
std::vector<std::int64_t> convolve(const std::vector<std::int64_t>& a,
                                   const std::vector<std::int64_t>& b) {
  const std::size_t n = a.size();
  std::vector<std::int64_t> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0) {
        continue;
      }
      std::size_t k = i + j;
      if (k >= n) {
        k -= n;
      }
      out[k] = checked_add(out[k], checked_mul(a[i], b[j]));
    }
  }
  return out;
}

std::vector<std::int64_t> adams_reindex(const std::vector<std::int64_t>& m, std::int64_t j) {
  const std::int64_t n = static_cast<std::int64_t>(m.size());
  std::vector<std::int64_t> out(m.size(), 0);
  for (std::int64_t i = 0; i < n; ++i) {
    if (m[static_cast<std::size_t>(i)] != 0) {
      const std::int64_t k = mod_reduce(i * j, n);
      out[static_cast<std::size_t>(k)] =
          checked_add(out[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(i)]);
    }
  }
  return out;
}

enum class PowerKind { symmetric, exterior };

// Shared Newton-recurrence driver for h_k (symmetric) and e_k (exterior).
CyclicCharacter newton_power(const CyclicCharacter& c, std::int64_t k, PowerKind kind) {
  if (k < 0) {
    throw std::invalid_argument("negative tensor power exponent");
  }
  const std::int64_t n = c.order();
  const std::size_t nn = static_cast<std::size_t>(n);

  std::vector<std::vector<std::int64_t>> adams_powers;  // psi^1 .. psi^k of c
  adams_powers.reserve(static_cast<std::size_t>(k));
  for (std::int64_t j = 1; j <= k; ++j) {
    adams_powers.push_back(adams_reindex(c.mults(), j));
  }

  std::vector<std::vector<std::int64_t>> layers;  // layers[m] = h_m or e_m
  layers.reserve(static_cast<std::size_t>(k) + 1);
  std::vector<std::int64_t> unit(nn, 0);
  unit[0] = 1;
  layers.push_back(std::move(unit));

  for (std::int64_t m = 1; m <= k; ++m) {
    std::vector<std::int64_t> acc(nn, 0);
    for (std::int64_t i = 1; i <= m; ++i) {
      const bool negate = (kind == PowerKind::exterior) && (i % 2 == 0);
      const std::vector<std::int64_t> term =
          convolve(adams_powers[static_cast<std::size_t>(i - 1)],
                   layers[static_cast<std::size_t>(m - i)]);
      for (std::size_t idx = 0; idx < nn; ++idx) {
        acc[idx] = negate ? checked_sub(acc[idx], term[idx]) : checked_add(acc[idx], term[idx]);
      }
    }
    for (std::size_t idx = 0; idx < nn; ++idx) {
      if (acc[idx] % m != 0) {
        throw std::logic_error("Newton recurrence produced a non-exact division at power " +
                               std::to_string(m));
      }
      acc[idx] /= m;
      if (acc[idx] < 0) {
        throw std::logic_error("Newton recurrence produced a negative multiplicity at power " +
                               std::to_string(m));
      }
    }
    layers.push_back(std::move(acc));
  }
  return CyclicCharacter(n, std::move(layers.back()));
}

// DP over eigenvalue classes for the generating-function route. State:
// dp[d][res] = number of degree-d selections with exponent sum res (mod n).
CyclicCharacter product_power(const CyclicCharacter& c, std::int64_t k, PowerKind kind) {
  if (k < 0) {
    throw std::invalid_argument("negative tensor power exponent");
  }
  const std::int64_t n = c.order();
  const std::size_t nn = static_cast<std::size_t>(n);
  const std::size_t kk = static_cast<std::size_t>(k);

  std::vector<std::vector<std::int64_t>> dp(kk + 1, std::vector<std::int64_t>(nn, 0));
  dp[0][0] = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    const std::int64_t m = c.mults()[static_cast<std::size_t>(i)];
    if (m == 0) {
      continue;
    }
    // Weight of picking j copies from this class: C(m+j-1, j) for symmetric
    // powers, C(m, j) for exterior powers.
    std::vector<std::int64_t> weight(kk + 1, 0);
    for (std::int64_t j = 0; j <= k; ++j) {
      weight[static_cast<std::size_t>(j)] =
          (kind == PowerKind::symmetric) ? binomial(m + j - 1, j) : binomial(m, j);
    }
    std::vector<std::vector<std::int64_t>> next(kk + 1, std::vector<std::int64_t>(nn, 0));
    for (std::size_t d = 0; d <= kk; ++d) {
      for (std::size_t res = 0; res < nn; ++res) {
        const std::int64_t cur = dp[d][res];
        if (cur == 0) {
          continue;
        }
        for (std::int64_t j = 0; d + static_cast<std::size_t>(j) <= kk; ++j) {
          const std::int64_t w = weight[static_cast<std::size_t>(j)];
          if (w == 0) {
            continue;
          }
          const std::size_t nd = d + static_cast<std::size_t>(j);
          const std::size_t nres =
              static_cast<std::size_t>(mod_reduce(static_cast<std::int64_t>(res) + i * j, n));
          next[nd][nres] = checked_add(next[nd][nres], checked_mul(cur, w));
        }
      }
    }
    dp = std::move(next);
  }
  return CyclicCharacter(n, std::move(dp[kk]));
}

}  // namespace

CyclicCharacter::CyclicCharacter(std::int64_t order, std::vector<std::int64_t> mults)
    : order_(order), mults_(std::move(mults)) {
  if (order_ < 1) {
    throw std::invalid_argument("character order must be >= 1");
  }
  if (static_cast<std::int64_t>(mults_.size()) != order_) {
    throw std::invalid_argument("multiplicity vector length " + std::to_string(mults_.size()) +
                                " does not match order " + std::to_string(order_));
  }
  for (const std::int64_t m : mults_) {
    if (m < 0) {
      throw std::invalid_argument("negative multiplicity in character");
    }
  }
}

CyclicCharacter CyclicCharacter::identity(std::int64_t dimension) {
  return CyclicCharacter(1, {dimension});
}

std::int64_t CyclicCharacter::eig(std::int64_t k) const {
  return mults_[static_cast<std::size_t>(mod_reduce(k, order_))];
}

std::int64_t CyclicCharacter::dimension() const {
  std::int64_t total = 0;
  for (const std::int64_t m : mults_) {
    total = checked_add(total, m);
  }
  return total;
}

bool CyclicCharacter::is_rational() const {
  for (std::int64_t i = 0; i < order_; ++i) {
    // Representative of the Galois class of i: the first index with the same
    // gcd with the order.
    const std::int64_t d = std::gcd(i, order_);
    for (std::int64_t j = i + 1; j < order_; ++j) {
      if (std::gcd(j, order_) == d &&
          mults_[static_cast<std::size_t>(i)] != mults_[static_cast<std::size_t>(j)]) {
        return false;
      }
    }
  }
  return true;
}

CyclicCharacter CyclicCharacter::lifted_to(std::int64_t new_order) const {
  if (new_order < order_ || new_order % order_ != 0) {
    throw std::invalid_argument("lift target " + std::to_string(new_order) +
                                " is not a multiple of order " + std::to_string(order_));
  }
  const std::int64_t stride = new_order / order_;
  std::vector<std::int64_t> out(static_cast<std::size_t>(new_order), 0);
  for (std::int64_t i = 0; i < order_; ++i) {
    out[static_cast<std::size_t>(i * stride)] = mults_[static_cast<std::size_t>(i)];
  }
  return CyclicCharacter(new_order, std::move(out));
}

std::string CyclicCharacter::str() const {
  std::ostringstream os;
  os << "(order " << order_ << "; [";
  for (std::size_t i = 0; i < mults_.size(); ++i) {
    if (i) {
      os << ",";
    }
    os << mults_[i];
  }
  os << "])";
  return os.str();
}

VirtualCyclicCharacter::VirtualCyclicCharacter(std::int64_t order, std::vector<std::int64_t> mults)
    : order_(order), mults_(std::move(mults)) {
  if (order_ < 1) {
    throw std::invalid_argument("character order must be >= 1");
  }
  if (static_cast<std::int64_t>(mults_.size()) != order_) {
    throw std::invalid_argument("multiplicity vector length does not match order");
  }
}

VirtualCyclicCharacter::VirtualCyclicCharacter(const CyclicCharacter& c)
    : order_(c.order()), mults_(c.mults()) {}

std::int64_t VirtualCyclicCharacter::eig(std::int64_t k) const {
  return mults_[static_cast<std::size_t>(mod_reduce(k, order_))];
}

std::int64_t VirtualCyclicCharacter::dimension() const {
  std::int64_t total = 0;
  for (const std::int64_t m : mults_) {
    total = checked_add(total, m);
  }
  return total;
}

VirtualCyclicCharacter VirtualCyclicCharacter::lifted_to(std::int64_t new_order) const {
  if (new_order < order_ || new_order % order_ != 0) {
    throw std::invalid_argument("lift target is not a multiple of the order");
  }
  const std::int64_t stride = new_order / order_;
  std::vector<std::int64_t> out(static_cast<std::size_t>(new_order), 0);
  for (std::int64_t i = 0; i < order_; ++i) {
    out[static_cast<std::size_t>(i * stride)] = mults_[static_cast<std::size_t>(i)];
  }
  return VirtualCyclicCharacter(new_order, std::move(out));
}

CyclicCharacter VirtualCyclicCharacter::certify_non_negative() const {
  for (std::size_t i = 0; i < mults_.size(); ++i) {
    if (mults_[i] < 0) {
      throw std::logic_error("virtual character has negative multiplicity " +
                             std::to_string(mults_[i]) + " at eigenvalue index " +
                             std::to_string(i));
    }
  }
  return CyclicCharacter(order_, mults_);
}

VirtualCyclicCharacter operator+(const VirtualCyclicCharacter& a,
                                 const VirtualCyclicCharacter& b) {
  const std::int64_t n = lcm_order(a.order(), b.order());
  const VirtualCyclicCharacter la = a.lifted_to(n);
  const VirtualCyclicCharacter lb = b.lifted_to(n);
  std::vector<std::int64_t> out(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = checked_add(la.mults()[i], lb.mults()[i]);
  }
  return VirtualCyclicCharacter(n, std::move(out));
}

VirtualCyclicCharacter operator-(const VirtualCyclicCharacter& a,
                                 const VirtualCyclicCharacter& b) {
  const std::int64_t n = lcm_order(a.order(), b.order());
  const VirtualCyclicCharacter la = a.lifted_to(n);
  const VirtualCyclicCharacter lb = b.lifted_to(n);
  std::vector<std::int64_t> out(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = checked_sub(la.mults()[i], lb.mults()[i]);
  }
  return VirtualCyclicCharacter(n, std::move(out));
}

CyclicCharacter direct_sum(const CyclicCharacter& a, const CyclicCharacter& b) {
  const std::int64_t n = lcm_order(a.order(), b.order());
  const CyclicCharacter la = a.lifted_to(n);
  const CyclicCharacter lb = b.lifted_to(n);
  std::vector<std::int64_t> out(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = checked_add(la.mults()[i], lb.mults()[i]);
  }
  return CyclicCharacter(n, std::move(out));
}

CyclicCharacter tensor(const CyclicCharacter& a, const CyclicCharacter& b) {
  const std::int64_t n = lcm_order(a.order(), b.order());
  const CyclicCharacter la = a.lifted_to(n);
  const CyclicCharacter lb = b.lifted_to(n);
  return CyclicCharacter(n, convolve(la.mults(), lb.mults()));
}

CyclicCharacter adams(const CyclicCharacter& c, std::int64_t j) {
  return CyclicCharacter(c.order(), adams_reindex(c.mults(), j));
}

CyclicCharacter sym_power(const CyclicCharacter& c, std::int64_t k) {
  return newton_power(c, k, PowerKind::symmetric);
}

CyclicCharacter ext_power(const CyclicCharacter& c, std::int64_t k) {
  return newton_power(c, k, PowerKind::exterior);
}

CyclicCharacter sym_power_by_product(const CyclicCharacter& c, std::int64_t k) {
  return product_power(c, k, PowerKind::symmetric);
}

CyclicCharacter ext_power_by_product(const CyclicCharacter& c, std::int64_t k) {
  return product_power(c, k, PowerKind::exterior);
}

CyclicCharacter dual(const CyclicCharacter& c) { return adams(c, -1); }

CyclicCharacter negate_operator(const CyclicCharacter& c) {
  const std::int64_t n = lcm_order(c.order(), 2);
  const CyclicCharacter lifted = c.lifted_to(n);
  const std::int64_t half = n / 2;
  std::vector<std::int64_t> out(static_cast<std::size_t>(n), 0);
  for (std::int64_t e = 0; e < n; ++e) {
    const std::size_t target = static_cast<std::size_t>(mod_reduce(e + half, n));
    out[target] = checked_add(out[target], lifted.mults()[static_cast<std::size_t>(e)]);
  }
  return CyclicCharacter(n, std::move(out));
}

}  // namespace og10
