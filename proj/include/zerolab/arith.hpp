#pragma once

#include <algorithm>
#include <cstdint>
#include <string_view>
#include <vector>

#include "zerolab/error.hpp"
#include "zerolab/testfn.hpp"

namespace zerolab::arith {

// Largest sieve limit accepted by sieve_primes.
inline constexpr std::uint64_t kMaxSieveLimit = std::uint64_t{1} << 32;

// Default cap on the prime limit a weighted prime sum may request.
inline constexpr std::uint64_t kDefaultPrimeBudget = 400'000'000;

class PrimeTable {
 public:
  PrimeTable() = default;
  PrimeTable(std::uint64_t limit, std::vector<std::uint64_t> primes)
      : limit_(limit), primes_(std::move(primes)) {}

  std::uint64_t limit() const noexcept { return limit_; }
  const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }
  std::size_t size() const noexcept { return primes_.size(); }
  bool empty() const noexcept { return primes_.empty(); }
  auto begin() const noexcept { return primes_.begin(); }
  auto end() const noexcept { return primes_.end(); }

  bool contains(std::uint64_t n) const;

 private:
  std::uint64_t limit_ = 0;
  std::vector<std::uint64_t> primes_;
};

// Eratosthenes over odd numbers. limit = 0 or 1 gives an empty table.
PrimeTable sieve_primes(std::uint64_t limit);

// An arithmetic function tabulated on 1..limit.
template <class T>
class BasicArithFn {
 public:
  using value_type = T;

  BasicArithFn() = default;
  explicit BasicArithFn(std::uint64_t limit) : values_(limit + 1, T{}) {}
  BasicArithFn(std::uint64_t limit, std::vector<T> values_from_one) : values_(limit + 1, T{}) {
    if (values_from_one.size() != limit) throw InputError("ArithFn: need exactly `limit` values");
    std::copy(values_from_one.begin(), values_from_one.end(), values_.begin() + 1);
  }

  std::uint64_t limit() const noexcept { return values_.empty() ? 0 : values_.size() - 1; }

  T operator()(std::uint64_t n) const { return values_[n]; }
  T& operator[](std::uint64_t n) { return values_[n]; }

  T at(std::uint64_t n) const {
    if (n == 0 || n > limit()) throw InputError("ArithFn: argument outside 1..limit");
    return values_[n];
  }

  bool operator==(const BasicArithFn&) const = default;

 private:
  std::vector<T> values_;  // index 0 unused
};

using ArithFn = BasicArithFn<double>;
using IntArithFn = BasicArithFn<std::int64_t>;

template <class T>
BasicArithFn<T> dirichlet_convolve(const BasicArithFn<T>& f, const BasicArithFn<T>& g) {
  if (f.limit() != g.limit()) throw InputError("dirichlet_convolve: limits differ");
  const std::uint64_t n = f.limit();
  BasicArithFn<T> h(n);
  for (std::uint64_t d = 1; d <= n; ++d) {
    const T fd = f(d);
    if (fd == T{}) continue;
    for (std::uint64_t m = 1, dm = d; dm <= n; ++m, dm += d) h[dm] += fd * g(m);
  }
  return h;
}

enum class StandardFn { mobius, tau2, lambda2, phi2, id, one };

StandardFn parse_standard_fn(std::string_view name);

// mobius, tau2 = 1*1, lambda2 = mu*mu, phi2 = lambda2 * mu^2 * id, id, one.
IntArithFn standard_fn(StandardFn which, std::uint64_t limit);
IntArithFn standard_fn(std::string_view name, std::uint64_t limit);

// Indicator of n = 1, the identity for Dirichlet convolution.
IntArithFn unit_fn(std::uint64_t limit);

ArithFn to_real(const IntArithFn& f);

// Ascending divisors of n by trial division.
std::vector<std::uint64_t> divisors(std::uint64_t n);

// Distinct prime factors of n, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// Sum over primes p <= exp(T log_c / nu) of
//   phi_hat(nu log p / log_c) * 2 log p / (p^{nu/2} log_c).
// With nu = 2 this tends to phi(0)/2 as log_c grows.
double mertens_weighted_sum(const testfn::FourierPair& fp, double log_c, int nu,
                            std::uint64_t prime_budget = kDefaultPrimeBudget);

// Sum over primes p | q of log(p) / p^s.
double prime_divisor_log_sum(std::uint64_t q, double s);

}  // namespace zerolab::arith
