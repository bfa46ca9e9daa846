#include "zerolab/arith.hpp"

#include <algorithm>
#include <cmath>

namespace zerolab::arith {

bool PrimeTable::contains(std::uint64_t n) const {
  return std::binary_search(primes_.begin(), primes_.end(), n);
}

PrimeTable sieve_primes(std::uint64_t limit) {
  if (limit > kMaxSieveLimit) {
    throw InputError("sieve_primes: limit " + std::to_string(limit) + " exceeds " +
                     std::to_string(kMaxSieveLimit));
  }
  std::vector<std::uint64_t> primes;
  if (limit < 2) return PrimeTable(limit, std::move(primes));

  // composite[i] describes 2i+1.
  const std::uint64_t half = (limit - 1) / 2 + 1;
  std::vector<bool> composite(half, false);
  for (std::uint64_t i = 1; (2 * i + 1) * (2 * i + 1) <= limit; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    for (std::uint64_t j = (p * p) / 2; j < half; j += p) composite[j] = true;
  }
  primes.reserve(static_cast<std::size_t>(1.3 * limit / std::log(static_cast<double>(limit))) + 8);
  primes.push_back(2);
  for (std::uint64_t i = 1; i < half; ++i) {
    if (!composite[i]) primes.push_back(2 * i + 1);
  }
  return PrimeTable(limit, std::move(primes));
}

StandardFn parse_standard_fn(std::string_view name) {
  if (name == "mobius") return StandardFn::mobius;
  if (name == "tau2") return StandardFn::tau2;
  if (name == "lambda2") return StandardFn::lambda2;
  if (name == "phi2") return StandardFn::phi2;
  if (name == "id") return StandardFn::id;
  if (name == "one") return StandardFn::one;
  throw InputError("unknown arithmetic function '" + std::string(name) + "'");
}

namespace {

IntArithFn mobius(std::uint64_t limit) {
  IntArithFn mu(limit);
  if (limit == 0) return mu;
  for (std::uint64_t n = 1; n <= limit; ++n) mu[n] = 1;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t m = 2 * p; m <= limit; m += p) composite[m] = true;
    for (std::uint64_t m = p; m <= limit; m += p) mu[m] = -mu[m];
    if (p <= limit / p) {
      for (std::uint64_t m = p * p; m <= limit; m += p * p) mu[m] = 0;
    }
  }
  return mu;
}

IntArithFn constant_one(std::uint64_t limit) {
  IntArithFn f(limit);
  for (std::uint64_t n = 1; n <= limit; ++n) f[n] = 1;
  return f;
}

IntArithFn identity(std::uint64_t limit) {
  IntArithFn f(limit);
  for (std::uint64_t n = 1; n <= limit; ++n) f[n] = static_cast<std::int64_t>(n);
  return f;
}

}  // namespace

IntArithFn standard_fn(StandardFn which, std::uint64_t limit) {
  if (limit == 0) throw InputError("standard_fn: limit must be >= 1");
  switch (which) {
    case StandardFn::mobius:
      return mobius(limit);
    case StandardFn::tau2: {
      const auto one = constant_one(limit);
      return dirichlet_convolve(one, one);
    }
    case StandardFn::lambda2: {
      const auto mu = mobius(limit);
      return dirichlet_convolve(mu, mu);
    }
    case StandardFn::phi2: {
      const auto mu = mobius(limit);
      auto mu_sq = mu;
      for (std::uint64_t n = 1; n <= limit; ++n) mu_sq[n] = mu(n) * mu(n);
      return dirichlet_convolve(dirichlet_convolve(dirichlet_convolve(mu, mu), mu_sq), identity(limit));
    }
    case StandardFn::id:
      return identity(limit);
    case StandardFn::one:
      return constant_one(limit);
  }
  throw InputError("standard_fn: bad selector");
}

IntArithFn standard_fn(std::string_view name, std::uint64_t limit) {
  return standard_fn(parse_standard_fn(name), limit);
}

IntArithFn unit_fn(std::uint64_t limit) {
  IntArithFn e(limit);
  if (limit >= 1) e[1] = 1;
  return e;
}

ArithFn to_real(const IntArithFn& f) {
  ArithFn out(f.limit());
  for (std::uint64_t n = 1; n <= f.limit(); ++n) out[n] = static_cast<double>(f(n));
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

double mertens_weighted_sum(const testfn::FourierPair& fp, double log_c, int nu,
                            std::uint64_t prime_budget) {
  if (!(log_c > 0.0)) throw InputError("mertens_weighted_sum: log_c must be positive");
  if (nu != 1 && nu != 2) throw InputError("mertens_weighted_sum: nu must be 1 or 2");

  const double reach = fp.support_radius * log_c / nu;
  const double cutoff = std::floor(std::exp(reach));
  if (!(cutoff <= static_cast<double>(prime_budget))) {
    throw ResourceError("mertens_weighted_sum: primes up to exp(" + std::to_string(reach) +
                        ") exceed the budget of " + std::to_string(prime_budget));
  }
  const auto limit = static_cast<std::uint64_t>(cutoff);
  double total = 0.0;
  for (const std::uint64_t p : sieve_primes(limit)) {
    const double lp = std::log(static_cast<double>(p));
    total += fp.hat(nu * lp / log_c) * 2.0 * lp / (std::pow(static_cast<double>(p), nu / 2.0) * log_c);
  }
  return total;
}

double prime_divisor_log_sum(std::uint64_t q, double s) {
  if (q == 0) throw InputError("prime_divisor_log_sum: q must be positive");
  if (!(s > 0.0 && s <= 1.0)) throw InputError("prime_divisor_log_sum: s must lie in (0, 1]");
  double total = 0.0;
  for (const std::uint64_t p : prime_factors(q)) {
    const double pd = static_cast<double>(p);
    total += std::log(pd) / std::pow(pd, s);
  }
  return total;
}

}  // namespace zerolab::arith
