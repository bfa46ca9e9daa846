#include <doctest.h>

#include <cmath>
#include <random>

#include "zerolab/arith.hpp"
#include "zerolab/error.hpp"

using namespace zerolab;
using namespace zerolab::arith;

namespace {

bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Brute-force sum_{d | n} f(d) g(n / d).
std::int64_t convolve_at(const IntArithFn& f, const IntArithFn& g, std::uint64_t n) {
  std::int64_t total = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) total += f(d) * g(n / d);
  }
  return total;
}

IntArithFn random_fn(std::uint64_t limit, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(-5, 5);
  IntArithFn f(limit);
  for (std::uint64_t n = 1; n <= limit; ++n) f[n] = dist(rng);
  return f;
}

}  // namespace

TEST_CASE("sieve_primes small tables") {
  CHECK(sieve_primes(10).primes() == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(sieve_primes(1).empty());
  CHECK(sieve_primes(0).empty());
  CHECK(sieve_primes(2).primes() == std::vector<std::uint64_t>{2});
  CHECK(sieve_primes(3).primes() == std::vector<std::uint64_t>{2, 3});
  CHECK_THROWS_AS(sieve_primes(kMaxSieveLimit + 1), InputError);
}

TEST_CASE("sieve_primes agrees with trial division") {
  const auto table = sieve_primes(20000);
  std::vector<std::uint64_t> oracle;
  for (std::uint64_t n = 0; n <= 20000; ++n) {
    if (is_prime_trial(n)) oracle.push_back(n);
  }
  CHECK(table.primes() == oracle);
  CHECK(table.contains(19997));
  CHECK_FALSE(table.contains(19999));
}

TEST_CASE("prime count to one million") {
  std::uint64_t count = 0;
  for (std::uint64_t n = 2; n <= 1000000; ++n) count += is_prime_trial(n);
  CHECK(count == 78498);
  CHECK(sieve_primes(1000000).size() == count);
}

TEST_CASE("standard functions at known points") {
  const auto tau2 = standard_fn("tau2", 100);
  const auto lambda2 = standard_fn("lambda2", 1000);
  const auto mu = standard_fn("mobius", 100);
  CHECK(tau2(8) == 4);
  CHECK(tau2(12) == 6);
  CHECK(mu(1) == 1);
  CHECK(mu(30) == -1);
  CHECK(mu(12) == 0);
  for (const std::uint64_t p : {2, 3, 5, 7}) {
    CHECK(lambda2(p) == -2);
    CHECK(lambda2(p * p) == 1);
    CHECK(lambda2(p * p * p) == 0);
  }
  const auto phi2 = standard_fn("phi2", 200);
  for (const std::uint64_t p : {2, 3, 5, 7, 11, 13}) CHECK(phi2(p) == static_cast<std::int64_t>(p) - 1);
  // phi2 is multiplicative.
  CHECK(phi2(6) == phi2(2) * phi2(3));
  CHECK(phi2(180) == phi2(4) * phi2(9) * phi2(5));
  CHECK_THROWS_AS(standard_fn("totient", 10), InputError);
  CHECK_THROWS_AS(standard_fn("one", 0), InputError);
}

TEST_CASE("convolution matches brute force and rejects mismatched limits") {
  std::mt19937_64 rng(11);
  const auto f = random_fn(300, rng);
  const auto g = random_fn(300, rng);
  const auto h = dirichlet_convolve(f, g);
  for (std::uint64_t n = 1; n <= 300; ++n) CHECK(h(n) == convolve_at(f, g, n));
  CHECK_THROWS_AS(dirichlet_convolve(f, random_fn(299, rng)), InputError);
}

TEST_CASE("convolution is commutative and associative") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    const auto f = random_fn(1000, rng);
    const auto g = random_fn(1000, rng);
    const auto h = random_fn(1000, rng);
    CHECK(dirichlet_convolve(f, g) == dirichlet_convolve(g, f));
    CHECK(dirichlet_convolve(dirichlet_convolve(f, g), h) == dirichlet_convolve(f, dirichlet_convolve(g, h)));
  }
}

TEST_CASE("inversion pairs give the unit") {
  const std::uint64_t limit = 5000;
  const auto e = unit_fn(limit);
  CHECK(dirichlet_convolve(standard_fn("mobius", limit), standard_fn("one", limit)) == e);
  CHECK(dirichlet_convolve(standard_fn("lambda2", limit), standard_fn("tau2", limit)) == e);
}

TEST_CASE("to_real and at") {
  const auto tau2 = standard_fn(StandardFn::tau2, 12);
  const auto real = to_real(tau2);
  CHECK(real(12) == 6.0);
  CHECK_THROWS_AS(tau2.at(0), InputError);
  CHECK_THROWS_AS(tau2.at(13), InputError);
  CHECK_THROWS_AS(IntArithFn(3, {1, 2}), InputError);
}

TEST_CASE("divisors and prime factors") {
  CHECK(divisors(1) == std::vector<std::uint64_t>{1});
  CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(360).size() == 24);
  CHECK(prime_factors(360) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(prime_factors(97) == std::vector<std::uint64_t>{97});
  CHECK(prime_factors(1).empty());
}

TEST_CASE("mertens_weighted_sum against a direct prime loop") {
  const auto fp = testfn::fejer_pair(1.0);
  for (const double log_c : {6.0, 10.0, 12.5}) {
    for (const int nu : {1, 2}) {
      const double limit = std::exp(log_c / nu);
      double oracle = 0.0;
      for (std::uint64_t p = 2; p <= limit; ++p) {
        if (!is_prime_trial(p)) continue;
        const double lp = std::log(static_cast<double>(p));
        oracle += fp.hat(nu * lp / log_c) * 2.0 * lp / (std::pow(static_cast<double>(p), nu / 2.0) * log_c);
      }
      CHECK(mertens_weighted_sum(fp, log_c, nu) == doctest::Approx(oracle).epsilon(1e-12));
    }
  }
}

TEST_CASE("mertens_weighted_sum edge cases") {
  const auto fp = testfn::fejer_pair(1.0);
  CHECK(mertens_weighted_sum(fp, 1.0, 2) == 0.0);  // exp(1/2) < 2
  CHECK_THROWS_AS(mertens_weighted_sum(fp, 0.0, 2), InputError);
  CHECK_THROWS_AS(mertens_weighted_sum(fp, 10.0, 3), InputError);
  CHECK_THROWS_AS(mertens_weighted_sum(fp, 40.0, 1, 1000), ResourceError);
}

TEST_CASE("second moment drifts toward phi(0)/2") {
  const auto fp = testfn::fejer_pair(1.0);
  const double d15 = std::abs(mertens_weighted_sum(fp, 15.0, 2) - 0.5);
  const double d20 = std::abs(mertens_weighted_sum(fp, 20.0, 2) - 0.5);
  const double d30 = std::abs(mertens_weighted_sum(fp, 30.0, 2) - 0.5);
  CHECK(d20 < d15);
  CHECK(d30 < d20);
  CHECK(d30 <= 0.1);
}

TEST_CASE("prime_divisor_log_sum") {
  CHECK(prime_divisor_log_sum(12, 1.0) == doctest::Approx(std::log(2.0) / 2 + std::log(3.0) / 3).epsilon(1e-15));
  CHECK(prime_divisor_log_sum(101, 0.5) == doctest::Approx(std::log(101.0) / std::sqrt(101.0)).epsilon(1e-15));
  CHECK(prime_divisor_log_sum(1, 0.5) == 0.0);
  CHECK_THROWS_AS(prime_divisor_log_sum(12, 0.0), InputError);
  CHECK_THROWS_AS(prime_divisor_log_sum(12, 1.5), InputError);
  CHECK_THROWS_AS(prime_divisor_log_sum(0, 0.5), InputError);
}

TEST_CASE("prime_divisor_log_sum on primorials stays under the sqrt(log q) loglog q shape") {
  // Largest ratio over k = 2..15, found by brute force over the same range.
  const double c = 1.4403564586873556;
  std::uint64_t q = 1;
  double worst = 0.0;
  const auto primes = sieve_primes(50).primes();
  for (int k = 1; k <= 15; ++k) {
    q *= primes[k - 1];
    if (k < 2) continue;
    const double lq = std::log(static_cast<double>(q));
    const double ratio = prime_divisor_log_sum(q, 0.5) / (std::sqrt(lq) * std::log(lq));
    worst = std::max(worst, ratio);
    CHECK(ratio <= c * (1 + 1e-12));
  }
  CHECK(worst == doctest::Approx(c).epsilon(1e-12));
}
