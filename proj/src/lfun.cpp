#include "zerolab/lfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "zerolab/arith.hpp"
#include "zerolab/error.hpp"
#include "zerolab/format.hpp"

namespace zerolab::lfun {

namespace {

void require_unramified(const SatakeLocal& local, const char* op) {
  if (local.ramified) {
    throw InputError(std::string(op) + ": prime " + std::to_string(local.p) + " is ramified");
  }
}

// Blomer-Brumley exponent: |alpha^nu + beta^nu| << p^{7 nu / 64}.
constexpr double kRamanujanExponent = 7.0 / 64.0;

// Rosser-Schoenfeld: theta(x) = sum_{p <= x} log p < 1.01624 x for all x > 0.
constexpr double kChebyshevThetaConstant = 1.01624;

// Primes below this are summed exactly in tail_estimate; beyond it the
// Chebyshev bound takes over.
constexpr std::uint64_t kTailExactLimit = std::uint64_t{1} << 20;

// floor(c^e), nudged up by a few ulps so that exact powers such as 1000^1 are not
// lost to rounding.
double floor_power(double c, double e) { return std::floor(std::pow(c, e) * (1.0 + 1e-12)); }

}  // namespace

SatakeLocal SatakeLocal::unramified(std::uint64_t p, double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw InputError("Satake angle must lie in [0, pi], got " + format_double(theta));
  }
  return {p, false, theta};
}

SatakeLocal SatakeLocal::ramified_at(std::uint64_t p) { return {p, true, 0.0}; }

std::complex<double> SatakeLocal::alpha() const { return std::polar(1.0, theta); }
std::complex<double> SatakeLocal::beta() const { return std::polar(1.0, -theta); }

double hecke_eigenvalue(const SatakeLocal& local, unsigned nu) {
  if (nu == 0) return 1.0;
  if (local.ramified) return 0.0;
  const double first = 2.0 * std::cos(local.theta);
  double prev = 1.0;
  double cur = first;
  for (unsigned k = 1; k < nu; ++k) {
    const double next = first * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double dirichlet_coefficient(const SatakeLocal& local, unsigned n) {
  require_unramified(local, "dirichlet_coefficient");
  std::complex<double> total = 0.0;
  for (unsigned i = 0; i <= n; ++i) {
    const int exponent = static_cast<int>(i) - static_cast<int>(n - i);
    total += std::polar(1.0, exponent * local.theta);
  }
  return total.real();
}

double power_sum(const SatakeLocal& local, unsigned nu) {
  require_unramified(local, "power_sum");
  return 2.0 * std::cos(nu * local.theta);
}

std::complex<double> local_L_factor(const SatakeLocal& local, std::complex<double> s) {
  require_unramified(local, "local_L_factor");
  if (!(s.real() > 0.0)) throw InputError("local_L_factor: need Re(s) > 0");
  const std::complex<double> x = std::exp(-s * std::log(static_cast<double>(local.p)));
  const std::complex<double> f1 = 1.0 - local.alpha() * x;
  const std::complex<double> f2 = 1.0 - local.beta() * x;
  if (std::abs(f1) < 1e-14 || std::abs(f2) < 1e-14) {
    throw NumericError("local_L_factor: pole at p = " + std::to_string(local.p));
  }
  return 1.0 / (f1 * f2);
}

std::uint64_t multiplicity(std::uint64_t c_arith, std::uint64_t d) {
  if (c_arith == 0 || d == 0) throw InputError("multiplicity: arguments must be positive");
  if (d % c_arith != 0) return 0;
  return arith::divisors(d / c_arith).size();
}

AutoRep::AutoRep(double conductor, std::uint64_t arithmetic_conductor, std::uint64_t horizon,
                 std::vector<SatakeLocal> locals, int root_number)
    : conductor_(conductor),
      arithmetic_conductor_(arithmetic_conductor),
      horizon_(horizon),
      locals_(std::move(locals)),
      root_number_(root_number) {
  if (!(conductor_ >= 1.0) || !std::isfinite(conductor_)) throw InputError("AutoRep: conductor must be >= 1");
  if (arithmetic_conductor_ == 0) throw InputError("AutoRep: arithmetic conductor must be positive");
  if (root_number_ != 1 && root_number_ != -1) throw InputError("AutoRep: root number must be +1 or -1");

  const auto primes = arith::sieve_primes(horizon_);
  if (locals_.size() != primes.size()) {
    throw InputError("AutoRep: expected Satake data for all " + std::to_string(primes.size()) +
                     " primes up to " + std::to_string(horizon_) + ", got " +
                     std::to_string(locals_.size()));
  }
  for (std::size_t i = 0; i < locals_.size(); ++i) {
    const auto& local = locals_[i];
    if (local.p != primes.primes()[i]) {
      throw InputError("AutoRep: Satake data missing or out of order at prime " +
                       std::to_string(primes.primes()[i]));
    }
    if (local.ramified != (arithmetic_conductor_ % local.p == 0)) {
      throw InputError("AutoRep: prime " + std::to_string(local.p) +
                       (local.ramified ? " is ramified but does not divide " : " divides but is not ramified for ") +
                       "the arithmetic conductor " + std::to_string(arithmetic_conductor_));
    }
    if (!local.ramified && !(local.theta >= 0.0 && local.theta <= std::numbers::pi)) {
      throw InputError("AutoRep: Satake angle at " + std::to_string(local.p) + " outside [0, pi]");
    }
  }
}

double AutoRep::log_conductor() const { return std::log(conductor_); }

std::uint64_t required_horizon(double conductor, double support_radius) {
  return static_cast<std::uint64_t>(floor_power(conductor, support_radius));
}

ExplicitFormula explicit_formula_density(const AutoRep& rep, const testfn::FourierPair& fp,
                                         unsigned nu_max) {
  if (nu_max < 2) throw InputError("explicit_formula_density: nu_max must be >= 2");
  const double log_c = rep.log_conductor();
  if (!(log_c > 0.0)) throw InputError("explicit_formula_density: conductor must exceed 1");
  const std::uint64_t needed = required_horizon(rep.conductor(), fp.support_radius);
  if (rep.horizon() < needed) {
    throw InputError("explicit_formula_density: prime horizon " + std::to_string(rep.horizon()) +
                     " is below the required " + std::to_string(needed));
  }

  ExplicitFormula out;
  out.per_nu.assign(nu_max, 0.0);
  out.value = fp.hat(0.0);
  for (unsigned nu = 1; nu <= nu_max; ++nu) {
    const double cutoff = floor_power(rep.conductor(), fp.support_radius / nu);
    double sum = 0.0;
    for (const auto& local : rep.locals()) {
      const double p = static_cast<double>(local.p);
      if (p > cutoff) break;
      if (local.ramified) continue;
      const double lp = std::log(p);
      sum += power_sum(local, nu) * fp.hat(nu * lp / log_c) * lp / std::pow(p, nu / 2.0);
    }
    out.per_nu[nu - 1] = 2.0 * sum / log_c;
    out.value -= out.per_nu[nu - 1];
  }
  out.tail_bound = tail_estimate(rep, fp, nu_max + 1);
  return out;
}

double tail_estimate(const AutoRep& rep, const testfn::FourierPair& fp, unsigned from_nu) {
  if (from_nu < 3) throw InputError("tail_estimate: the majorant converges only from nu = 3");
  const double log_c = rep.log_conductor();
  if (!(log_c > 0.0)) throw InputError("tail_estimate: conductor must exceed 1");

  static const arith::PrimeTable primes = arith::sieve_primes(kTailExactLimit);
  const double sigma = 0.5 - kRamanujanExponent;
  const double k = static_cast<double>(from_nu);

  // sum over nu >= k of r^nu is r^k / (1 - r), r = p^{-sigma}.
  double exact = 0.0;
  for (const std::uint64_t prime : primes) {
    const double p = static_cast<double>(prime);
    const double r = std::pow(p, -sigma);
    exact += 2.0 * std::log(p) * std::pow(r, k) / (1.0 - r);
  }
  // p > X: 2 r^k / (1 - r) <= 2 p^{-s} / (1 - X^{-sigma}) with s = k sigma > 1, and
  // partial summation against theta(t) < A t gives sum_{p > X} log p / p^s <= A s X^{1-s} / (s - 1).
  const double x = static_cast<double>(kTailExactLimit);
  const double s = k * sigma;
  const double beyond = 2.0 / (1.0 - std::pow(x, -sigma)) * kChebyshevThetaConstant * s *
                        std::pow(x, 1.0 - s) / (s - 1.0);

  return 2.0 / log_c * fp.hat_sup * (exact + beyond);
}

double density_from_zeros(const ZerosRecord& zeros, const testfn::FourierPair& fp) {
  if (!(zeros.conductor > 1.0)) throw InputError("density_from_zeros: conductor must exceed 1");
  const double scale = std::log(zeros.conductor) / (2.0 * std::numbers::pi);
  double total = 0.0;
  for (const double gamma : zeros.ordinates) total += fp(scale * gamma);
  return total;
}

}  // namespace zerolab::lfun
