#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "zerolab/testfn.hpp"

namespace zerolab::lfun {

// Local data of a degree-2 L-function at a prime p. Unramified primes carry a
// tempered Satake angle theta in [0, pi], so alpha = e^{i theta}, beta = 1/alpha.
struct SatakeLocal {
  std::uint64_t p = 2;
  bool ramified = false;
  double theta = 0.0;

  static SatakeLocal unramified(std::uint64_t p, double theta);
  static SatakeLocal ramified_at(std::uint64_t p);

  std::complex<double> alpha() const;
  std::complex<double> beta() const;

  bool operator==(const SatakeLocal&) const = default;
};

// lambda(p^0) = 1, lambda(p) = 2 cos theta,
// lambda(p^{nu+1}) = lambda(p) lambda(p^nu) - lambda(p^{nu-1}).
// Ramified primes: 1 for nu = 0, else 0.
double hecke_eigenvalue(const SatakeLocal& local, unsigned nu);

// a(p^n) = sum_{i+j=n} alpha^{i-j}, summed directly. Unramified only.
double dirichlet_coefficient(const SatakeLocal& local, unsigned n);

// alpha^nu + beta^nu. Unramified only.
double power_sum(const SatakeLocal& local, unsigned nu);

// (1 - alpha p^{-s})^{-1} (1 - beta p^{-s})^{-1}. Throws NumericError at a pole.
std::complex<double> local_L_factor(const SatakeLocal& local, std::complex<double> s);

// Oldform multiplicity of a newform of arithmetic conductor c_arith at level d:
// tau_2(d / c_arith) if c_arith | d, else 0.
std::uint64_t multiplicity(std::uint64_t c_arith, std::uint64_t d);

// Synthetic automorphic representation: conductor, root number and Satake data
// for every prime up to `horizon`.
class AutoRep {
 public:
  // Validates: conductor >= 1, root_number = +-1, locals sorted and covering
  // every prime <= horizon, ramified exactly at the prime divisors of
  // arithmetic_conductor.
  AutoRep(double conductor, std::uint64_t arithmetic_conductor, std::uint64_t horizon,
          std::vector<SatakeLocal> locals, int root_number);

  double conductor() const noexcept { return conductor_; }
  double log_conductor() const;
  std::uint64_t arithmetic_conductor() const noexcept { return arithmetic_conductor_; }
  std::uint64_t horizon() const noexcept { return horizon_; }
  const std::vector<SatakeLocal>& locals() const noexcept { return locals_; }
  int root_number() const noexcept { return root_number_; }

  bool operator==(const AutoRep&) const = default;

 private:
  double conductor_;
  std::uint64_t arithmetic_conductor_;
  std::uint64_t horizon_;
  std::vector<SatakeLocal> locals_;
  int root_number_;
};

// floor(c^T): the largest prime the explicit formula reaches for support T.
std::uint64_t required_horizon(double conductor, double support_radius);

struct ExplicitFormula {
  double value = 0.0;          // phi_hat(0) - sum_{nu <= nu_max} P^(nu)
  std::vector<double> per_nu;  // per_nu[k] = P^(k+1)
  double tail_bound = 0.0;     // majorant for |sum_{nu > nu_max} P^(nu)|
};

// One-level density through the explicit formula, truncated at nu_max >= 2:
//   P^(nu) = (2 / log c) sum_{p <= c^{T/nu}} (alpha^nu + beta^nu)(p)
//            * phi_hat(nu log p / log c) * log p / p^{nu/2}.
// Ramified primes contribute nothing.
ExplicitFormula explicit_formula_density(const AutoRep& rep, const testfn::FourierPair& fp,
                                         unsigned nu_max);

// Majorant of |sum_{nu >= from_nu} P^(nu)| (from_nu >= 3) that only assumes
// |alpha^nu + beta^nu| <= 2 p^{7 nu / 64}:
//   (2 / log c) sup|phi_hat| sum_p sum_{nu >= from_nu} 2 log p / p^{nu (1/2 - 7/64)}.
double tail_estimate(const AutoRep& rep, const testfn::FourierPair& fp, unsigned from_nu = 3);

// Real zero ordinates gamma of L(1/2 + i gamma) together with the conductor.
struct ZerosRecord {
  double conductor = 1.0;
  std::vector<double> ordinates;

  bool operator==(const ZerosRecord&) const = default;
};

// sum_j phi(gamma_j log c / 2 pi).
double density_from_zeros(const ZerosRecord& zeros, const testfn::FourierPair& fp);

}  // namespace zerolab::lfun
