#include "zerolab/family.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>

#include "zerolab/error.hpp"
#include "zerolab/lfun_io.hpp"
#include "zerolab/parallel.hpp"
#include "zerolab/rmt.hpp"

namespace zerolab::family {

namespace {

// Prime-power values of the multiplicative functions lambda_2 = mu * mu, whose
// Bell series is (1 - x)^2, and tau_2 = 1 * 1, whose Bell series is (1 - x)^{-2}.
std::int64_t lambda2_prime_power(unsigned k) {
  switch (k) {
    case 0: return 1;
    case 1: return -2;
    case 2: return 1;
    default: return 0;
  }
}

std::int64_t tau2_prime_power(unsigned k) { return static_cast<std::int64_t>(k) + 1; }

template <class PrimePower>
std::int64_t multiplicative(std::uint64_t n, PrimePower at_prime_power) {
  std::int64_t value = 1;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    unsigned k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    if (k > 0) value *= at_prime_power(k);
    if (value == 0) return 0;
  }
  if (n > 1) value *= at_prime_power(1);
  return value;
}

template <class T>
void require_divisor_lattice(std::uint64_t q, const DivisorMap<T>& values, const std::vector<std::uint64_t>& divs) {
  for (const auto d : divs) {
    if (!values.contains(d)) throw InputError("sieve: missing value at divisor " + std::to_string(d) + " of " + std::to_string(q));
  }
  if (values.size() != divs.size()) {
    throw InputError("sieve: values given at non-divisors of " + std::to_string(q));
  }
}

template <class T, class PrimePower>
DivisorMap<T> convolve_on_divisors(std::uint64_t q, const DivisorMap<T>& values, PrimePower at_prime_power) {
  if (q == 0) throw InputError("sieve: modulus must be positive");
  const auto divs = arith::divisors(q);
  require_divisor_lattice(q, values, divs);
  DivisorMap<T> out;
  for (const auto d : divs) {
    T total{};
    for (const auto e : divs) {
      if (e > d) break;
      if (d % e != 0) continue;
      total += static_cast<T>(multiplicative(d / e, at_prime_power)) * values.at(e);
    }
    out.emplace(d, total);
  }
  return out;
}

}  // namespace

FamilyModel::FamilyModel(std::string label, std::vector<lfun::AutoRep> members)
    : label_(std::move(label)), members_(std::move(members)) {
  if (members_.empty()) throw InputError("FamilyModel: a family needs at least one member");
  const auto h = members_.front().horizon();
  for (const auto& m : members_) {
    if (m.horizon() != h) throw InputError("FamilyModel: members must share one prime horizon");
  }
}

FamilyModel load_family_manifest(const std::filesystem::path& manifest) {
  std::ifstream in(manifest);
  if (!in) throw InputError("cannot open '" + manifest.string() + "'");
  const auto base = manifest.parent_path();
  std::vector<lfun::AutoRep> members;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    std::filesystem::path path = line.substr(first, last - first + 1);
    if (path.is_relative()) path = base / path;
    if (!std::filesystem::exists(path)) {
      throw ParseError(manifest.string(), line_no, "no such coefficients file '" + path.string() + "'");
    }
    members.push_back(lfun::load_coefficients(path));
  }
  return FamilyModel(manifest.stem().string(), std::move(members));
}

template <class T>
DivisorMap<T> sieve_new_from_old(std::uint64_t q, const DivisorMap<T>& old_sums) {
  return convolve_on_divisors(q, old_sums, lambda2_prime_power);
}

template <class T>
DivisorMap<T> sieve_old_from_new(std::uint64_t q, const DivisorMap<T>& new_sums) {
  return convolve_on_divisors(q, new_sums, tau2_prime_power);
}

template DivisorMap<std::int64_t> sieve_new_from_old(std::uint64_t, const DivisorMap<std::int64_t>&);
template DivisorMap<double> sieve_new_from_old(std::uint64_t, const DivisorMap<double>&);
template DivisorMap<std::int64_t> sieve_old_from_new(std::uint64_t, const DivisorMap<std::int64_t>&);
template DivisorMap<double> sieve_old_from_new(std::uint64_t, const DivisorMap<double>&);

SieveCheckSummary sieve_check(std::uint64_t q_max, unsigned vectors, std::uint64_t seed) {
  SieveCheckSummary summary{q_max, vectors, 0, 0};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> value(-1000, 1000);
  for (std::uint64_t q = 1; q <= q_max; ++q) {
    const auto divs = arith::divisors(q);
    for (unsigned v = 0; v < vectors; ++v) {
      DivisorMap<std::int64_t> old_sums;
      for (const auto d : divs) old_sums.emplace(d, value(rng));
      const bool forward = sieve_new_from_old(q, sieve_old_from_new(q, old_sums)) == old_sums;
      const bool backward = sieve_old_from_new(q, sieve_new_from_old(q, old_sums)) == old_sums;
      ++summary.checked;
      if (!forward || !backward) ++summary.mismatches;
    }
  }
  return summary;
}

AveragedDensity averaged_density(const FamilyModel& family, const testfn::FourierPair& fp, unsigned nu_max) {
  AveragedDensity out;
  const auto& members = family.members();
  out.per_rep.assign(members.size(), 0.0);
  parallel_for(members.size(), [&](std::size_t i) {
    out.per_rep[i] = lfun::explicit_formula_density(members[i], fp, nu_max).value;
  });
  double sum = 0.0;
  for (const double v : out.per_rep) sum += v;
  out.mean = sum / static_cast<double>(members.size());
  out.predicted = fp.hat(0.0) + 0.5 * fp(0.0);
  out.deviation = out.mean - out.predicted;
  return out;
}

SecondOrderShift second_order_shift(const testfn::FourierPair& fp, double log_c, std::uint64_t prime_budget) {
  SecondOrderShift out;
  out.sum = arith::mertens_weighted_sum(fp, log_c, 2, prime_budget);
  out.target = 0.5 * fp(0.0);
  out.deviation = out.sum - out.target;
  return out;
}

NonvanishingReport nonvanishing_bounds(double support) {
  if (!(support > 0.0) || !std::isfinite(support)) throw InputError("nonvanishing_bounds: support must be positive");
  const double inv = 1.0 / support;
  return {support, 0.5 + inv, 0.5 - inv, 0.5 - inv > 0.0};
}

NonvanishingReport nonvanishing_bounds(testfn::Rational support) {
  if (support.den == 0 || support.num == 0 || (support.num > 0) != (support.den > 0)) {
    throw InputError("nonvanishing_bounds: support must be positive");
  }
  const double inv = static_cast<double>(support.den) / static_cast<double>(support.num);
  return {support.value(), 0.5 + inv, 0.5 - inv, 0.5 - inv > 0.0};
}

SatakeMeasure parse_satake_measure(std::string_view name) {
  if (name == "uniform") return SatakeMeasure::uniform;
  if (name == "sato_tate") return SatakeMeasure::sato_tate;
  throw InputError("unknown Satake measure '" + std::string(name) + "' (expected uniform|sato_tate)");
}

FamilyModel sample_family(const FamilyConfig& config) {
  if (config.size == 0) throw InputError("sample_family: size must be positive");
  const auto primes = arith::sieve_primes(config.horizon);
  std::uint64_t q = 1;
  for (const auto p : config.ramified) {
    if (arith::prime_factors(p) != std::vector<std::uint64_t>{p}) {
      throw InputError("sample_family: ramified entry " + std::to_string(p) + " is not prime");
    }
    q *= p;
  }

  std::vector<lfun::AutoRep> members;
  members.reserve(config.size);
  for (std::size_t i = 0; i < config.size; ++i) {
    std::mt19937_64 rng(rmt::draw_seed(config.seed, i));
    std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<lfun::SatakeLocal> locals;
    locals.reserve(primes.size());
    for (const auto p : primes) {
      if (q % p == 0) {
        locals.push_back(lfun::SatakeLocal::ramified_at(p));
        continue;
      }
      double theta = angle(rng);
      if (config.measure == SatakeMeasure::sato_tate) {
        while (unit(rng) > std::sin(theta) * std::sin(theta)) theta = angle(rng);
      }
      locals.push_back(lfun::SatakeLocal::unramified(p, theta));
    }
    members.emplace_back(config.conductor, q, config.horizon, std::move(locals), i % 2 == 0 ? 1 : -1);
  }
  return FamilyModel(std::string(config.measure == SatakeMeasure::uniform ? "uniform" : "sato_tate"),
                     std::move(members));
}

}  // namespace zerolab::family
