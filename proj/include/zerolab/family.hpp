#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "zerolab/arith.hpp"
#include "zerolab/lfun.hpp"
#include "zerolab/testfn.hpp"

namespace zerolab::family {

// A finite synthetic family; every member shares one prime horizon.
class FamilyModel {
 public:
  FamilyModel(std::string label, std::vector<lfun::AutoRep> members);

  const std::string& label() const noexcept { return label_; }
  const std::vector<lfun::AutoRep>& members() const noexcept { return members_; }
  std::uint64_t horizon() const noexcept { return members_.front().horizon(); }

 private:
  std::string label_;
  std::vector<lfun::AutoRep> members_;
};

// One coefficients-file path per line; relative paths resolve against the
// manifest's directory.
FamilyModel load_family_manifest(const std::filesystem::path& manifest);

// A function on the divisor lattice of q.
template <class T>
using DivisorMap = std::map<std::uint64_t, T>;

// Lambda~(d) = sum_{e | d} lambda_2(d / e) Lambda(e): newform sums from oldform sums.
template <class T>
DivisorMap<T> sieve_new_from_old(std::uint64_t q, const DivisorMap<T>& old_sums);

// Lambda(d) = sum_{e | d} tau_2(d / e) Lambda~(e): the inverse direction.
template <class T>
DivisorMap<T> sieve_old_from_new(std::uint64_t q, const DivisorMap<T>& new_sums);

template <class T>
struct SievedSums {
  std::uint64_t modulus = 1;
  DivisorMap<T> old_sums;
  DivisorMap<T> new_sums;
};

template <class T>
SievedSums<T> make_sieved_sums(std::uint64_t q, DivisorMap<T> old_sums) {
  auto new_sums = sieve_new_from_old(q, old_sums);
  return {q, std::move(old_sums), std::move(new_sums)};
}

struct SieveCheckSummary {
  std::uint64_t q_max = 0;
  unsigned vectors_per_modulus = 0;
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  bool all_exact() const noexcept { return mismatches == 0; }
};

// For every q <= q_max and `vectors` random integer old-sum vectors, checks
// lambda_2 * (tau_2 * Lambda) = Lambda and tau_2 * (lambda_2 * Lambda) = Lambda exactly.
SieveCheckSummary sieve_check(std::uint64_t q_max, unsigned vectors, std::uint64_t seed);

struct AveragedDensity {
  double mean = 0.0;
  std::vector<double> per_rep;
  double predicted = 0.0;  // phi_hat(0) + phi(0)/2, the orthogonal value
  double deviation = 0.0;  // mean - predicted
};

// Mean explicit-formula density over the family. The orthogonal prediction is
// reported as a reference line only.
AveragedDensity averaged_density(const FamilyModel& family, const testfn::FourierPair& fp, unsigned nu_max);

struct SecondOrderShift {
  double sum = 0.0;
  double target = 0.0;  // phi(0)/2
  double deviation = 0.0;
};

SecondOrderShift second_order_shift(const testfn::FourierPair& fp, double log_c,
                                    std::uint64_t prime_budget = arith::kDefaultPrimeBudget);

struct NonvanishingReport {
  double support = 0.0;
  double multiplicity_bound = 0.0;  // 1/2 + 1/T, bounds sum_m m p_m
  double p0_lower = 0.0;            // 1/2 - 1/T, lower bound on the non-vanishing proportion
  bool nontrivial = false;          // p0_lower > 0
};

NonvanishingReport nonvanishing_bounds(double support);
// Exact path: 1/T is formed as den/num, so T = 2/3 yields a bound of exactly 2.
NonvanishingReport nonvanishing_bounds(testfn::Rational support);

enum class SatakeMeasure { uniform, sato_tate };

SatakeMeasure parse_satake_measure(std::string_view name);

struct FamilyConfig {
  std::size_t size = 1;
  double conductor = 1e6;
  std::uint64_t horizon = 1000;
  std::vector<std::uint64_t> ramified;  // ramified primes shared by all members
  SatakeMeasure measure = SatakeMeasure::sato_tate;
  std::uint64_t seed = 0;
};

// Members with independent Satake angles drawn from `measure`: uniform on
// [0, pi] or the Sato-Tate density (2/pi) sin^2(theta). Root numbers alternate.
FamilyModel sample_family(const FamilyConfig& config);

}  // namespace zerolab::family
