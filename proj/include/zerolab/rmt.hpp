#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "zerolab/kernels.hpp"
#include "zerolab/testfn.hpp"

namespace zerolab::rmt {

// Classical compact groups. The matrix size is N for U, 2N for SO_even and USp,
// 2N+1 for SO_odd.
enum class Group { U, SO_even, SO_odd, USp };

std::string_view to_string(Group group);
Group parse_group(std::string_view name);
int matrix_size(Group group, int dim_parameter);

// Symmetry type whose kernel governs the one-level density of the group.
kernels::Symmetry symmetry_of(Group group);

struct HaarDrawConfig {
  Group group = Group::U;
  int dim = 1;
  std::uint64_t seed = 0;
};

// Largest tolerated deviation from unitarity (and, for USp, from the symplectic
// relation) before eigenangles are extracted.
inline constexpr double kUnitarityTolerance = 1e-8;

struct EigenangleSample {
  Group group = Group::U;
  int n = 0;
  std::vector<double> angles;  // in (-pi, pi]
  double unitarity_residual = 0.0;
};

using Rng = std::mt19937_64;

// Haar-distributed matrices. Exposed for testing the samplers directly.
Eigen::MatrixXcd haar_unitary(int n, Rng& rng);
Eigen::MatrixXd haar_special_orthogonal(int n, Rng& rng);
Eigen::MatrixXcd haar_unitary_symplectic(int half, Rng& rng);

// Eigenangles of one Haar draw; throws NumericError if the sampled matrix
// misses the unitarity tolerance.
EigenangleSample haar_sample(const HaarDrawConfig& config);

// theta * n / (2 pi) for every angle.
std::vector<double> normalized_angles(const EigenangleSample& sample);

// sum_j phi(n theta_j / 2 pi) over all n angles.
double one_level_density(const EigenangleSample& sample, const testfn::FourierPair& fp);

// (1/n) sum_{j != k} phi(n (theta_j - theta_k) / 2 pi), with angle differences
// taken on the circle, i.e. reduced to (-pi, pi].
double pair_correlation(const EigenangleSample& sample, const testfn::FourierPair& fp);

enum class Statistic { one_level, pair_corr };

std::string_view to_string(Statistic stat);
Statistic parse_statistic(std::string_view name);

struct MonteCarloResult {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t draws = 0;
};

// Per-draw seed: a splitmix64 hash of (seed, index).
std::uint64_t draw_seed(std::uint64_t seed, std::uint64_t index);

// Ensemble average over `draws` independent Haar draws. The reduction runs in
// draw order, so the result is bit-identical for any worker count.
MonteCarloResult monte_carlo(const HaarDrawConfig& config_template, std::size_t draws, Statistic stat,
                             const testfn::FourierPair& fp, unsigned workers = 0);

// Limiting value the ensemble mean should approach: the kernel pairing of the
// group's symmetry type, or the GUE functional for pair correlation.
double limit_target(Group group, Statistic stat, const testfn::FourierPair& fp);

}  // namespace zerolab::rmt
