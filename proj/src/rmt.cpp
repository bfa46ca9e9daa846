#include "zerolab/rmt.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "zerolab/error.hpp"
#include "zerolab/format.hpp"
#include "zerolab/parallel.hpp"

namespace zerolab::rmt {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

cd complex_gaussian(Rng& rng, std::normal_distribution<double>& normal) {
  // E|z|^2 = 1
  return {normal(rng) * std::numbers::sqrt2 / 2.0, normal(rng) * std::numbers::sqrt2 / 2.0};
}

double to_branch(double angle) { return angle <= -kPi ? kPi : angle; }

template <class Matrix>
double unitarity_residual(const Matrix& q) {
  const auto n = q.cols();
  return (q.adjoint() * q - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
}

double symplectic_residual(const Eigen::MatrixXcd& q) {
  const auto n = q.rows() / 2;
  Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n) = Eigen::MatrixXcd::Identity(n, n);
  j.bottomLeftCorner(n, n) = -Eigen::MatrixXcd::Identity(n, n);
  return (q.transpose() * j * q - j).cwiseAbs().maxCoeff();
}

std::vector<double> angles_of(const Eigen::VectorXcd& eigenvalues) {
  std::vector<double> angles(eigenvalues.size());
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) angles[i] = to_branch(std::arg(eigenvalues[i]));
  return angles;
}

}  // namespace

std::string_view to_string(Group group) {
  switch (group) {
    case Group::U: return "U";
    case Group::SO_even: return "SO_even";
    case Group::SO_odd: return "SO_odd";
    case Group::USp: return "USp";
  }
  return "?";
}

Group parse_group(std::string_view name) {
  for (auto g : {Group::U, Group::SO_even, Group::SO_odd, Group::USp}) {
    if (to_string(g) == name) return g;
  }
  throw InputError("unknown group '" + std::string(name) + "' (expected U|SO_even|SO_odd|USp)");
}

int matrix_size(Group group, int dim_parameter) {
  switch (group) {
    case Group::U: return dim_parameter;
    case Group::SO_even: return 2 * dim_parameter;
    case Group::SO_odd: return 2 * dim_parameter + 1;
    case Group::USp: return 2 * dim_parameter;
  }
  return 0;
}

kernels::Symmetry symmetry_of(Group group) {
  switch (group) {
    case Group::U: return kernels::Symmetry::U;
    case Group::SO_even: return kernels::Symmetry::SOeven;
    case Group::SO_odd: return kernels::Symmetry::SOodd;
    case Group::USp: return kernels::Symmetry::Sp;
  }
  return kernels::Symmetry::U;
}

Eigen::MatrixXcd haar_unitary(int n, Rng& rng) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXcd z(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) z(i, j) = complex_gaussian(rng, normal);

  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  // Q R is unique once diag(R) > 0; rotating the phases there makes Q Haar.
  const Eigen::MatrixXcd& r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    const cd d = r(j, j);
    const double m = std::abs(d);
    if (m > 0.0) q.col(j) *= d / m;
  }
  return q;
}

Eigen::MatrixXd haar_special_orthogonal(int n, Rng& rng) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXd z(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) z(i, j) = normal(rng);

  Eigen::HouseholderQR<Eigen::MatrixXd> qr(z);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd& r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  }
  // q is Haar on O(n). On the det = -1 coset, right-multiplying by the fixed
  // reflection diag(-1, 1, ..., 1) is a measure-preserving bijection onto SO(n),
  // so the result is Haar on SO(n).
  if (q.determinant() < 0.0) q.col(0) = -q.col(0);
  return q;
}

Eigen::MatrixXcd haar_unitary_symplectic(int half, Rng& rng) {
  std::normal_distribution<double> normal;
  const int n = 2 * half;
  // Column j of a quaternionic Ginibre matrix is (a; -conj(b)); its quaternionic
  // partner (column half + j) is (b; conj(a)). Gram-Schmidt over the quaternions
  // keeps that pairing and yields Haar measure on USp(2 half).
  const auto partner = [half](const Eigen::VectorXcd& u) {
    Eigen::VectorXcd w(u.size());
    w.head(half) = -u.tail(half).conjugate();
    w.tail(half) = u.head(half).conjugate();
    return w;
  };

  Eigen::MatrixXcd q(n, n);
  for (int j = 0; j < half; ++j) {
    Eigen::VectorXcd v(n);
    for (int i = 0; i < half; ++i) {
      const cd a = complex_gaussian(rng, normal);
      const cd b = complex_gaussian(rng, normal);
      v(i) = a;
      v(half + i) = -std::conj(b);
    }
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < j; ++k) {
        v -= q.col(k) * q.col(k).dot(v);
        v -= q.col(half + k) * q.col(half + k).dot(v);
      }
    }
    v /= v.norm();
    q.col(j) = v;
    q.col(half + j) = partner(v);
  }
  return q;
}

EigenangleSample haar_sample(const HaarDrawConfig& config) {
  if (config.dim < 1) throw InputError("haar_sample: dimension parameter must be >= 1");
  Rng rng(config.seed);
  EigenangleSample sample;
  sample.group = config.group;
  sample.n = matrix_size(config.group, config.dim);

  switch (config.group) {
    case Group::U: {
      const Eigen::MatrixXcd q = haar_unitary(sample.n, rng);
      sample.unitarity_residual = unitarity_residual(q);
      if (sample.unitarity_residual <= kUnitarityTolerance) {
        sample.angles = angles_of(Eigen::ComplexEigenSolver<Eigen::MatrixXcd>(q, false).eigenvalues());
      }
      break;
    }
    case Group::SO_even:
    case Group::SO_odd: {
      const Eigen::MatrixXd q = haar_special_orthogonal(sample.n, rng);
      sample.unitarity_residual = unitarity_residual(q);
      if (sample.unitarity_residual <= kUnitarityTolerance) {
        sample.angles = angles_of(Eigen::EigenSolver<Eigen::MatrixXd>(q, false).eigenvalues());
      }
      break;
    }
    case Group::USp: {
      const Eigen::MatrixXcd q = haar_unitary_symplectic(config.dim, rng);
      sample.unitarity_residual = std::max(unitarity_residual(q), symplectic_residual(q));
      if (sample.unitarity_residual <= kUnitarityTolerance) {
        sample.angles = angles_of(Eigen::ComplexEigenSolver<Eigen::MatrixXcd>(q, false).eigenvalues());
      }
      break;
    }
  }

  if (sample.unitarity_residual > kUnitarityTolerance ||
      static_cast<int>(sample.angles.size()) != sample.n) {
    throw NumericError("haar_sample: " + std::string(to_string(config.group)) + "(" +
                       std::to_string(config.dim) + ") seed " + std::to_string(config.seed) +
                       " unitarity residual " + format_double(sample.unitarity_residual));
  }
  return sample;
}

std::vector<double> normalized_angles(const EigenangleSample& sample) {
  std::vector<double> out(sample.angles.size());
  const double scale = sample.n / (2.0 * kPi);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = scale * sample.angles[i];
  return out;
}

double one_level_density(const EigenangleSample& sample, const testfn::FourierPair& fp) {
  double total = 0.0;
  for (const double x : normalized_angles(sample)) total += fp(x);
  return total;
}

double pair_correlation(const EigenangleSample& sample, const testfn::FourierPair& fp) {
  const auto n = sample.angles.size();
  if (n < 2) throw InputError("pair_correlation: need at least two angles");
  const double scale = sample.n / (2.0 * kPi);
  double total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      const double d = std::remainder(sample.angles[j] - sample.angles[k], 2.0 * kPi);
      total += fp(scale * d);
    }
  }
  // phi is even: each unordered pair counts twice.
  return 2.0 * total / static_cast<double>(sample.n);
}

std::string_view to_string(Statistic stat) {
  return stat == Statistic::one_level ? "one_level" : "pair_corr";
}

Statistic parse_statistic(std::string_view name) {
  if (name == "one_level") return Statistic::one_level;
  if (name == "pair_corr") return Statistic::pair_corr;
  throw InputError("unknown statistic '" + std::string(name) + "' (expected one_level|pair_corr)");
}

std::uint64_t draw_seed(std::uint64_t seed, std::uint64_t index) {
  auto mix = [](std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(seed + 0x9e3779b97f4a7c15ULL) ^ (index * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL));
}

MonteCarloResult monte_carlo(const HaarDrawConfig& config_template, std::size_t draws, Statistic stat,
                             const testfn::FourierPair& fp, unsigned workers) {
  if (draws < 2) throw InputError("monte_carlo: need at least two draws");
  std::vector<double> values(draws);
  parallel_for(
      draws,
      [&](std::size_t i) {
        HaarDrawConfig config = config_template;
        config.seed = draw_seed(config_template.seed, i);
        const auto sample = haar_sample(config);
        values[i] = stat == Statistic::one_level ? one_level_density(sample, fp) : pair_correlation(sample, fp);
      },
      workers);

  double sum = 0.0;
  for (const double v : values) sum += v;
  const double mean = sum / static_cast<double>(draws);
  double ss = 0.0;
  for (const double v : values) ss += (v - mean) * (v - mean);
  const double variance = ss / static_cast<double>(draws - 1);
  return {mean, std::sqrt(variance / static_cast<double>(draws)), draws};
}

double limit_target(Group group, Statistic stat, const testfn::FourierPair& fp) {
  if (stat == Statistic::pair_corr) return kernels::gue_functional(fp);
  return kernels::pairing(kernels::kernel(symmetry_of(group)), fp);
}

}  // namespace zerolab::rmt
