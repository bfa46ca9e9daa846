#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace zerolab::testfn {

// An even test function phi together with its closed-form Fourier transform
//   phi_hat(y) = \int phi(x) e^{-2 pi i x y} dx,
// which vanishes for |y| >= support_radius.
struct FourierPair {
  std::function<double(double)> eval;
  std::function<double(double)> eval_hat;
  double support_radius = 0.0;
  // sup |phi_hat|, used by majorants that must hold for every y.
  double hat_sup = 0.0;
  std::string family_tag;

  double operator()(double x) const { return eval(x); }
  double hat(double y) const { return eval_hat(y); }
};

// phi_hat(y) = max(0, 1 - |y|/T), phi(x) = T (sin(pi T x)/(pi T x))^2.
FourierPair fejer_pair(double support);

FourierPair operator+(const FourierPair& lhs, const FourierPair& rhs);
FourierPair scaled(const FourierPair& fp, double factor);

struct PairReport {
  bool pass = false;
  double evenness_dev = 0.0;      // max |phi(x)-phi(-x)|, |phi_hat(y)-phi_hat(-y)|
  double support_dev = 0.0;       // max |phi_hat(y)| for |y| >= T
  double integral_dev = 0.0;      // |\int phi - phi_hat(0)|
  double hat_integral_dev = 0.0;  // |\int phi_hat - phi(0)|
  double inversion_dev = 0.0;     // max_x |phi(x) - \int phi_hat(y) cos(2 pi x y) dy|
  double max_deviation = 0.0;
  std::vector<std::string> failures;
};

// Numerically checks evenness, compact support and transform consistency.
PairReport verify_pair(const FourierPair& fp, double tol);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// A positive real given either as a decimal ("0.8") or an exact ratio ("2/3").
struct RealArg {
  double value = 0.0;
  std::optional<Rational> exact;
};

RealArg parse_real_arg(std::string_view text);

// "fejer:T" with T decimal or rational.
FourierPair parse_test_fn(std::string_view text);

}  // namespace zerolab::testfn
