#include "zerolab/testfn.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <numbers>

#include "zerolab/error.hpp"
#include "zerolab/format.hpp"
#include "zerolab/quadrature.hpp"

namespace zerolab::testfn {

namespace {

// (sin u / u)^2 with the removable singularity filled in.
double sinc_squared(double u) {
  if (std::abs(u) < 1e-4) {
    const double u2 = u * u;
    return 1.0 - u2 / 3.0 + 2.0 * u2 * u2 / 45.0;
  }
  const double s = std::sin(u) / u;
  return s * s;
}

}  // namespace

FourierPair fejer_pair(double support) {
  if (!(support > 0.0) || !std::isfinite(support)) {
    throw InputError("fejer_pair: support radius must be a positive finite number");
  }
  FourierPair fp;
  fp.eval = [support](double x) { return support * sinc_squared(std::numbers::pi * support * x); };
  fp.eval_hat = [support](double y) { return std::max(0.0, 1.0 - std::abs(y) / support); };
  fp.support_radius = support;
  fp.hat_sup = 1.0;
  fp.family_tag = "fejer:" + format_double(support);
  return fp;
}

FourierPair operator+(const FourierPair& lhs, const FourierPair& rhs) {
  FourierPair fp;
  fp.eval = [f = lhs.eval, g = rhs.eval](double x) { return f(x) + g(x); };
  fp.eval_hat = [f = lhs.eval_hat, g = rhs.eval_hat](double y) { return f(y) + g(y); };
  fp.support_radius = std::max(lhs.support_radius, rhs.support_radius);
  fp.hat_sup = lhs.hat_sup + rhs.hat_sup;
  fp.family_tag = lhs.family_tag + "+" + rhs.family_tag;
  return fp;
}

FourierPair scaled(const FourierPair& fp, double factor) {
  FourierPair out;
  out.eval = [f = fp.eval, factor](double x) { return factor * f(x); };
  out.eval_hat = [f = fp.eval_hat, factor](double y) { return factor * f(y); };
  out.support_radius = fp.support_radius;
  out.hat_sup = std::abs(factor) * fp.hat_sup;
  out.family_tag = format_double(factor) + "*" + fp.family_tag;
  return out;
}

PairReport verify_pair(const FourierPair& fp, double tol) {
  PairReport report;
  const double T = fp.support_radius;

  for (int i = 0; i <= 200; ++i) {
    const double x = 0.137 * i;
    report.evenness_dev = std::max(report.evenness_dev, std::abs(fp(x) - fp(-x)));
    const double y = 1.5 * T * i / 200.0;
    report.evenness_dev = std::max(report.evenness_dev, std::abs(fp.hat(y) - fp.hat(-y)));
  }
  for (int i = 0; i <= 100; ++i) {
    const double y = T * (1.0 + 2.0 * i / 100.0);
    report.support_dev = std::max({report.support_dev, std::abs(fp.hat(y)), std::abs(fp.hat(-y))});
  }

  report.integral_dev = std::abs(quad::integrate_even_line(fp.eval) - fp.hat(0.0));

  const std::array<double, 3> pieces{-T, 0.0, T};
  report.hat_integral_dev = std::abs(quad::integrate_pieces(fp.eval_hat, pieces) - fp(0.0));

  for (int i = 0; i <= 40; ++i) {
    const double x = 0.125 * i;
    const auto integrand = [&](double y) { return fp.hat(y) * std::cos(2.0 * std::numbers::pi * x * y); };
    const double inverse = quad::integrate_pieces(integrand, pieces);
    report.inversion_dev = std::max(report.inversion_dev, std::abs(inverse - fp(x)));
  }

  const std::array<std::pair<const char*, double>, 5> checks{{
      {"evenness", report.evenness_dev},
      {"support", report.support_dev},
      {"integral of phi vs phi_hat(0)", report.integral_dev},
      {"integral of phi_hat vs phi(0)", report.hat_integral_dev},
      {"inverse transform", report.inversion_dev},
  }};
  for (const auto& [name, dev] : checks) {
    report.max_deviation = std::max(report.max_deviation, dev);
    if (!(dev <= tol)) report.failures.push_back(std::string(name) + " deviation " + format_double(dev));
  }
  report.pass = report.failures.empty();
  return report;
}

RealArg parse_real_arg(std::string_view text) {
  const auto parse_int = [&](std::string_view part) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size()) {
      throw InputError("not an integer: '" + std::string(part) + "'");
    }
    return v;
  };

  RealArg arg;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational r{parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
    if (r.den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    if (r.den < 0) r = {-r.num, -r.den};
    arg.value = r.value();
    arg.exact = r;
    return arg;
  }
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), arg.value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(arg.value)) {
    throw InputError("not a real number: '" + std::string(text) + "'");
  }
  return arg;
}

FourierPair parse_test_fn(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw InputError("test function must look like 'fejer:T', got '" + std::string(text) + "'");
  }
  const auto family = text.substr(0, colon);
  if (family != "fejer") throw InputError("unknown test function family '" + std::string(family) + "'");
  return fejer_pair(parse_real_arg(text.substr(colon + 1)).value);
}

}  // namespace zerolab::testfn
