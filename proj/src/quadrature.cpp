#include "zerolab/quadrature.hpp"

#include <algorithm>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "zerolab/error.hpp"

namespace zerolab::quad {

namespace {

using boost::math::quadrature::gauss;
using boost::math::quadrature::gauss_kronrod;

double panel_sum(const Integrand& f, double from, double to, double panel) {
  double total = 0.0;
  for (double a = from; a < to; a += panel) {
    const double b = std::min(a + panel, to);
    total += gauss_kronrod<double, 15>::integrate(f, a, b, 4, 1e-12);
  }
  return total;
}

}  // namespace

double integrate(const Integrand& f, double a, double b, double rel_tol) {
  if (a == b) return 0.0;
  return gauss_kronrod<double, 31>::integrate(f, a, b, 15, rel_tol);
}

double integrate_pieces(const Integrand& f, std::span<const double> breakpoints, double rel_tol) {
  double total = 0.0;
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    total += integrate(f, breakpoints[i - 1], breakpoints[i], rel_tol);
  }
  return total;
}

double integrate_fixed(const Integrand& f, double a, double b) {
  if (a >= b) return 0.0;
  if (a < 0.0 && b > 0.0) {
    return gauss<double, 30>::integrate(f, a, 0.0) + gauss<double, 30>::integrate(f, 0.0, b);
  }
  return gauss<double, 30>::integrate(f, a, b);
}

double integrate_even_line(const Integrand& f, double panel, double reach) {
  if (!(panel > 0.0) || !(reach > panel)) {
    throw InputError("integrate_even_line: need 0 < panel < reach");
  }
  const double near = panel_sum(f, 0.0, reach, panel);
  const double far = near + panel_sum(f, reach, 2.0 * reach, panel);
  // Half-line tail ~ c/R: extrapolate 2*I(2R) - I(R).
  return 2.0 * (2.0 * far - near);
}

}  // namespace zerolab::quad
