#pragma once

#include <functional>
#include <span>

namespace zerolab::quad {

using Integrand = std::function<double(double)>;

// Adaptive Gauss-Kronrod on [a, b].
double integrate(const Integrand& f, double a, double b, double rel_tol = 1e-13);

// Adaptive Gauss-Kronrod over consecutive breakpoints; kinks should sit on breakpoints.
double integrate_pieces(const Integrand& f, std::span<const double> breakpoints,
                        double rel_tol = 1e-13);

// Gauss-Legendre with a fixed 30-point rule on each of [a, 0] and [0, b] (when 0 is inside).
// Exact for piecewise polynomials of degree < 60 with a single kink at the origin.
double integrate_fixed(const Integrand& f, double a, double b);

// \int_R f for an even integrand whose tail behaves like c/x^2 (possibly oscillating).
// Panels of width `panel` out to `reach` and 2*reach, then Richardson in 1/reach.
double integrate_even_line(const Integrand& f, double panel = 0.5, double reach = 4096.0);

}  // namespace zerolab::quad
