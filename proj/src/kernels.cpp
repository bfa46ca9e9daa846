#include "zerolab/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "zerolab/error.hpp"
#include "zerolab/quadrature.hpp"

namespace zerolab::kernels {

namespace {

double sinc(double u) {
  if (std::abs(u) < 1e-4) return 1.0 - u * u / 6.0;
  return std::sin(u) / u;
}

// sin(2 pi x) / (2 pi x)
double sine_term(double x) { return sinc(2.0 * std::numbers::pi * x); }

}  // namespace

std::string_view to_string(Symmetry label) {
  switch (label) {
    case Symmetry::U: return "U";
    case Symmetry::Sp: return "Sp";
    case Symmetry::SOeven: return "SOeven";
    case Symmetry::SOodd: return "SOodd";
    case Symmetry::O: return "O";
  }
  return "?";
}

Symmetry parse_symmetry(std::string_view label) {
  for (auto s : {Symmetry::U, Symmetry::Sp, Symmetry::SOeven, Symmetry::SOodd, Symmetry::O}) {
    if (to_string(s) == label) return s;
  }
  throw InputError("unknown symmetry label '" + std::string(label) + "' (expected U|Sp|SOeven|SOodd|O)");
}

SymmetryKernel kernel(Symmetry label) {
  SymmetryKernel w;
  w.label = label;
  w.fourier_atom = 1.0;
  switch (label) {
    case Symmetry::U:
      w.spatial_smooth = [](double) { return 1.0; };
      break;
    case Symmetry::Sp:
      w.spatial_smooth = [](double x) { return 1.0 - sine_term(x); };
      w.fourier_window = -0.5;
      break;
    case Symmetry::SOeven:
      w.spatial_smooth = [](double x) { return 1.0 + sine_term(x); };
      w.fourier_window = 0.5;
      break;
    case Symmetry::SOodd:
      w.spatial_atom = 1.0;
      w.spatial_smooth = [](double x) { return 1.0 - sine_term(x); };
      w.fourier_window = -0.5;
      w.fourier_constant = 1.0;
      break;
    case Symmetry::O:
      w.spatial_atom = 0.5;
      w.spatial_smooth = [](double) { return 1.0; };
      w.fourier_constant = 0.5;
      break;
  }
  return w;
}

double pairing(const SymmetryKernel& w, const testfn::FourierPair& fp) {
  const double reach = std::min(1.0, fp.support_radius);
  const double window = quad::integrate_fixed(fp.eval_hat, -reach, reach);
  return w.fourier_atom * fp.hat(0.0) + w.fourier_window * window + w.fourier_constant * fp(0.0);
}

double spatial_pairing(const SymmetryKernel& w, const testfn::FourierPair& fp) {
  const auto integrand = [&](double x) { return fp(x) * w.spatial_smooth(x); };
  return quad::integrate_even_line(integrand) + w.spatial_atom * fp(0.0);
}

IndistinguishabilityReport indistinguishability_report(const testfn::FourierPair& fp) {
  IndistinguishabilityReport r;
  r.hypothesis_holds = fp.support_radius < 1.0;
  r.o = pairing(kernel(Symmetry::O), fp);
  r.so_even = pairing(kernel(Symmetry::SOeven), fp);
  r.so_odd = pairing(kernel(Symmetry::SOodd), fp);
  r.sp = pairing(kernel(Symmetry::Sp), fp);
  r.u = pairing(kernel(Symmetry::U), fp);
  r.orthogonal_spread = std::max({r.o, r.so_even, r.so_odd}) - std::min({r.o, r.so_even, r.so_odd});
  r.orthogonal_agree = r.hypothesis_holds && r.orthogonal_spread <= 1e-12;
  return r;
}

double gue_pair_density(double x) {
  const double s = sinc(std::numbers::pi * x);
  return 1.0 - s * s;
}

double gue_functional(const testfn::FourierPair& fp) {
  return quad::integrate_even_line([&](double x) { return gue_pair_density(x) * fp(x); });
}

double gue_functional(Interval interval) {
  if (!(interval.lo <= interval.hi)) throw InputError("gue_functional: empty or reversed interval");
  if (interval.lo < 0.0 && interval.hi > 0.0) {
    const std::array<double, 3> pieces{interval.lo, 0.0, interval.hi};
    return quad::integrate_pieces(gue_pair_density, pieces);
  }
  return quad::integrate(gue_pair_density, interval.lo, interval.hi);
}

}  // namespace zerolab::kernels
