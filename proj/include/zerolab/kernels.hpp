#pragma once

#include <functional>
#include <string_view>

#include "zerolab/testfn.hpp"

namespace zerolab::kernels {

enum class Symmetry { U, Sp, SOeven, SOodd, O };

std::string_view to_string(Symmetry label);
Symmetry parse_symmetry(std::string_view label);

// Limiting one-level density W of a symmetry type, held in two forms:
//   W(x)     = spatial_atom * delta_0 + spatial_smooth(x)
//   W_hat(y) = fourier_atom * delta_0 + fourier_window * 1_{[-1,1]}(y) + fourier_constant
struct SymmetryKernel {
  Symmetry label = Symmetry::U;
  double spatial_atom = 0.0;
  std::function<double(double)> spatial_smooth;
  double fourier_atom = 1.0;
  double fourier_window = 0.0;
  double fourier_constant = 0.0;
};

SymmetryKernel kernel(Symmetry label);

// \int phi W computed on the Fourier side (Plancherel).
double pairing(const SymmetryKernel& w, const testfn::FourierPair& fp);

// \int phi W computed by spatial quadrature of the smooth part plus the atom.
// Independent of the Fourier-side tables; used to cross-check them.
double spatial_pairing(const SymmetryKernel& w, const testfn::FourierPair& fp);

struct IndistinguishabilityReport {
  bool hypothesis_holds = false;  // support radius < 1
  bool orthogonal_agree = false;  // O, SOeven, SOodd pairings equal to 1e-12
  double o = 0.0, so_even = 0.0, so_odd = 0.0, sp = 0.0, u = 0.0;
  double orthogonal_spread = 0.0;
};

IndistinguishabilityReport indistinguishability_report(const testfn::FourierPair& fp);

// Sine-kernel pair-correlation density 1 - (sin(pi x)/(pi x))^2.
double gue_pair_density(double x);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

double gue_functional(const testfn::FourierPair& fp);
double gue_functional(Interval interval);

}  // namespace zerolab::kernels
