#pragma once

#include <complex>
#include <vector>

#include "sextic/phasespace.hpp"

namespace sextic {

enum class Axis { position, momentum };

std::string to_string(Axis axis);

/// One-dimensional projection of a phase-space grid, renormalized to unit
/// trapezoid integral. Tiny negative quadrature residues are clamped to zero
/// and counted.
struct MarginalDensity {
  Axis axis = Axis::position;
  GridKind source = GridKind::wigner;
  std::vector<double> nodes;
  std::vector<double> values;
  double renorm_factor = 1.0;  // factor applied to reach unit integral
  int clamped_cells = 0;

  double step() const { return nodes[1] - nodes[0]; }
};

MarginalDensity marginal(const PhaseGrid& grid, Axis axis);

/// -\int rho ln rho with 0 ln 0 := 0 below a 1e-300 value threshold.
double shannon_1d(const MarginalDensity& density);

/// -\iint Q ln Q with ln Q := ln|Q| + i pi on negative cells. The imaginary
/// part equals pi times the negativity volume of the same grid, identically
/// at grid level (shared mask and quadrature weights).
std::complex<double> shannon_2d(const PhaseGrid& grid);

/// Entropy bundle for one (state, representation) pair.
struct EntropyReport {
  std::complex<double> s2d;
  double sx = 0.0;
  double sp = 0.0;
  double st = 0.0;  // sx + sp
  std::complex<double> mutual_information;  // sx + sp - s2d
  double lambda = 0.0;
  int quantum_number = 0;
  GridKind kind = GridKind::wigner;
};

EntropyReport entropy_report(const PhaseGrid& grid, double lambda, int quantum_number);

/// Survival function S(x) = \int_x^inf rho, cumulative trapezoid from the
/// right, clamped to [0, 1].
struct SurvivalCurve {
  std::vector<double> nodes;
  std::vector<double> values;
};

SurvivalCurve survival_curve(const MarginalDensity& density);

struct CrjOptions {
  /// Nodes where a survival falls below the floor are excluded one-sidedly;
  /// the floor is far below any bulk scale so only hard underflow is dropped.
  double survival_floor = 1e-250;
  double tail_mass_limit = 1e-8;
};

struct CrjResult {
  double value = 0.0;
  double excluded_mass = 0.0;  // largest surviving tail among excluded nodes
  bool tail_warning = false;
};

/// Cumulative residual Jeffreys divergence
///   D = \int (S_n - S_m) ln(S_n / S_m)
/// over the shared node set; symmetric and nonnegative by construction.
CrjResult crj_divergence(const MarginalDensity& m, const MarginalDensity& n,
                         const CrjOptions& options = {});

}  // namespace sextic
