#pragma once

#include <string>
#include <vector>

#include "sextic/model.hpp"

namespace sextic {

enum class GridKind { wigner, abs_wigner, husimi };

std::string to_string(GridKind kind);

/// Rectangular phase-space window. Defaults cover every state used by the
/// bundled analyses for |lambda| <= 5 with excluded mass below 1e-6.
struct GridSpec {
  int nx = 241;
  int np = 241;
  double x_min = -6.0, x_max = 6.0;
  double p_min = -12.0, p_max = 12.0;
};

/// Real-valued distribution sampled on the nodes of a GridSpec, x-major.
class PhaseGrid {
 public:
  PhaseGrid(const GridSpec& spec, GridKind kind);

  int nx() const { return spec_.nx; }
  int np() const { return spec_.np; }
  const GridSpec& spec() const { return spec_; }
  GridKind kind() const { return kind_; }

  double dx() const { return (spec_.x_max - spec_.x_min) / (spec_.nx - 1); }
  double dp() const { return (spec_.p_max - spec_.p_min) / (spec_.np - 1); }
  double cell_area() const { return dx() * dp(); }
  double x_node(int i) const { return spec_.x_min + i * dx(); }
  double p_node(int j) const { return spec_.p_min + j * dp(); }

  double at(int i, int j) const { return values_[static_cast<std::size_t>(i) * spec_.np + j]; }
  double& at(int i, int j) { return values_[static_cast<std::size_t>(i) * spec_.np + j]; }
  const std::vector<double>& values() const { return values_; }

  double integral() const;   // 2D trapezoid
  double min_value() const;
  double max_value() const;

 private:
  GridSpec spec_;
  GridKind kind_;
  std::vector<double> values_;
};

/// W(x,p) = (1/pi) \int psi(x+y) psi(x-y) cos(2py) dy per cell, by composite
/// 32-node Gauss-Legendre panels of width pi/(2|p|+1) on |y| <= decay + |x|.
PhaseGrid wigner_grid(const Wavefunction& state, const GridSpec& spec, int threads = 0);

/// Pointwise |W| renormalized to unit integral.
PhaseGrid abs_wigner_grid(const PhaseGrid& wigner);

/// H(x,p) = |<x,p|psi>|^2 / (2 pi) per cell, one overlap integral against the
/// minimum-uncertainty kernel pi^{-1/4} exp(-(x'-x)^2/2 - i p x').
PhaseGrid husimi_grid(const Wavefunction& state, const GridSpec& spec, int threads = 0);

/// Gaussian smearing of a Wigner grid with kernel exp(-dx^2 - dp^2)/pi by
/// separable discrete convolution; the input must extend at least
/// `margin` (default 3.0) beyond the output window on every side.
PhaseGrid husimi_by_smoothing(const PhaseGrid& wigner, const GridSpec& out_spec,
                              int threads = 0, double margin = 3.0);

/// Integral of |W| over the cells where W < 0, by masked trapezoid sum.
double negativity_volume(const PhaseGrid& wigner);

/// Single-cell evaluators behind the grid builders; the grid functions mirror
/// parity-symmetric boxes, these always integrate directly.
double wigner_value(const Wavefunction& state, double x, double p);
double husimi_value(const Wavefunction& state, double x, double p);

}  // namespace sextic
