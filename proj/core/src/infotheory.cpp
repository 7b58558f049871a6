#include "sextic/infotheory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sextic/errors.hpp"
#include "sextic/quadrature.hpp"

namespace sextic {

std::string to_string(Axis axis) { return axis == Axis::position ? "position" : "momentum"; }

MarginalDensity marginal(const PhaseGrid& grid, Axis axis) {
  MarginalDensity out;
  out.axis = axis;
  out.source = grid.kind();
  const bool pos = axis == Axis::position;
  const int n_keep = pos ? grid.nx() : grid.np();
  const int n_sum = pos ? grid.np() : grid.nx();
  const double h_sum = pos ? grid.dp() : grid.dx();
  const auto w = trapezoid_weights(n_sum, h_sum);
  out.nodes.resize(n_keep);
  out.values.resize(n_keep);
  for (int i = 0; i < n_keep; ++i) {
    out.nodes[i] = pos ? grid.x_node(i) : grid.p_node(i);
    double sum = 0.0;
    for (int j = 0; j < n_sum; ++j) sum += w[j] * (pos ? grid.at(i, j) : grid.at(j, i));
    if (sum < 0.0) {
      sum = 0.0;
      ++out.clamped_cells;
    }
    out.values[i] = sum;
  }
  const double total = trapezoid(out.values, out.step());
  if (!(total > 0.0)) throw NumericalError("marginal: projected density has no mass");
  out.renorm_factor = 1.0 / total;
  for (double& v : out.values) v *= out.renorm_factor;
  return out;
}

double shannon_1d(const MarginalDensity& density) {
  const auto w = trapezoid_weights(density.values.size(), density.step());
  double sum = 0.0;
  for (std::size_t i = 0; i < density.values.size(); ++i) {
    const double rho = density.values[i];
    if (rho > 1e-300) sum -= w[i] * rho * std::log(rho);
  }
  return sum;
}

std::complex<double> shannon_2d(const PhaseGrid& grid) {
  const auto wx = trapezoid_weights(grid.nx(), grid.dx());
  const auto wp = trapezoid_weights(grid.np(), grid.dp());
  double real = 0.0;
  for (int i = 0; i < grid.nx(); ++i) {
    for (int j = 0; j < grid.np(); ++j) {
      const double q = grid.at(i, j);
      if (std::abs(q) > 1e-300) real -= wx[i] * wp[j] * q * std::log(std::abs(q));
    }
  }
  double imag = 0.0;
  if (grid.kind() == GridKind::wigner)
    imag = std::numbers::pi * negativity_volume(grid);
  return {real, imag};
}

EntropyReport entropy_report(const PhaseGrid& grid, double lambda, int quantum_number) {
  EntropyReport report;
  report.lambda = lambda;
  report.quantum_number = quantum_number;
  report.kind = grid.kind();
  report.s2d = shannon_2d(grid);
  report.sx = shannon_1d(marginal(grid, Axis::position));
  report.sp = shannon_1d(marginal(grid, Axis::momentum));
  report.st = report.sx + report.sp;
  report.mutual_information = std::complex<double>(report.st, 0.0) - report.s2d;
  return report;
}

SurvivalCurve survival_curve(const MarginalDensity& density) {
  SurvivalCurve curve;
  curve.nodes = density.nodes;
  const std::size_t count = density.values.size();
  curve.values.assign(count, 0.0);
  const double h = density.step();
  for (std::size_t i = count - 1; i-- > 0;) {
    curve.values[i] =
        curve.values[i + 1] + 0.5 * h * (density.values[i] + density.values[i + 1]);
    curve.values[i] = std::clamp(curve.values[i], 0.0, 1.0);
  }
  return curve;
}

CrjResult crj_divergence(const MarginalDensity& m, const MarginalDensity& n,
                         const CrjOptions& options) {
  if (m.nodes.size() != n.nodes.size())
    throw std::invalid_argument("crj_divergence: node sets differ in size");
  for (std::size_t i = 0; i < m.nodes.size(); ++i)
    if (std::abs(m.nodes[i] - n.nodes[i]) > 1e-12)
      throw std::invalid_argument("crj_divergence: node sets do not coincide");

  const SurvivalCurve sm = survival_curve(m);
  const SurvivalCurve sn = survival_curve(n);
  const auto w = trapezoid_weights(m.nodes.size(), m.step());
  CrjResult result;
  for (std::size_t i = 0; i < m.nodes.size(); ++i) {
    const double a = sn.values[i];
    const double b = sm.values[i];
    if (a >= options.survival_floor && b >= options.survival_floor) {
      result.value += w[i] * (a - b) * (std::log(a) - std::log(b));
    } else if (a >= options.survival_floor || b >= options.survival_floor) {
      result.excluded_mass = std::max(result.excluded_mass, std::max(a, b));
    }
  }
  result.tail_warning = result.excluded_mass > options.tail_mass_limit;
  return result;
}

}  // namespace sextic
