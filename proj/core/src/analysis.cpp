#include "sextic/analysis.hpp"

#include <stdexcept>

#include "sextic/quadrature.hpp"

namespace sextic {

namespace {

MarginalDensity package_density(Axis axis, std::vector<double> nodes,
                                std::vector<double> values) {
  MarginalDensity out;
  out.axis = axis;
  out.source = GridKind::wigner;  // true quantum densities
  out.nodes = std::move(nodes);
  out.values = std::move(values);
  const double total = trapezoid(out.values, out.step());
  if (!(total > 0.0)) throw std::invalid_argument("sampled density has no mass");
  out.renorm_factor = 1.0 / total;
  for (double& v : out.values) v *= out.renorm_factor;
  return out;
}

}  // namespace

Wavefunction make_state(double lambda, int n, int k) {
  return to_wavefunction(solve_state(n, lambda, k));
}

GridSpec default_grid_spec() { return GridSpec{241, 241, -6.0, 6.0, -12.0, 12.0}; }

GridSpec crj_position_grid_spec() { return GridSpec{801, 281, -8.0, 8.0, -14.0, 14.0}; }

GridSpec crj_momentum_grid_spec() { return GridSpec{241, 1401, -6.0, 6.0, -14.0, 14.0}; }

RepresentationReports entropy_reports(const Wavefunction& psi, double lambda, int n,
                                      const GridSpec& spec, int threads) {
  RepresentationReports out;
  const PhaseGrid w = wigner_grid(psi, spec, threads);
  out.wigner = entropy_report(w, lambda, n);
  out.abs_wigner = entropy_report(abs_wigner_grid(w), lambda, n);
  out.husimi = entropy_report(husimi_grid(psi, spec, threads), lambda, n);
  out.negativity = negativity_volume(w);
  return out;
}

CrjTriple crj_triple(const Wavefunction& psi, Axis axis, int threads) {
  const GridSpec spec =
      axis == Axis::position ? crj_position_grid_spec() : crj_momentum_grid_spec();
  const PhaseGrid w = wigner_grid(psi, spec, threads);
  const PhaseGrid h = husimi_grid(psi, spec, threads);
  const MarginalDensity mw = marginal(w, axis);
  const MarginalDensity ma = marginal(abs_wigner_grid(w), axis);
  const MarginalDensity mh = marginal(h, axis);
  CrjTriple out;
  out.abs_vs_w = crj_divergence(ma, mw);
  out.h_vs_w = crj_divergence(mh, mw);
  out.h_vs_abs = crj_divergence(mh, ma);
  return out;
}

MarginalDensity sample_position_density(const Wavefunction& psi, double extent, int count) {
  if (count < 2) throw std::invalid_argument("sample_position_density: need at least two nodes");
  std::vector<double> nodes(count), values(count);
  const double step = 2.0 * extent / (count - 1);
  for (int i = 0; i < count; ++i) {
    nodes[i] = -extent + i * step;
    const double a = psi(nodes[i]);
    values[i] = a * a;
  }
  return package_density(Axis::position, std::move(nodes), std::move(values));
}

MarginalDensity sample_momentum_density(const Wavefunction& psi, double extent, int count) {
  if (count < 2) throw std::invalid_argument("sample_momentum_density: need at least two nodes");
  const MomentumWavefunction phi = momentum_wavefunction(psi, extent + 1.0);
  std::vector<double> nodes(count), values(count);
  const double step = 2.0 * extent / (count - 1);
  for (int i = 0; i < count; ++i) {
    nodes[i] = -extent + i * step;
    values[i] = phi.density(nodes[i]);
  }
  return package_density(Axis::momentum, std::move(nodes), std::move(values));
}

}  // namespace sextic
