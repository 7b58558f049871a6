#pragma once

#include "sextic/infotheory.hpp"
#include "sextic/variational.hpp"

namespace sextic {

/// Normalized variational wavefunction for state n at the given coupling.
Wavefunction make_state(double lambda, int n, int k = 6);

/// Default analysis window: excluded mass below 1e-6 for every state with
/// |lambda| <= 5 (momentum tails decay like exp(-c p^{4/3}) and need |p| up
/// to 12 by lambda = 5).
GridSpec default_grid_spec();

/// Wide windows for survival-function work. Tail regions where one survival
/// is orders of magnitude above the other dominate Jeffreys integrals, so the
/// projection axis is sampled finely and far out.
GridSpec crj_position_grid_spec();
GridSpec crj_momentum_grid_spec();

/// Entropy reports for all three representations sharing one Wigner grid.
struct RepresentationReports {
  EntropyReport wigner;
  EntropyReport abs_wigner;
  EntropyReport husimi;
  double negativity = 0.0;
};

RepresentationReports entropy_reports(const Wavefunction& psi, double lambda, int n,
                                      const GridSpec& spec, int threads = 0);

/// The three pairwise divergences (|W|,W), (H,W), (H,|W|) along one axis,
/// evaluated on the wide survival grids.
struct CrjTriple {
  CrjResult abs_vs_w;
  CrjResult h_vs_w;
  CrjResult h_vs_abs;
};

CrjTriple crj_triple(const Wavefunction& psi, Axis axis, int threads = 0);

/// |psi(x)|^2 sampled on a fine uniform grid, packaged as a unit-normalized
/// marginal so the 1D information measures apply to states directly.
MarginalDensity sample_position_density(const Wavefunction& psi, double extent = 6.0,
                                        int count = 4801);

/// |phi(p)|^2 sampled the same way via the Fourier transform of the state.
MarginalDensity sample_momentum_density(const Wavefunction& psi, double extent = 14.0,
                                        int count = 4801);

}  // namespace sextic
