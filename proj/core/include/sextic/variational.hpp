#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "sextic/model.hpp"

namespace sextic {

/// Closed form of the basis integral \int x^n exp(-x^4/2) dx over the line:
/// zero for odd n, 2^{(n-3)/4} Gamma((n+1)/4) for even n.
double quartic_moment(int n);

/// Basis {x^{2i+sigma} exp(-x^4/4), i = 0..k} for one parity sector, with the
/// moment table needed to assemble overlap and Hamiltonian matrices.
struct BasisSet {
  Parity parity = Parity::even;
  int degree_index = 1;                 // k; basis size is k+1
  std::vector<long double> moments;     // M_0 .. M_{4k+10}
};

BasisSet make_basis(Parity parity, int k);

struct OverlapHamiltonian {
  Eigen::MatrixXd overlap;
  Eigen::MatrixXd hamiltonian;
};

/// S_ij and H_ij reduced to moment combinations; both exactly symmetric.
OverlapHamiltonian build_matrices(const BasisSet& basis, double lambda);

/// Optimized linear ansatz for one state.
struct AnsatzState {
  Eigen::VectorXd coefficients;  // c_0..c_k over x^{2i+sigma} exp(-x^4/4)
  Parity parity = Parity::even;
  double lambda = 0.0;
  double energy = 0.0;
  int quantum_number = 0;  // 0 -> even sector ground, 1 -> odd sector ground
};

/// Lowest eigenpair of H c = E S c in the parity sector of state n (0 or 1),
/// with coefficients normalized so the wavefunction has unit L2 norm.
/// Throws NumericalError when the overlap factorization loses positivity.
AnsatzState solve_state(int n, double lambda, int k);

Wavefunction to_wavefunction(const AnsatzState& state);

/// Overlap integral <psi_a | psi_b> of two ansatz states; exactly zero across
/// parity sectors.
double state_overlap(const AnsatzState& a, const AnsatzState& b);

struct LadderRow {
  int degree;              // 2k, degree of the polynomial prefactor
  double energy;
  double relative_error;   // against the sector reference energy
};

/// Relative energy error versus k. The reference is the algebraic (exact)
/// energy when one exists for (n, lambda), otherwise the k_max + 4 solution.
std::vector<LadderRow> convergence_ladder(double lambda, int n, int k_max);

/// Coupling where E_n crosses the barrier top V(0) = 0, found by bisection on
/// [-0.5, 5] at degree index 6; tolerance 1e-4 in lambda.
double critical_coupling(int n);

/// Momentum-space wavefunction phi(p) = (2 pi)^{-1/2} \int psi e^{-ipx} dx,
/// evaluated by composite Gauss-Legendre with the node budget fixed by the
/// largest momentum the transform is built to resolve.
class MomentumWavefunction {
 public:
  MomentumWavefunction(const Wavefunction& state, double max_momentum);

  std::complex<double> operator()(double p) const;
  double density(double p) const;  // |phi(p)|^2
  Parity parity() const { return parity_; }
  double max_momentum() const { return max_momentum_; }

 private:
  std::vector<double> nodes_;             // Gauss-Legendre nodes on [0, X]
  std::vector<double> weighted_values_;   // w_i psi(x_i)
  Parity parity_;
  double max_momentum_;
};

MomentumWavefunction momentum_wavefunction(const Wavefunction& state,
                                           double max_momentum = 24.0);

}  // namespace sextic
