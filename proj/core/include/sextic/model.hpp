#pragma once

#include <Eigen/Dense>
#include <functional>
#include <utility>
#include <vector>

namespace sextic {

enum class Parity { even, odd };

/// Real one-dimensional amplitude with parity and decay metadata.
/// evaluate() must satisfy psi(-x) = +/- psi(x) according to `parity`,
/// and |psi(x)| < 1e-16 for |x| >= decay_scale().
class Wavefunction {
 public:
  Wavefunction(std::function<double(double)> amplitude, Parity parity,
               double decay_scale, bool normalized);

  double operator()(double x) const { return amplitude_(x); }
  Parity parity() const { return parity_; }
  double decay_scale() const { return decay_scale_; }
  bool normalized() const { return normalized_; }

  /// psi(x) = scale * x^sigma * P(x^2) * exp(-x^4/4 - beta x^2), with P given
  /// by `poly` (coefficients of z^i, z = x^2) and sigma fixed by `parity`.
  /// The returned state is L2-normalized by quadrature.
  static Wavefunction poly_exp(std::vector<double> poly, Parity parity, double beta);

 private:
  std::function<double(double)> amplitude_;
  Parity parity_;
  double decay_scale_;
  bool normalized_;
};

/// L2 norm integral of the amplitude over the real line.
double l2_norm(const Wavefunction& psi);

// --- sextic potential -------------------------------------------------------

/// V(x; lambda) = (x^6 + 2 x^4 - 2 (2 lambda + 1) x^2) / 2, atomic units.
struct SexticPotential {
  double lambda = 0.0;
  double operator()(double x) const;
};

double potential_value(double x, double lambda);

/// Stationary minima of the potential: the symmetric pair {-x*, +x*} for
/// lambda > -1/2 (x* the positive root of 3x^4 + 4x^2 - 2(2 lambda + 1) = 0),
/// or the single minimum at the origin otherwise. Sorted by position.
std::vector<std::pair<double, double>> potential_minima(double lambda);

// --- algebraic sector at integer coupling -----------------------------------

/// Gauge factor g(x) = x^4/4 + x^2/2 used to rotate the rescaled Hamiltonian
/// into a polynomial-preserving operator.
double gauge_exponent(double x);

namespace sl2 {

/// Polynomial in z represented by its monomial coefficients, poly[i] <-> z^i.
using Poly = std::vector<double>;

Poly lowering(const Poly& f);               // d/dz
Poly weight(const Poly& f, int rep);        // z d/dz - rep/2
Poly raising(const Poly& f, int rep);       // z^2 d/dz - rep z

/// Action of the gauge-rotated (rescaled) Hamiltonian expressed in the
/// universal enveloping algebra:
///   h = 4 J+ - 4 J0 J- + (-2 rep - 2) J- + 4 J0 + (2 rep + 1) I.
Poly gauge_hamiltonian(const Poly& f, int rep);

}  // namespace sl2

/// Finite matrix of the gauge-rotated operator on the monomial basis
/// {1, z, ..., z^N}. Eigenvalues halved are exact energies at lambda = N.
struct QesSector {
  int n_max = 0;
  Eigen::MatrixXd matrix;
};

QesSector build_qes_matrix(int n_max);

/// Real eigenvalues of the sector matrix divided by two, sorted ascending.
/// Throws NumericalError if any eigenvalue has |Im| > 1e-10.
std::vector<double> qes_spectrum(const QesSector& sector);

/// Normalized even-parity eigenstate psi(x) = Phi(x^2) exp(-x^4/4 - x^2/2)
/// for the index-th (ascending energy) eigenvector; the polynomial is scaled
/// so its constant term is one when nonzero.
Wavefunction exact_qes_wavefunction(const QesSector& sector, int index);

/// Eigenvector polynomial coefficients backing exact_qes_wavefunction.
sl2::Poly qes_eigen_polynomial(const QesSector& sector, int index);

}  // namespace sextic
