#include "sextic/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "sextic/errors.hpp"
#include "sextic/quadrature.hpp"

namespace sextic {

namespace {

// Evaluates x^sigma * P(x^2) * exp(-x^4/4 - beta x^2) with Horner in z = x^2.
double poly_exp_value(const std::vector<double>& poly, int sigma, double beta, double x) {
  const double z = x * x;
  double acc = 0.0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * z + *it;
  if (sigma == 1) acc *= x;
  return acc * std::exp(-z * z / 4.0 - beta * z);
}

// Smallest X from which the coefficient-bound envelope stays below 1e-16.
double poly_exp_decay_scale(const std::vector<double>& poly, int sigma, double beta,
                            double scale) {
  for (double x = 1.0; x < 40.0; x += 0.05) {
    const double z = x * x;
    double envelope = 0.0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) envelope = envelope * z + std::abs(*it);
    if (sigma == 1) envelope *= x;
    envelope *= std::abs(scale) * std::exp(-z * z / 4.0 - beta * z);
    if (envelope < 1e-16) return x;
  }
  return 40.0;
}

}  // namespace

Wavefunction::Wavefunction(std::function<double(double)> amplitude, Parity parity,
                           double decay_scale, bool normalized)
    : amplitude_(std::move(amplitude)),
      parity_(parity),
      decay_scale_(decay_scale),
      normalized_(normalized) {
  if (!(decay_scale > 0.0)) throw std::invalid_argument("Wavefunction: decay scale must be positive");
}

Wavefunction Wavefunction::poly_exp(std::vector<double> poly, Parity parity, double beta) {
  if (poly.empty()) throw std::invalid_argument("Wavefunction::poly_exp: empty polynomial");
  const int sigma = parity == Parity::even ? 0 : 1;
  const double pre_decay = poly_exp_decay_scale(poly, sigma, beta, 1.0);
  // L2 normalization; the integrand is even, so integrate the half line.
  const double norm2 =
      2.0 * composite_gauss(
                [&](double x) {
                  const double v = poly_exp_value(poly, sigma, beta, x);
                  return v * v;
                },
                0.0, pre_decay, std::max(8, static_cast<int>(4 * pre_decay)));
  const double scale = 1.0 / std::sqrt(norm2);
  for (double& c : poly) c *= scale;
  const double decay = poly_exp_decay_scale(poly, sigma, beta, 1.0);
  return Wavefunction(
      [poly = std::move(poly), sigma, beta](double x) {
        return poly_exp_value(poly, sigma, beta, x);
      },
      parity, decay, true);
}

double l2_norm(const Wavefunction& psi) {
  const double upper = psi.decay_scale();
  return 2.0 * composite_gauss([&](double x) { return psi(x) * psi(x); }, 0.0, upper,
                               std::max(8, static_cast<int>(4 * upper)));
}

// --- potential ---------------------------------------------------------------

double SexticPotential::operator()(double x) const { return potential_value(x, lambda); }

double potential_value(double x, double lambda) {
  const double x2 = x * x;
  return 0.5 * (x2 * x2 * x2 + 2.0 * x2 * x2 - 2.0 * (2.0 * lambda + 1.0) * x2);
}

std::vector<std::pair<double, double>> potential_minima(double lambda) {
  if (lambda <= -0.5) return {{0.0, 0.0}};
  // 3 u^2 + 4 u - 2(2 lambda + 1) = 0 with u = x^2; the positive root.
  const double c = 2.0 * (2.0 * lambda + 1.0);
  const double u = (-2.0 + std::sqrt(4.0 + 3.0 * c)) / 3.0;
  const double xs = std::sqrt(u);
  const double v = potential_value(xs, lambda);
  return {{-xs, v}, {xs, v}};
}

// --- sl(2) polynomial representation -----------------------------------------

double gauge_exponent(double x) { return x * x * x * x / 4.0 + x * x / 2.0; }

namespace sl2 {

namespace {
void trim(Poly& f) {
  while (f.size() > 1 && f.back() == 0.0) f.pop_back();
}
}  // namespace

Poly lowering(const Poly& f) {
  if (f.size() <= 1) return {0.0};
  Poly out(f.size() - 1, 0.0);
  for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = static_cast<double>(i) * f[i];
  trim(out);
  return out;
}

Poly weight(const Poly& f, int rep) {
  Poly out(f.size(), 0.0);
  for (std::size_t i = 0; i < f.size(); ++i)
    out[i] = (static_cast<double>(i) - rep / 2.0) * f[i];
  trim(out);
  return out;
}

Poly raising(const Poly& f, int rep) {
  Poly out(f.size() + 1, 0.0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    // z^2 d/dz on z^i gives i z^{i+1}; -rep z shifts degree up by one.
    out[i + 1] += (static_cast<double>(i) - rep) * f[i];
  }
  trim(out);
  return out;
}

Poly gauge_hamiltonian(const Poly& f, int rep) {
  auto add = [](Poly& acc, const Poly& g, double factor) {
    if (acc.size() < g.size()) acc.resize(g.size(), 0.0);
    for (std::size_t i = 0; i < g.size(); ++i) acc[i] += factor * g[i];
  };
  Poly out(f.size() + 1, 0.0);
  add(out, raising(f, rep), 4.0);
  add(out, weight(lowering(f), rep), -4.0);
  add(out, lowering(f), -2.0 * rep - 2.0);
  add(out, weight(f, rep), 4.0);
  add(out, f, 2.0 * rep + 1.0);
  trim(out);
  return out;
}

}  // namespace sl2

// --- finite algebraic sector --------------------------------------------------

QesSector build_qes_matrix(int n_max) {
  if (n_max < 0) throw std::invalid_argument("build_qes_matrix: sector size must be nonnegative");
  const int dim = n_max + 1;
  QesSector sector;
  sector.n_max = n_max;
  sector.matrix = Eigen::MatrixXd::Zero(dim, dim);
  for (int j = 0; j < dim; ++j) {
    sl2::Poly basis(static_cast<std::size_t>(j) + 1, 0.0);
    basis[j] = 1.0;
    const sl2::Poly image = sl2::gauge_hamiltonian(basis, n_max);
    for (std::size_t i = 0; i < image.size(); ++i) {
      if (static_cast<int>(i) > n_max) {
        if (image[i] != 0.0)
          throw NumericalError("build_qes_matrix: operator leaks past degree N");
        continue;
      }
      sector.matrix(static_cast<int>(i), j) = image[i];
    }
  }
  return sector;
}

namespace {

struct EigenPair {
  double value;
  Eigen::VectorXd vector;
};

std::vector<EigenPair> sector_eigenpairs(const QesSector& sector) {
  Eigen::EigenSolver<Eigen::MatrixXd> solver(sector.matrix);
  if (solver.info() != Eigen::Success)
    throw NumericalError("qes_spectrum: eigensolver failed to converge");
  const auto values = solver.eigenvalues();
  const auto vectors = solver.eigenvectors();
  std::vector<EigenPair> pairs(values.size());
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (std::abs(values[i].imag()) > 1e-10)
      throw NumericalError("qes_spectrum: complex eigenvalue in a sector expected real");
    pairs[i].value = values[i].real();
    pairs[i].vector = vectors.col(i).real();
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const EigenPair& a, const EigenPair& b) { return a.value < b.value; });
  return pairs;
}

}  // namespace

std::vector<double> qes_spectrum(const QesSector& sector) {
  std::vector<double> energies;
  for (const auto& pair : sector_eigenpairs(sector)) energies.push_back(pair.value / 2.0);
  return energies;
}

sl2::Poly qes_eigen_polynomial(const QesSector& sector, int index) {
  if (index < 0 || index > sector.n_max)
    throw std::invalid_argument("qes_eigen_polynomial: index outside sector");
  const auto pairs = sector_eigenpairs(sector);
  Eigen::VectorXd v = pairs[index].vector;
  if (std::abs(v[0]) > 1e-12 * v.norm()) {
    v /= v[0];
  } else {
    Eigen::Index lead;
    v.cwiseAbs().maxCoeff(&lead);
    v /= v[lead];
  }
  return sl2::Poly(v.data(), v.data() + v.size());
}

Wavefunction exact_qes_wavefunction(const QesSector& sector, int index) {
  return Wavefunction::poly_exp(qes_eigen_polynomial(sector, index), Parity::even, 0.5);
}

}  // namespace sextic
