#include "sextic/variational.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sextic/errors.hpp"
#include "sextic/quadrature.hpp"

namespace sextic {

namespace {

using LongMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
using LongVector = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

long double quartic_moment_l(int n) {
  if (n < 0) throw std::invalid_argument("quartic_moment: order must be nonnegative");
  if (n % 2 == 1) return 0.0L;
  return std::pow(2.0L, (n - 3) / 4.0L) * std::tgamma((n + 1) / 4.0L);
}

// Assembles S and H in extended precision. Basis function i carries monomial
// power m_i = 2i + sigma; with phi' = (m x^{m-1} - x^{m+3}) e^{-x^4/4},
//   S_ij = M_{mi+mj}
//   H_ij = (mi mj M_{mi+mj-2} - (mi+mj) M_{mi+mj+2} + M_{mi+mj+6}) / 2
//        + (M_{mi+mj+6} + 2 M_{mi+mj+4} - 2 (2 lambda + 1) M_{mi+mj+2}) / 2.
void assemble(const BasisSet& basis, long double lambda, LongMatrix& s, LongMatrix& h) {
  const int size = basis.degree_index + 1;
  const int sigma = basis.parity == Parity::even ? 0 : 1;
  s.resize(size, size);
  h.resize(size, size);
  auto moment = [&](int order) -> long double {
    if (order < 0 || order >= static_cast<int>(basis.moments.size()))
      throw std::invalid_argument("build_matrices: moment table does not cover required order");
    return basis.moments[order];
  };
  for (int i = 0; i < size; ++i) {
    for (int j = i; j < size; ++j) {
      const int mi = 2 * i + sigma;
      const int mj = 2 * j + sigma;
      const int m = mi + mj;
      long double kinetic = -(mi + mj) * moment(m + 2) + moment(m + 6);
      if (mi > 0 && mj > 0) kinetic += static_cast<long double>(mi) * mj * moment(m - 2);
      const long double pot =
          moment(m + 6) + 2.0L * moment(m + 4) - 2.0L * (2.0L * lambda + 1.0L) * moment(m + 2);
      s(i, j) = moment(m);
      s(j, i) = s(i, j);
      h(i, j) = 0.5L * (kinetic + pot);
      h(j, i) = h(i, j);
    }
  }
}

struct SectorSolution {
  long double energy;
  LongVector coefficients;  // normalized so c^T S c = 1
};

// Diagonal scaling, Cholesky reduction to a standard symmetric problem, and
// the lowest eigenpair, all in long double to keep the degree-12 energies at
// the 1e-10 relative level demanded by the convergence tables.
SectorSolution solve_sector(Parity parity, double lambda, int k) {
  if (k < 1) throw std::invalid_argument("solve_state: degree index k must be at least 1");
  const BasisSet basis = make_basis(parity, k);
  LongMatrix s, h;
  assemble(basis, lambda, s, h);
  const int size = k + 1;

  LongVector scale(size);
  for (int i = 0; i < size; ++i) scale[i] = 1.0L / std::sqrt(s(i, i));
  LongMatrix ss = scale.asDiagonal() * s * scale.asDiagonal();
  LongMatrix hs = scale.asDiagonal() * h * scale.asDiagonal();

  Eigen::LLT<LongMatrix> llt(ss);
  if (llt.info() != Eigen::Success)
    throw NumericalError("solve_state: overlap matrix lost positive definiteness");
  LongMatrix l = llt.matrixL();
  LongMatrix reduced = l.triangularView<Eigen::Lower>().solve(hs);
  reduced = l.triangularView<Eigen::Lower>().solve(reduced.transpose()).eval();
  reduced = 0.5L * (reduced + reduced.transpose()).eval();

  Eigen::SelfAdjointEigenSolver<LongMatrix> eig(reduced);
  if (eig.info() != Eigen::Success)
    throw NumericalError("solve_state: eigensolver failed to converge");

  LongVector y = eig.eigenvectors().col(0);
  LongVector x = l.transpose().triangularView<Eigen::Upper>().solve(y);
  x = scale.asDiagonal() * x;

  // Fix the overall sign deterministically.
  int lead = 0;
  for (int i = 1; i < size; ++i)
    if (std::abs(x[i]) > std::abs(x[lead])) lead = i;
  if (x[lead] < 0.0L) x = -x;

  return {eig.eigenvalues()[0], x};
}

}  // namespace

double quartic_moment(int n) { return static_cast<double>(quartic_moment_l(n)); }

BasisSet make_basis(Parity parity, int k) {
  if (k < 0) throw std::invalid_argument("make_basis: degree index must be nonnegative");
  BasisSet basis;
  basis.parity = parity;
  basis.degree_index = k;
  basis.moments.resize(4 * k + 11);
  for (int n = 0; n <= 4 * k + 10; ++n) basis.moments[n] = quartic_moment_l(n);
  return basis;
}

OverlapHamiltonian build_matrices(const BasisSet& basis, double lambda) {
  LongMatrix s, h;
  assemble(basis, lambda, s, h);
  OverlapHamiltonian out;
  out.overlap = s.cast<double>();
  out.hamiltonian = h.cast<double>();
  return out;
}

AnsatzState solve_state(int n, double lambda, int k) {
  if (n != 0 && n != 1)
    throw std::invalid_argument("solve_state: only the two lowest states are supported");
  const Parity parity = n == 0 ? Parity::even : Parity::odd;
  const SectorSolution sol = solve_sector(parity, lambda, k);
  AnsatzState state;
  state.coefficients = sol.coefficients.cast<double>();
  state.parity = parity;
  state.lambda = lambda;
  state.energy = static_cast<double>(sol.energy);
  state.quantum_number = n;
  return state;
}

Wavefunction to_wavefunction(const AnsatzState& state) {
  std::vector<double> poly(state.coefficients.data(),
                           state.coefficients.data() + state.coefficients.size());
  return Wavefunction::poly_exp(std::move(poly), state.parity, 0.0);
}

double state_overlap(const AnsatzState& a, const AnsatzState& b) {
  if (a.parity != b.parity) return 0.0;
  const int k = static_cast<int>(std::max(a.coefficients.size(), b.coefficients.size())) - 1;
  const BasisSet basis = make_basis(a.parity, k);
  const int sigma = a.parity == Parity::even ? 0 : 1;
  long double sum = 0.0L;
  for (int i = 0; i < a.coefficients.size(); ++i)
    for (int j = 0; j < b.coefficients.size(); ++j)
      sum += static_cast<long double>(a.coefficients[i]) * b.coefficients[j] *
             basis.moments[2 * (i + j) + 2 * sigma];
  return static_cast<double>(sum);
}

std::vector<LadderRow> convergence_ladder(double lambda, int n, int k_max) {
  if (k_max < 1) throw std::invalid_argument("convergence_ladder: k_max must be at least 1");
  double reference;
  const bool integral = std::abs(lambda - std::round(lambda)) < 1e-12 && lambda >= 0.0;
  if (n == 0 && integral) {
    reference = qes_spectrum(build_qes_matrix(static_cast<int>(std::round(lambda)))).front();
  } else {
    reference = solve_state(n, lambda, k_max + 4).energy;
  }
  std::vector<LadderRow> rows;
  for (int k = 1; k <= k_max; ++k) {
    const double e = solve_state(n, lambda, k).energy;
    rows.push_back({2 * k, e, std::abs(e - reference) / std::abs(reference)});
  }
  return rows;
}

double critical_coupling(int n) {
  constexpr int kDegreeIndex = 6;
  double lo = -0.5, hi = 5.0;
  double e_lo = solve_state(n, lo, kDegreeIndex).energy;
  const double e_hi = solve_state(n, hi, kDegreeIndex).energy;
  if ((e_lo > 0.0) == (e_hi > 0.0))
    throw NumericalError("critical_coupling: energy does not change sign on [-0.5, 5]");
  while (hi - lo > 1e-4) {
    const double mid = 0.5 * (lo + hi);
    const double e_mid = solve_state(n, mid, kDegreeIndex).energy;
    if ((e_mid > 0.0) == (e_lo > 0.0)) {
      lo = mid;
      e_lo = e_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

MomentumWavefunction::MomentumWavefunction(const Wavefunction& state, double max_momentum)
    : parity_(state.parity()), max_momentum_(max_momentum) {
  if (!(max_momentum > 0.0))
    throw std::invalid_argument("momentum_wavefunction: bandwidth must be positive");
  if (!state.normalized())
    throw std::invalid_argument("momentum_wavefunction: state must be normalized");
  const double upper = state.decay_scale();
  // One oscillation period of e^{-ipx} at p = max_momentum per 32-node panel.
  const double width = 2.0 * std::numbers::pi / max_momentum;
  const int panels = std::max(4, static_cast<int>(std::ceil(upper / width)));
  const auto& rule = gauss_legendre(32);
  const double panel_width = upper / panels;
  nodes_.reserve(static_cast<std::size_t>(panels) * rule.nodes.size());
  weighted_values_.reserve(nodes_.capacity());
  for (int k = 0; k < panels; ++k) {
    const double mid = (k + 0.5) * panel_width;
    const double half = 0.5 * panel_width;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double x = mid + half * rule.nodes[i];
      nodes_.push_back(x);
      weighted_values_.push_back(half * rule.weights[i] * state(x));
    }
  }
}

std::complex<double> MomentumWavefunction::operator()(double p) const {
  if (std::abs(p) > max_momentum_)
    throw std::invalid_argument("momentum_wavefunction: momentum beyond resolved bandwidth");
  const double factor = std::sqrt(2.0 / std::numbers::pi);
  double sum = 0.0;
  if (parity_ == Parity::even) {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      sum += weighted_values_[i] * std::cos(p * nodes_[i]);
    return {factor * sum, 0.0};
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    sum += weighted_values_[i] * std::sin(p * nodes_[i]);
  return {0.0, -factor * sum};
}

double MomentumWavefunction::density(double p) const { return std::norm((*this)(p)); }

MomentumWavefunction momentum_wavefunction(const Wavefunction& state, double max_momentum) {
  return MomentumWavefunction(state, max_momentum);
}

}  // namespace sextic
