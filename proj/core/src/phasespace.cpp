#include "sextic/phasespace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sextic/errors.hpp"
#include "sextic/parallel.hpp"
#include "sextic/quadrature.hpp"

namespace sextic {

namespace {

constexpr double kKernelReach = 9.0;  // exp(-u^2/2) < 1e-17 beyond this offset

void validate(const GridSpec& spec) {
  if (spec.nx < 2 || spec.np < 2)
    throw std::invalid_argument("grid spec: node counts must be at least 2");
  if (!(spec.x_max > spec.x_min) || !(spec.p_max > spec.p_min))
    throw std::invalid_argument("grid spec: extent must be positive");
}

bool symmetric_box(const GridSpec& spec) {
  const double sx = spec.x_max - spec.x_min;
  const double sp = spec.p_max - spec.p_min;
  return std::abs(spec.x_min + spec.x_max) < 1e-14 * sx &&
         std::abs(spec.p_min + spec.p_max) < 1e-14 * sp;
}

}  // namespace

std::string to_string(GridKind kind) {
  switch (kind) {
    case GridKind::wigner: return "wigner";
    case GridKind::abs_wigner: return "abswigner";
    case GridKind::husimi: return "husimi";
  }
  return "unknown";
}

PhaseGrid::PhaseGrid(const GridSpec& spec, GridKind kind) : spec_(spec), kind_(kind) {
  validate(spec);
  values_.assign(static_cast<std::size_t>(spec.nx) * spec.np, 0.0);
}

double PhaseGrid::integral() const {
  const auto wp = trapezoid_weights(spec_.np, dp());
  double sum = 0.0;
  for (int i = 0; i < spec_.nx; ++i) {
    double row = 0.0;
    for (int j = 0; j < spec_.np; ++j) row += wp[j] * at(i, j);
    sum += (i == 0 || i == spec_.nx - 1) ? 0.5 * row : row;
  }
  return sum * dx();
}

double PhaseGrid::min_value() const { return *std::min_element(values_.begin(), values_.end()); }
double PhaseGrid::max_value() const { return *std::max_element(values_.begin(), values_.end()); }

double wigner_value(const Wavefunction& state, double x, double p) {
  const double y_max = state.decay_scale() + std::abs(x);
  const auto& rule = gauss_legendre(32);
  const double target_width = std::numbers::pi / (2.0 * std::abs(p) + 1.0);
  const int panels = std::max(1, static_cast<int>(std::ceil(y_max / target_width)));
  const double width = y_max / panels;
  const double two_p = 2.0 * p;
  double sum = 0.0;
  for (int k = 0; k < panels; ++k) {
    const double mid = (k + 0.5) * width;
    const double half = 0.5 * width;
    double panel = 0.0;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const double y = mid + half * rule.nodes[q];
      panel += rule.weights[q] * state(x + y) * state(x - y) * std::cos(two_p * y);
    }
    sum += half * panel;
  }
  // even integrand in y: double the half-line integral, 1/pi prefactor
  return 2.0 * sum / std::numbers::pi;
}

double husimi_value(const Wavefunction& state, double x, double p) {
  const double upper = state.decay_scale();
  const double a = std::max(-upper, x - kKernelReach);
  const double b = std::min(upper, x + kKernelReach);
  if (!(b > a)) return 0.0;
  const auto& rule = gauss_legendre(32);
  const double target_width = 2.0 * std::numbers::pi / (std::abs(p) + 1.0);
  const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / target_width)));
  const double width = (b - a) / panels;
  double re = 0.0, im = 0.0;
  for (int k = 0; k < panels; ++k) {
    const double mid = a + (k + 0.5) * width;
    const double half = 0.5 * width;
    double pre = 0.0, pim = 0.0;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const double xp = mid + half * rule.nodes[q];
      const double dxs = xp - x;
      const double f = rule.weights[q] * state(xp) * std::exp(-0.5 * dxs * dxs);
      pre += f * std::cos(p * xp);
      pim -= f * std::sin(p * xp);
    }
    re += half * pre;
    im += half * pim;
  }
  constexpr double kernel_norm = 0.75112554446494245;  // pi^{-1/4}
  re *= kernel_norm;
  im *= kernel_norm;
  return (re * re + im * im) / (2.0 * std::numbers::pi);
}

namespace {

// Fills the grid from a single-cell evaluator, exploiting the exact parity
// identity Q(-x,-p) = Q(x,p) on symmetric boxes.
template <typename Cell>
PhaseGrid build_grid(const GridSpec& spec, GridKind kind, int threads, Cell cell) {
  PhaseGrid grid(spec, kind);
  const bool mirror = symmetric_box(spec);
  const int nx = spec.nx, np = spec.np;
  const int rows = mirror ? nx / 2 + nx % 2 : nx;
  parallel_for(rows, threads, [&](std::size_t r) {
    const int i = static_cast<int>(r);
    const bool center_row = mirror && 2 * i == nx - 1;
    const int cols = center_row ? np / 2 + np % 2 : np;
    for (int j = 0; j < cols; ++j) grid.at(i, j) = cell(grid.x_node(i), grid.p_node(j));
  });
  if (mirror) {
    for (int i = 0; i < rows; ++i) {
      const bool center_row = 2 * i == nx - 1;
      const int cols = center_row ? np / 2 + np % 2 : np;
      for (int j = 0; j < cols; ++j) grid.at(nx - 1 - i, np - 1 - j) = grid.at(i, j);
    }
  }
  return grid;
}

}  // namespace

PhaseGrid wigner_grid(const Wavefunction& state, const GridSpec& spec, int threads) {
  validate(spec);
  if (!state.normalized())
    throw std::invalid_argument("wigner_grid: state must be normalized");
  return build_grid(spec, GridKind::wigner, threads,
                    [&](double x, double p) { return wigner_value(state, x, p); });
}

PhaseGrid husimi_grid(const Wavefunction& state, const GridSpec& spec, int threads) {
  validate(spec);
  if (!state.normalized())
    throw std::invalid_argument("husimi_grid: state must be normalized");
  return build_grid(spec, GridKind::husimi, threads,
                    [&](double x, double p) { return husimi_value(state, x, p); });
}

PhaseGrid abs_wigner_grid(const PhaseGrid& wigner) {
  if (wigner.kind() != GridKind::wigner)
    throw std::invalid_argument("abs_wigner_grid: input must be a Wigner grid");
  PhaseGrid grid(wigner.spec(), GridKind::abs_wigner);
  for (int i = 0; i < grid.nx(); ++i)
    for (int j = 0; j < grid.np(); ++j) grid.at(i, j) = std::abs(wigner.at(i, j));
  const double total = grid.integral();
  if (!(total > 0.0))
    throw std::invalid_argument("abs_wigner_grid: degenerate all-zero input");
  for (int i = 0; i < grid.nx(); ++i)
    for (int j = 0; j < grid.np(); ++j) grid.at(i, j) /= total;
  return grid;
}

PhaseGrid husimi_by_smoothing(const PhaseGrid& wigner, const GridSpec& out_spec,
                              int threads, double margin) {
  if (wigner.kind() != GridKind::wigner)
    throw std::invalid_argument("husimi_by_smoothing: input must be a Wigner grid");
  validate(out_spec);
  const GridSpec& in = wigner.spec();
  if (in.x_min > out_spec.x_min - margin || in.x_max < out_spec.x_max + margin ||
      in.p_min > out_spec.p_min - margin || in.p_max < out_spec.p_max + margin)
    throw std::invalid_argument("husimi_by_smoothing: input domain margin is insufficient");

  const auto wx = trapezoid_weights(in.nx, wigner.dx());
  const auto wp = trapezoid_weights(in.np, wigner.dp());

  // separable pass 1: smear along p onto the output p-nodes
  PhaseGrid out(out_spec, GridKind::husimi);
  std::vector<double> partial(static_cast<std::size_t>(in.nx) * out_spec.np, 0.0);
  parallel_for(in.nx, threads, [&](std::size_t r) {
    const int i = static_cast<int>(r);
    for (int j = 0; j < out_spec.np; ++j) {
      const double p = out.p_node(j);
      double sum = 0.0;
      for (int q = 0; q < in.np; ++q) {
        const double d = p - wigner.p_node(q);
        if (std::abs(d) > 6.5) continue;
        sum += wp[q] * wigner.at(i, q) * std::exp(-d * d);
      }
      partial[r * out_spec.np + j] = sum;
    }
  });
  // separable pass 2: smear along x
  parallel_for(out_spec.nx, threads, [&](std::size_t r) {
    const int i = static_cast<int>(r);
    const double x = out.x_node(i);
    for (int j = 0; j < out_spec.np; ++j) {
      double sum = 0.0;
      for (int q = 0; q < in.nx; ++q) {
        const double d = x - wigner.x_node(q);
        if (std::abs(d) > 6.5) continue;
        sum += wx[q] * partial[static_cast<std::size_t>(q) * out_spec.np + j] * std::exp(-d * d);
      }
      out.at(i, j) = sum / std::numbers::pi;
    }
  });
  return out;
}

double negativity_volume(const PhaseGrid& wigner) {
  if (wigner.kind() != GridKind::wigner)
    throw std::invalid_argument("negativity_volume: input must be a Wigner grid");
  const auto wx = trapezoid_weights(wigner.nx(), wigner.dx());
  const auto wp = trapezoid_weights(wigner.np(), wigner.dp());
  double volume = 0.0;
  for (int i = 0; i < wigner.nx(); ++i)
    for (int j = 0; j < wigner.np(); ++j)
      if (wigner.at(i, j) < 0.0) volume += wx[i] * wp[j] * (-wigner.at(i, j));
  return volume;
}

}  // namespace sextic
