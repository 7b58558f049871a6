#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace sextic {

/// Nodes and weights of an n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Returns the n-point rule; rules are computed once and cached.
const GaussLegendreRule& gauss_legendre(int n);

/// Integrates f over [a, b] with a single n-point Gauss-Legendre panel.
double gauss_panel(const std::function<double(double)>& f, double a, double b, int n = 32);

/// Integrates f over [a, b] split into `panels` equal Gauss-Legendre panels.
double composite_gauss(const std::function<double(double)>& f, double a, double b,
                       int panels, int nodes_per_panel = 32);

/// Trapezoid weights for a uniform grid of `count` nodes spaced `step` apart.
std::vector<double> trapezoid_weights(std::size_t count, double step);

/// Trapezoid integral of uniformly sampled values.
double trapezoid(std::span<const double> values, double step);

}  // namespace sextic
