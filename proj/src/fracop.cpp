#include "fraccal/fracop.hpp"

#include <cmath>
#include <stdexcept>

namespace fraccal {

std::vector<double> centered_weights(double s, int count) {
  if (!(s > 0.0 && s < 1.0))
    throw std::domain_error("centered_weights: requires 0 < s < 1");
  if (count < 1) throw std::invalid_argument("centered_weights: count >= 1");

  std::vector<double> g(count);
  // g_0 through log-Gamma; direct Gamma ratios overflow for large arguments
  g[0] = std::exp(std::lgamma(2.0 * s + 1.0) - 2.0 * std::lgamma(s + 1.0));
  for (int k = 0; k + 1 < count; ++k) g[k + 1] = g[k] * (k - s) / (k + 1 + s);
  return g;
}

double normalization_constant(int n, double s) {
  if (n < 1) throw std::domain_error("normalization_constant: requires n >= 1");
  if (!(s > 0.0 && s < 1.0))
    throw std::domain_error("normalization_constant: requires 0 < s < 1");
  const double pi = 3.14159265358979323846;
  // |Gamma(-s)| = Gamma(1-s)/s for 0 < s < 1
  const double abs_gamma_minus_s = std::tgamma(1.0 - s) / s;
  return std::tgamma(0.5 * n + s) * std::pow(4.0, s) /
         (abs_gamma_minus_s * std::pow(pi, 0.5 * n));
}

FracOperator assemble(const Grid& grid, double s) {
  FracOperator op;
  op.grid = &grid;
  op.s = s;
  op.weights = centered_weights(s, grid.n_cells);

  const int n = grid.n_cells;
  const double scale = std::pow(grid.h, -2.0 * s);
  op.matrix.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) op.matrix(i, j) = op.weights[std::abs(i - j)] * scale;
  return op;
}

GridFunction apply(const FracOperator& op, const GridFunction& u) {
  if (!same_grid(*op.grid, *u.grid))
    throw grid_mismatch("apply: operator and function grids differ");
  GridFunction out(*op.grid);
  out.values = op.matrix * u.values;
  return out;
}

}  // namespace fraccal
