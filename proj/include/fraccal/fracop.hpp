#ifndef FRACCAL_FRACOP_HPP
#define FRACCAL_FRACOP_HPP

#include <Eigen/Core>
#include <vector>

#include "fraccal/grid.hpp"

namespace fraccal {

// Dense symmetric Toeplitz realization of the 1D fractional Laplacian on the
// truncated grid, built from fractional centered-difference weights. Entries
// are L(i,j) = g_|i-j| / h^(2s); functions are treated as exactly zero beyond
// the truncation, which keeps the operator square.
struct FracOperator {
  const Grid* grid = nullptr;
  double s = 0.5;
  std::vector<double> weights;  // g_0 .. g_{n_cells-1}
  Eigen::MatrixXd matrix;       // n_cells x n_cells
};

// Fractional centered-difference weights g_0..g_{count-1} for order 2s:
// g_k = (-1)^k Gamma(2s+1) / (Gamma(s-k+1) Gamma(s+k+1)), evaluated through
// g_0 = Gamma(2s+1)/Gamma(s+1)^2 and the stable recurrence
// g_{k+1} = g_k (k-s)/(k+1+s). Their symbol is sum_k g_k e^{ik t} =
// (2-2cos t)^s, so g_0 > 0 and g_k < 0 for k >= 1.
std::vector<double> centered_weights(double s, int count);

// The closed-form constant c_{n,s} = Gamma(n/2+s) 4^s / (|Gamma(-s)| pi^(n/2))
// of the singular-integral definition. Not baked into the matrix (the
// centered weights already reproduce the symbol |xi|^(2s)); exposed for
// quadrature cross-checks.
double normalization_constant(int n, double s);

FracOperator assemble(const Grid& grid, double s);

// Matrix-vector product L u as a grid function.
GridFunction apply(const FracOperator& op, const GridFunction& u);

}  // namespace fraccal

#endif
