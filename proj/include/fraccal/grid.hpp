#ifndef FRACCAL_GRID_HPP
#define FRACCAL_GRID_HPP

#include <Eigen/Core>
#include <vector>

#include "fraccal/errors.hpp"

namespace fraccal {

// Uniform cell-centered grid on the truncated line [a-collar, b+collar].
// Cells whose center lies strictly inside (a,b) are interior; the rest form
// the exterior collar. Functions are implicitly zero beyond the truncation.
// Immutable after construction; safe to share across threads.
struct Grid {
  double a = 0.0;
  double b = 1.0;
  double collar = 1.0;
  int n_cells = 0;
  double h = 0.0;
  std::vector<double> centers;
  std::vector<int> interior_idx;
  std::vector<int> exterior_idx;

  int interior_count() const { return static_cast<int>(interior_idx.size()); }
  int exterior_count() const { return static_cast<int>(exterior_idx.size()); }
  bool is_interior(int j) const;
};

// Grids compare by geometry, not identity, so functions read back from disk
// pair with freshly built grids.
bool same_grid(const Grid& g1, const Grid& g2);

// Cell-center samples over the full truncated domain.
struct GridFunction {
  const Grid* grid = nullptr;
  Eigen::VectorXd values;  // one entry per cell

  GridFunction() = default;
  explicit GridFunction(const Grid& g)
      : grid(&g), values(Eigen::VectorXd::Zero(g.n_cells)) {}
  GridFunction(const Grid& g, Eigen::VectorXd v);
};

// Grid function supported on exterior cells only (interior entries zero);
// the discrete stand-in for compactly supported exterior data.
struct ExteriorData {
  const Grid* grid = nullptr;
  Eigen::VectorXd values;  // full length, interior entries zero

  ExteriorData() = default;
  explicit ExteriorData(const Grid& g)
      : grid(&g), values(Eigen::VectorXd::Zero(g.n_cells)) {}
  // Validates the support pattern.
  ExteriorData(const Grid& g, Eigen::VectorXd v);

  GridFunction as_grid_function() const { return GridFunction(*grid, values); }
};

Grid build_grid(double a, double b, double collar, int n_cells);

// Midpoint quadrature h * sum over the subset of cell indices.
double integrate(const GridFunction& f, const std::vector<int>& subset);

// Discrete L2(subset) inner product h * sum f_j * g_j.
double pairing(const GridFunction& f, const GridFunction& g,
               const std::vector<int>& subset);

// Discrete duality pairing over exterior cells, h * sum_ext f_j * h_j.
double exterior_pairing(const ExteriorData& f, const ExteriorData& h);

// Discrete L^p norm (h * sum |f_j|^p)^(1/p) over a cell subset.
double lp_norm(const GridFunction& f, double p, const std::vector<int>& subset);

}  // namespace fraccal

#endif
