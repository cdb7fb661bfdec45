#include "fraccal/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fraccal {

bool Grid::is_interior(int j) const {
  return std::binary_search(interior_idx.begin(), interior_idx.end(), j);
}

bool same_grid(const Grid& g1, const Grid& g2) {
  return g1.a == g2.a && g1.b == g2.b && g1.collar == g2.collar &&
         g1.n_cells == g2.n_cells;
}

GridFunction::GridFunction(const Grid& g, Eigen::VectorXd v)
    : grid(&g), values(std::move(v)) {
  if (values.size() != g.n_cells)
    throw std::invalid_argument("GridFunction: value count != n_cells");
}

ExteriorData::ExteriorData(const Grid& g, Eigen::VectorXd v)
    : grid(&g), values(std::move(v)) {
  if (values.size() != g.n_cells)
    throw std::invalid_argument("ExteriorData: value count != n_cells");
  for (int j : g.interior_idx)
    if (values[j] != 0.0)
      throw std::invalid_argument(
          "ExteriorData: nonzero value on an interior cell");
}

Grid build_grid(double a, double b, double collar, int n_cells) {
  if (!(b > a)) throw invalid_geometry("build_grid: requires b > a");
  if (!(collar > 0.0)) throw invalid_geometry("build_grid: requires collar > 0");
  if (n_cells < 8) throw invalid_geometry("build_grid: requires n_cells >= 8");

  Grid g;
  g.a = a;
  g.b = b;
  g.collar = collar;
  g.n_cells = n_cells;
  g.h = (b - a + 2.0 * collar) / n_cells;
  g.centers.resize(n_cells);
  for (int j = 0; j < n_cells; ++j) {
    g.centers[j] = a - collar + (j + 0.5) * g.h;
    // strict membership; a center landing exactly on a or b counts exterior
    if (g.centers[j] > a && g.centers[j] < b)
      g.interior_idx.push_back(j);
    else
      g.exterior_idx.push_back(j);
  }
  if (g.interior_idx.empty())
    throw invalid_geometry("build_grid: no interior cells (grid too coarse)");
  if (g.exterior_idx.empty())
    throw invalid_geometry("build_grid: no exterior cells");
  return g;
}

double integrate(const GridFunction& f, const std::vector<int>& subset) {
  const Grid& g = *f.grid;
  double acc = 0.0;
  for (int j : subset) {
    if (j < 0 || j >= g.n_cells)
      throw std::out_of_range("integrate: cell index out of range");
    acc += f.values[j];
  }
  return g.h * acc;
}

double pairing(const GridFunction& f, const GridFunction& g,
               const std::vector<int>& subset) {
  if (!same_grid(*f.grid, *g.grid))
    throw grid_mismatch("pairing: functions live on different grids");
  const Grid& gr = *f.grid;
  double acc = 0.0;
  for (int j : subset) {
    if (j < 0 || j >= gr.n_cells)
      throw std::out_of_range("pairing: cell index out of range");
    acc += f.values[j] * g.values[j];
  }
  return gr.h * acc;
}

double exterior_pairing(const ExteriorData& f, const ExteriorData& h) {
  if (!same_grid(*f.grid, *h.grid))
    throw grid_mismatch("exterior_pairing: different grids");
  const Grid& g = *f.grid;
  double acc = 0.0;
  for (int j : g.exterior_idx) acc += f.values[j] * h.values[j];
  return g.h * acc;
}

double lp_norm(const GridFunction& f, double p, const std::vector<int>& subset) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: requires p >= 1");
  const Grid& g = *f.grid;
  double acc = 0.0;
  for (int j : subset) {
    if (j < 0 || j >= g.n_cells)
      throw std::out_of_range("lp_norm: cell index out of range");
    acc += std::pow(std::abs(f.values[j]), p);
  }
  return std::pow(g.h * acc, 1.0 / p);
}

}  // namespace fraccal
