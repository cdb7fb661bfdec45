#ifndef FRACCAL_POTENTIAL_HPP
#define FRACCAL_POTENTIAL_HPP

#include <Eigen/Core>

#include "fraccal/grid.hpp"

namespace fraccal {

// Potential q on interior cells together with the nonlinearity exponent m of
// q u^m. Values on exterior cells have no meaning (the equation holds in the
// interior only).
struct Potential {
  const Grid* grid = nullptr;
  Eigen::VectorXd values;  // one entry per interior cell, in interior_idx order
  int m = 2;
  double bound = 0.0;  // cached sup-norm

  Potential() = default;
  Potential(const Grid& g, Eigen::VectorXd interior_values, int m_exponent);
};

// q identically zero on the interior.
Potential zero_potential(const Grid& g, int m_exponent);

// Embeds interior values into a full-length grid function (zero outside).
GridFunction to_grid_function(const Potential& q);

}  // namespace fraccal

#endif
