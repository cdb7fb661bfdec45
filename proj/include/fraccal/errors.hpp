#ifndef FRACCAL_ERRORS_HPP
#define FRACCAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fraccal {

// Invalid domain geometry or grid construction parameters.
struct invalid_geometry : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Two objects built on different grids were combined.
struct grid_mismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A fixed-point solve failed to reach tolerance within max_iter.
struct convergence_error : std::runtime_error {
  convergence_error(const std::string& what, int iterations_, double residual_)
      : std::runtime_error(what), iterations(iterations_), residual(residual_) {}
  int iterations;
  double residual;
};

// A linear system that should be regular turned out singular.
struct singular_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fraccal

#endif
