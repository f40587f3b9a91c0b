#pragma once

#include <string>
#include <vector>

#include "parreg/module.hpp"
#include "parreg/ring.hpp"

namespace parreg {

/// One inhomogeneous linear system A*x = b: an m x n matrix of ring elements
/// and a right-hand side of m module elements (canonical coordinates).
struct SystemInstance {
  RingDescriptor ring;
  ModuleDescriptor module;
  std::vector<std::vector<RingElement>> coefficients;  // m rows of n entries
  std::vector<IntVector> rhs;                          // m module elements

  std::size_t equation_count() const { return coefficients.size(); }
  std::size_t column_count() const {
    return coefficients.empty() ? 0 : coefficients.front().size();
  }
  bool rhs_is_zero() const;

  /// Throws InternalError when dimensions are inconsistent.
  void check_shape() const;
};

SystemInstance make_system(RingDescriptor ring,
                           std::vector<std::vector<RingElement>> coefficients,
                           std::vector<IntVector> rhs);

SystemInstance make_system(RingDescriptor ring, ModuleDescriptor module,
                           std::vector<std::vector<RingElement>> coefficients,
                           std::vector<IntVector> rhs);

/// Human-readable label of a module element ("3", "1+x", "(2,1)").
std::string render_module_element(const SystemInstance& sys, const IntVector& coords);

/// True when the module is the ring acting on itself.
bool module_is_self(const SystemInstance& sys);

}  // namespace parreg
