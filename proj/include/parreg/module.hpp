#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parreg/abelian.hpp"
#include "parreg/ring.hpp"

namespace parreg {

/// An R-module presented as a finitely presented abelian group plus one
/// action matrix per additive generator of the ring. Elements are canonical
/// generator-coordinate vectors (reduced modulo the relation lattice).
class ModuleDescriptor {
public:
  /// R acting on itself.
  static ModuleDescriptor self_module(const RingDescriptor& ring);
  /// Free module R^rank.
  static ModuleDescriptor free_module(const RingDescriptor& ring, std::size_t rank);
  /// Abelian group with the given generator orders (0 = infinite) and
  /// explicit action matrices, one per ring additive generator. Validates
  /// the action data and throws InvalidModule on failure.
  static ModuleDescriptor explicit_module(const RingDescriptor& ring,
                                          const IntVector& generator_orders,
                                          std::vector<IntMatrix> actions);

  const FPAbelianGroup& additive_group() const { return group_; }
  const std::vector<IntMatrix>& actions() const { return actions_; }
  const IntMatrix& relation_basis() const { return relation_hnf_; }
  std::size_t generator_count() const { return group_.generator_count; }

  /// Canonical representative of a coordinate vector.
  IntVector reduce(IntVector coords) const;
  bool is_zero(const IntVector& coords) const;
  IntVector zero() const { return IntVector(generator_count()); }
  IntVector add(const IntVector& a, const IntVector& b) const;

  /// Action matrix of the ring element with the given additive coordinates.
  IntMatrix action_matrix(const IntVector& ring_coords) const;

  std::optional<Int> order() const;
  bool is_finite() const { return order().has_value(); }

  /// All canonical coordinate vectors of a finite module in lexicographic
  /// order. Throws InfiniteModule; throws ModuleTooLarge when a cap is given
  /// and exceeded.
  std::vector<IntVector> elements(const std::optional<Int>& cap = std::nullopt) const;

private:
  ModuleDescriptor(FPAbelianGroup group, std::vector<IntMatrix> actions);

  FPAbelianGroup group_;
  std::vector<IntMatrix> actions_;
  IntMatrix relation_hnf_;
};

/// r * t for a ring element r and module element t (canonical coordinates).
IntVector element_action(const RingDescriptor& ring, const ModuleDescriptor& m,
                         const RingElement& r, const IntVector& t);

/// Raises InvalidModule unless the action matrices define a genuine module
/// structure: they preserve the relation lattice, kill the ring's additive
/// relations, act as the identity for 1, and compose compatibly with ring
/// multiplication on generators.
void validate_module(const RingDescriptor& ring, const FPAbelianGroup& group,
                     const std::vector<IntMatrix>& actions);

}  // namespace parreg
