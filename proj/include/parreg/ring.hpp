#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "parreg/abelian.hpp"
#include "parreg/int_matrix.hpp"

namespace parreg {

class RingDescriptor;

/// Canonical element of a supported ring. The payload mirrors the ring kind:
/// a single integer (integers / cyclic residue), a coefficient vector
/// low-to-high (polynomial quotient), or a tuple of factor elements.
class RingElement {
public:
  RingElement() : value_(Int(0)) {}
  explicit RingElement(Int n) : value_(std::move(n)) {}
  explicit RingElement(IntVector coeffs) : value_(std::move(coeffs)) {}
  explicit RingElement(std::vector<RingElement> parts) : value_(std::move(parts)) {}

  bool holds_scalar() const { return std::holds_alternative<Int>(value_); }
  bool holds_coeffs() const { return std::holds_alternative<IntVector>(value_); }
  bool holds_tuple() const { return std::holds_alternative<std::vector<RingElement>>(value_); }

  const Int& scalar() const { return std::get<Int>(value_); }
  const IntVector& coeffs() const { return std::get<IntVector>(value_); }
  const std::vector<RingElement>& tuple() const { return std::get<std::vector<RingElement>>(value_); }

  bool operator==(const RingElement& other) const;
  bool operator!=(const RingElement& other) const { return !(*this == other); }

private:
  std::variant<Int, IntVector, std::vector<RingElement>> value_;
};

/// Additive-group view of a ring: a Z-presentation of (R, +) together with
/// one action matrix per additive generator (left multiplication by that
/// generator) and the generators themselves as ring elements.
struct AdditivePresentation {
  FPAbelianGroup group;
  std::vector<IntMatrix> actions;
  std::vector<RingElement> generators;
};

/// Descriptor of a supported commutative ring with 1: the integers, a cyclic
/// ring Z_n, a quotient of a polynomial ring over Z or Z_n by a monic
/// polynomial, or a finite product of such rings.
class RingDescriptor {
public:
  struct Integers {};
  struct Cyclic {
    Int modulus;  // >= 2
  };
  struct PolyQuotient {
    std::optional<Int> base_modulus;  // nullopt: base Z; otherwise base Z_n
    IntVector modulus_poly;           // low-to-high, monic, degree >= 1
  };
  struct Product {
    std::vector<RingDescriptor> factors;  // nonempty
  };

  static RingDescriptor integers();
  static RingDescriptor cyclic(Int modulus);
  static RingDescriptor poly_quotient(std::optional<Int> base_modulus, IntVector modulus_poly);
  static RingDescriptor product(std::vector<RingDescriptor> factors);

  bool is_integers() const { return std::holds_alternative<Integers>(kind_); }
  bool is_cyclic() const { return std::holds_alternative<Cyclic>(kind_); }
  bool is_poly_quotient() const { return std::holds_alternative<PolyQuotient>(kind_); }
  bool is_product() const { return std::holds_alternative<Product>(kind_); }

  const Cyclic& cyclic_kind() const { return std::get<Cyclic>(kind_); }
  const PolyQuotient& poly_kind() const { return std::get<PolyQuotient>(kind_); }
  const Product& product_kind() const { return std::get<Product>(kind_); }

  /// Canonical form of an element given in raw shape-compatible data.
  /// Idempotent. Throws MalformedElement on wrong arity or payload kind.
  RingElement normalize(const RingElement& raw) const;

  RingElement zero() const;
  RingElement one() const;
  RingElement add(const RingElement& a, const RingElement& b) const;
  RingElement neg(const RingElement& a) const;
  RingElement sub(const RingElement& a, const RingElement& b) const;
  RingElement mul(const RingElement& a, const RingElement& b) const;
  bool is_zero(const RingElement& a) const;

  /// Number of elements; nullopt when infinite.
  std::optional<Int> cardinality() const;

  /// All elements of a finite ring, each exactly once, in the canonical
  /// deterministic order. Throws InfiniteRing otherwise.
  std::vector<RingElement> enumerate() const;

  /// Z-presentation of (R, +) with one multiplication-action matrix per
  /// additive generator.
  AdditivePresentation additive_presentation() const;

  std::size_t additive_generator_count() const;

  /// Coordinates of a canonical element in the additive generators.
  IntVector element_coords(const RingElement& e) const;
  /// Inverse of element_coords (normalizes the result).
  RingElement element_from_coords(const IntVector& coords) const;

  /// Compact human-readable rendering ("4", "1+x", "(1,0)").
  std::string render(const RingElement& e) const;

  bool operator==(const RingDescriptor& other) const;
  bool operator!=(const RingDescriptor& other) const { return !(*this == other); }

private:
  std::variant<Integers, Cyclic, PolyQuotient, Product> kind_;
};

}  // namespace parreg
