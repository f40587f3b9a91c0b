#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "parreg/abelian.hpp"
#include "parreg/system.hpp"

namespace parreg {

/// Machine-checkable refutation of partition regularity. The covector u
/// encodes a homomorphism from the additive group of M^m onto Z_d that kills
/// every value the column sum reaches on constant vectors but not b; the
/// column covectors are u precomposed with the action of each coefficient
/// column, and induce the blocking colouring t -> (u_1*t, ..., u_n*t) mod d.
struct WitnessCertificate {
  IntVector functional;                   // u, over the Z-generators of M^m
  Int modulus;                            // d >= 2
  std::vector<IntVector> column_covectors;  // u_i, over the Z-generators of M
  std::size_t column_count = 0;           // n
  std::string system_digest;
};

struct PartitionRegular {
  IntVector constant_solution;  // module element r with s*r = b
};

struct NotPartitionRegular {
  WitnessCertificate certificate;
};

using Verdict = std::variant<PartitionRegular, NotPartitionRegular>;

/// Sum of the coefficient columns, one ring element per equation.
std::vector<RingElement> column_sum(const SystemInstance& sys);

/// Module element r with s_j * r = b_j for every equation, when one exists.
std::optional<IntVector> find_constant_solution(const SystemInstance& sys);

/// Generators of the subgroup of M^m swept out by the column sum acting on
/// constant elements: one row per module generator w, the row being
/// (s_1*w, ..., s_m*w) in stacked coordinates.
IntMatrix constant_reach_generators(const SystemInstance& sys);

/// Decide partition regularity. Either a constant solution exists (and the
/// system is partition regular) or a witness certificate is synthesized and
/// self-checked. Throws DegenerateSystem when b = 0.
Verdict decide(const SystemInstance& sys);

/// Colour tuple of one module element under the certificate's colouring:
/// component i is u_i * coords(t) mod d, a residue in [0, d).
std::vector<Int> colour(const WitnessCertificate& cert, const IntVector& t);

/// One named congruence check of a certificate against a system.
struct NamedCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The certificate congruence families: u kills the relation rows of M^m and
/// the constant-reach generators mod d, separates b, the column covectors sum
/// to zero mod d and match recomputation from u and the action matrices.
/// Purely algebraic; no search.
std::vector<NamedCheck> certificate_checks(const SystemInstance& sys,
                                           const WitnessCertificate& cert);

/// Stacked coordinates of the right-hand side in M^m.
IntVector stacked_rhs(const SystemInstance& sys);

/// Block-diagonal presentation of M^m.
FPAbelianGroup power_presentation(const ModuleDescriptor& m, std::size_t copies);

}  // namespace parreg
