#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "parreg/system.hpp"
#include "parreg/witness.hpp"

namespace parreg {

/// Set partition in restricted-growth form: digit i is the class of the
/// i-th enumerated element; first digit 0, each digit at most one more than
/// the maximum before it.
struct SetPartition {
  std::vector<int> rgs;

  std::size_t class_count() const;
  std::vector<std::vector<std::size_t>> classes() const;
  bool operator==(const SetPartition& other) const { return rgs == other.rgs; }
};

/// Lexicographic generator of all restricted-growth strings of length q.
class PartitionEnumerator {
public:
  explicit PartitionEnumerator(std::size_t q);
  /// False once all Bell(q) partitions have been produced.
  bool next(SetPartition& out);

private:
  std::size_t q_;
  std::vector<int> rgs_;
  bool first_ = true;
  bool done_ = false;
};

/// Search budget for certificate verification: a coordinate box for systems
/// over Z, or exhaustive enumeration for finite modules.
struct BoxBudget {
  long radius = 25;
};
struct ExhaustiveBudget {};
using VerifyBudget = std::variant<BoxBudget, ExhaustiveBudget>;

struct CheckReport {
  std::vector<NamedCheck> algebraic_checks;
  std::string search_budget;
  std::uint64_t solutions_examined = 0;
  std::optional<std::vector<IntVector>> monochromatic_found;
  bool passed = false;
};

/// All solutions x in [-radius, radius]^n of A*x = b for systems over Z with
/// M = Z, in lexicographic order.
std::vector<IntVector> solutions_in_box(const SystemInstance& sys, long radius);

/// All solutions over a finite module, as vectors of canonical coordinates.
/// Throws InfiniteModule otherwise.
std::vector<std::vector<IntVector>> solutions_finite(const SystemInstance& sys);

/// Runs the algebraic certificate checks, then enumerates solutions under
/// the budget and confirms none is monochromatic. Throws DigestMismatch when
/// the certificate names a different system.
CheckReport verify_certificate(const SystemInstance& sys, const WitnessCertificate& cert,
                               const VerifyBudget& budget);

struct ExhaustiveResult {
  bool is_partition_regular = false;
  std::optional<SetPartition> blocking_partition;
};

/// Ground-truth decision by enumerating every partition of a finite module:
/// partition regular iff every partition has a class containing a solution.
/// Returns the first blocking partition in enumeration order otherwise.
ExhaustiveResult exhaustive_pr(const SystemInstance& sys, const Int& cap = 8);

struct Discrepancy {
  std::size_t index = 0;
  bool exhaustive_says_pr = false;
  bool constant_solution_exists = false;
  std::optional<SetPartition> blocking_partition;
  std::optional<IntVector> constant_solution;
};

struct CrossValidationReport {
  std::size_t systems = 0;
  std::size_t partition_regular = 0;
  std::size_t not_partition_regular = 0;
  std::vector<Discrepancy> discrepancies;
};

/// Checks exhaustive_pr against the constant-solution criterion on every
/// system of a catalog. Any discrepancy is a bug in one of the two paths.
CrossValidationReport cross_validate(const std::vector<SystemInstance>& catalog,
                                     const Int& cap = 8);

/// Module elements of a finite module with deterministic indexing.
class FiniteModuleIndex {
public:
  FiniteModuleIndex(const ModuleDescriptor& m, const std::optional<Int>& cap);

  std::size_t size() const { return elements_.size(); }
  const IntVector& coords(std::size_t i) const { return elements_[i]; }
  std::size_t index_of(const IntVector& canonical) const;

private:
  std::vector<IntVector> elements_;
  IntVector box_;       // diagonal of the Hermite basis
  std::size_t gens_ = 0;
};

}  // namespace parreg
