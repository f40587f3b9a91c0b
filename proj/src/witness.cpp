#include "parreg/witness.hpp"

#include "parreg/diophantine.hpp"
#include "parreg/document.hpp"
#include "parreg/errors.hpp"

namespace parreg {

std::vector<RingElement> column_sum(const SystemInstance& sys) {
  std::vector<RingElement> s;
  s.reserve(sys.equation_count());
  for (const auto& row : sys.coefficients) {
    RingElement acc = sys.ring.zero();
    for (const auto& e : row) acc = sys.ring.add(acc, e);
    s.push_back(std::move(acc));
  }
  return s;
}

namespace {

// Action matrix of one ring element on the system's module.
IntMatrix action_of(const SystemInstance& sys, const RingElement& e) {
  return sys.module.action_matrix(sys.ring.element_coords(e));
}

}  // namespace

FPAbelianGroup power_presentation(const ModuleDescriptor& m, std::size_t copies) {
  IntMatrix rel = IntMatrix::block_diagonal(m.additive_group().relations, copies);
  const std::size_t gens = m.generator_count() * copies;
  if (rel.cols() != gens) rel = IntMatrix(0, gens);
  return FPAbelianGroup{gens, rel};
}

IntVector stacked_rhs(const SystemInstance& sys) {
  IntVector out;
  for (const auto& b : sys.rhs) out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::optional<IntVector> find_constant_solution(const SystemInstance& sys) {
  sys.check_shape();
  const std::size_t m = sys.equation_count();
  const std::size_t k = sys.module.generator_count();
  const IntMatrix& rel = sys.module.additive_group().relations;
  const std::size_t rho = rel.rows();
  const std::vector<RingElement> s = column_sum(sys);

  // stack the action matrices of the column sums over the unknown r, with
  // one block of relation columns per equation absorbing the lattice
  IntMatrix big(m * k, k + m * rho);
  for (std::size_t j = 0; j < m; ++j) {
    const IntMatrix sj = action_of(sys, s[j]);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t c = 0; c < k; ++c) big.at(j * k + i, c) = sj.at(i, c);
    for (std::size_t r = 0; r < rho; ++r)
      for (std::size_t i = 0; i < k; ++i)
        big.at(j * k + i, k + j * rho + r) = -rel.at(r, i);
  }
  const AffineSolution sol = solve_affine(big, stacked_rhs(sys));
  if (!sol.particular) return std::nullopt;

  IntVector r(sol.particular->begin(), sol.particular->begin() + k);
  r = sys.module.reduce(std::move(r));
  for (std::size_t j = 0; j < m; ++j)
    if (element_action(sys.ring, sys.module, s[j], r) != sys.rhs[j])
      throw InternalError("constant solution failed substitution check");
  return r;
}

IntMatrix constant_reach_generators(const SystemInstance& sys) {
  const std::size_t m = sys.equation_count();
  const std::size_t k = sys.module.generator_count();
  const std::vector<RingElement> s = column_sum(sys);

  IntMatrix gens(k, m * k);
  for (std::size_t j = 0; j < m; ++j) {
    const IntMatrix sj = action_of(sys, s[j]);
    for (std::size_t l = 0; l < k; ++l)      // generator w_l
      for (std::size_t i = 0; i < k; ++i)    // coordinates of s_j * w_l
        gens.at(l, j * k + i) = sj.at(i, l);
  }
  return gens;
}

std::vector<NamedCheck> certificate_checks(const SystemInstance& sys,
                                           const WitnessCertificate& cert) {
  std::vector<NamedCheck> checks;
  const std::size_t m = sys.equation_count();
  const std::size_t k = sys.module.generator_count();
  const std::size_t n = sys.column_count();
  const Int& d = cert.modulus;
  const IntVector& u = cert.functional;

  auto add_check = [&](std::string name, bool ok, std::string detail = "") {
    checks.push_back(NamedCheck{std::move(name), ok, std::move(detail)});
  };

  bool shape_ok = d >= 2 && u.size() == m * k && cert.column_count == n &&
                  cert.column_covectors.size() == n;
  for (const auto& ui : cert.column_covectors)
    if (ui.size() != k) shape_ok = false;
  add_check("certificate_shape", shape_ok);
  if (!shape_ok) return checks;

  // u kills the relation rows of M^m mod d
  const IntMatrix& rel = sys.module.additive_group().relations;
  bool rel_ok = true;
  for (std::size_t j = 0; j < m && rel_ok; ++j)
    for (std::size_t r = 0; r < rel.rows() && rel_ok; ++r) {
      Int acc = 0;
      for (std::size_t i = 0; i < k; ++i) acc += u[j * k + i] * rel.at(r, i);
      if (floor_mod(acc, d) != 0) rel_ok = false;
    }
  add_check("relations_annihilated", rel_ok);

  // u kills every value the column sum reaches on module generators
  const IntMatrix reach = constant_reach_generators(sys);
  bool reach_ok = true;
  for (std::size_t l = 0; l < reach.rows(); ++l)
    if (floor_mod(dot(u, reach.row(l)), d) != 0) reach_ok = false;
  add_check("constant_reach_annihilated", reach_ok);

  // u separates b
  const Int ub = floor_mod(dot(u, stacked_rhs(sys)), d);
  add_check("rhs_separated", ub != 0, "u*b = " + ub.get_str() + " (mod " + d.get_str() + ")");

  // column covectors sum to zero mod d
  bool sum_ok = true;
  for (std::size_t i = 0; i < k; ++i) {
    Int acc = 0;
    for (const auto& ui : cert.column_covectors) acc += ui[i];
    if (floor_mod(acc, d) != 0) sum_ok = false;
  }
  add_check("column_covectors_sum_zero", sum_ok);

  // stored covectors match recomputation from u and the column actions
  bool match_ok = true;
  for (std::size_t i = 0; i < n && match_ok; ++i) {
    IntVector recomputed(k);
    for (std::size_t j = 0; j < m; ++j) {
      const IntMatrix act = action_of(sys, sys.coefficients[j][i]);
      for (std::size_t c = 0; c < k; ++c)
        for (std::size_t rr = 0; rr < k; ++rr)
          recomputed[c] += u[j * k + rr] * act.at(rr, c);
    }
    for (std::size_t c = 0; c < k; ++c)
      if (floor_mod(recomputed[c] - cert.column_covectors[i][c], d) != 0) match_ok = false;
  }
  add_check("column_covectors_match_actions", match_ok);

  return checks;
}

Verdict decide(const SystemInstance& sys) {
  sys.check_shape();
  if (sys.rhs_is_zero())
    throw DegenerateSystem("right-hand side must be nonzero");

  if (auto r = find_constant_solution(sys)) return PartitionRegular{*r};

  const std::size_t m = sys.equation_count();
  const std::size_t k = sys.module.generator_count();
  const std::size_t n = sys.column_count();

  const FPAbelianGroup big = power_presentation(sys.module, m);
  const QuotientStructure q = quotient(big, constant_reach_generators(sys));

  IntVector b_factor = q.projection.apply(stacked_rhs(sys));
  for (std::size_t i = 0; i < q.factors.size(); ++i)
    if (q.factors[i] != 0) b_factor[i] = floor_mod(b_factor[i], q.factors[i]);

  SeparatingFunctional sep;
  try {
    sep = separating_functional(q, b_factor);
  } catch (const NotSeparable&) {
    // no constant solution means b avoids the reach subgroup, so some
    // factor must separate it
    throw InternalError("separating functional missing for unsolvable system");
  }

  WitnessCertificate cert;
  cert.modulus = sep.modulus;
  cert.functional.resize(m * k);
  for (std::size_t i = 0; i < m * k; ++i)
    cert.functional[i] = floor_mod(sep.functional[i], sep.modulus);
  cert.column_count = n;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector ui(k);
    for (std::size_t j = 0; j < m; ++j) {
      const IntMatrix act = action_of(sys, sys.coefficients[j][i]);
      for (std::size_t c = 0; c < k; ++c)
        for (std::size_t rr = 0; rr < k; ++rr)
          ui[c] += cert.functional[j * k + rr] * act.at(rr, c);
    }
    for (auto& x : ui) x = floor_mod(x, cert.modulus);
    cert.column_covectors.push_back(std::move(ui));
  }
  cert.system_digest = system_digest(sys);

  for (const auto& check : certificate_checks(sys, cert))
    if (!check.passed)
      throw InternalError("synthesized certificate failed check: " + check.name);
  return NotPartitionRegular{std::move(cert)};
}

std::vector<Int> colour(const WitnessCertificate& cert, const IntVector& t) {
  std::vector<Int> out;
  out.reserve(cert.column_covectors.size());
  for (const auto& ui : cert.column_covectors)
    out.push_back(floor_mod(dot(ui, t), cert.modulus));
  return out;
}

}  // namespace parreg
