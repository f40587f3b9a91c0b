#include "parreg/module.hpp"

#include "parreg/errors.hpp"

namespace parreg {

ModuleDescriptor::ModuleDescriptor(FPAbelianGroup group, std::vector<IntMatrix> actions)
    : group_(std::move(group)),
      actions_(std::move(actions)),
      relation_hnf_(hermite_row_basis(group_.relations)) {}

ModuleDescriptor ModuleDescriptor::self_module(const RingDescriptor& ring) {
  AdditivePresentation pres = ring.additive_presentation();
  ModuleDescriptor m(pres.group, pres.actions);
  validate_module(ring, m.group_, m.actions_);
  return m;
}

ModuleDescriptor ModuleDescriptor::free_module(const RingDescriptor& ring, std::size_t rank) {
  AdditivePresentation pres = ring.additive_presentation();
  FPAbelianGroup group{pres.group.generator_count * rank,
                       IntMatrix::block_diagonal(pres.group.relations, rank)};
  // relations of a 0-rank or relation-free base need explicit width
  if (group.relations.cols() != group.generator_count)
    group.relations = IntMatrix(0, group.generator_count);
  std::vector<IntMatrix> actions;
  for (const auto& a : pres.actions) actions.push_back(IntMatrix::block_diagonal(a, rank));
  ModuleDescriptor m(std::move(group), std::move(actions));
  validate_module(ring, m.group_, m.actions_);
  return m;
}

ModuleDescriptor ModuleDescriptor::explicit_module(const RingDescriptor& ring,
                                                   const IntVector& generator_orders,
                                                   std::vector<IntMatrix> actions) {
  const std::size_t k = generator_orders.size();
  std::size_t finite = 0;
  for (const auto& o : generator_orders) {
    if (o < 0) throw InvalidModule("generator orders must be nonnegative");
    if (o != 0) ++finite;
  }
  IntMatrix rel(finite, k);
  std::size_t r = 0;
  for (std::size_t j = 0; j < k; ++j)
    if (generator_orders[j] != 0) {
      rel.at(r, j) = generator_orders[j];
      ++r;
    }
  FPAbelianGroup group{k, rel};
  validate_module(ring, group, actions);
  return ModuleDescriptor(std::move(group), std::move(actions));
}

IntVector ModuleDescriptor::reduce(IntVector coords) const {
  return reduce_mod_lattice(relation_hnf_, std::move(coords));
}

bool ModuleDescriptor::is_zero(const IntVector& coords) const {
  return is_zero_vector(reduce(coords));
}

IntVector ModuleDescriptor::add(const IntVector& a, const IntVector& b) const {
  IntVector out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return reduce(std::move(out));
}

IntMatrix ModuleDescriptor::action_matrix(const IntVector& ring_coords) const {
  if (ring_coords.size() != actions_.size())
    throw InternalError("action_matrix: ring coordinate count mismatch");
  const std::size_t k = generator_count();
  IntMatrix total(k, k);
  for (std::size_t g = 0; g < actions_.size(); ++g) {
    if (ring_coords[g] == 0) continue;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        total.at(i, j) += ring_coords[g] * actions_[g].at(i, j);
  }
  return total;
}

std::optional<Int> ModuleDescriptor::order() const {
  const std::size_t k = generator_count();
  const IntMatrix& h = relation_hnf_;
  if (h.rows() < k) return std::nullopt;
  Int total = 1;
  for (std::size_t j = 0; j < k; ++j) {
    if (h.at(j, j) == 0) return std::nullopt;
    total *= h.at(j, j);
  }
  return total;
}

std::vector<IntVector> ModuleDescriptor::elements(const std::optional<Int>& cap) const {
  auto total = order();
  if (!total) throw InfiniteModule("module has infinitely many elements");
  if (cap && *total > *cap)
    throw ModuleTooLarge("module order " + total->get_str() + " exceeds cap " + cap->get_str());

  // full-rank Hermite basis is upper triangular, so the canonical
  // representatives are exactly the box below its diagonal
  const std::size_t k = generator_count();
  std::vector<IntVector> out;
  IntVector current(k);
  for (;;) {
    out.push_back(current);
    std::size_t pos = k;
    while (pos > 0) {
      if (++current[pos - 1] < relation_hnf_.at(pos - 1, pos - 1)) break;
      current[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }
  return out;
}

IntVector element_action(const RingDescriptor& ring, const ModuleDescriptor& m,
                         const RingElement& r, const IntVector& t) {
  const IntVector coords = ring.element_coords(ring.normalize(r));
  return m.reduce(m.action_matrix(coords).apply(t));
}

void validate_module(const RingDescriptor& ring, const FPAbelianGroup& group,
                     const std::vector<IntMatrix>& actions) {
  const AdditivePresentation ring_pres = ring.additive_presentation();
  const std::size_t k = group.generator_count;
  if (actions.size() != ring_pres.group.generator_count)
    throw InvalidModule("need one action matrix per ring additive generator");
  for (const auto& a : actions)
    if (a.rows() != k || a.cols() != k)
      throw InvalidModule("action matrices must be square of generator size");

  const IntMatrix hnf = hermite_row_basis(group.relations);
  auto in_lattice = [&](const IntVector& v) { return lattice_contains(hnf, v); };

  // actions preserve the relation lattice
  for (const auto& a : actions)
    for (std::size_t r = 0; r < group.relations.rows(); ++r)
      if (!in_lattice(a.apply(group.relations.row(r))))
        throw InvalidModule("action does not preserve the relation lattice");

  auto combine = [&](const IntVector& ring_coords) {
    IntMatrix total(k, k);
    for (std::size_t g = 0; g < actions.size(); ++g)
      if (ring_coords[g] != 0)
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            total.at(i, j) += ring_coords[g] * actions[g].at(i, j);
    return total;
  };

  // the ring's own additive relations act as zero (e.g. n * anything in Z_n)
  for (std::size_t r = 0; r < ring_pres.group.relations.rows(); ++r) {
    IntMatrix zero_action = combine(ring_pres.group.relations.row(r));
    for (std::size_t j = 0; j < k; ++j)
      if (!in_lattice(zero_action.col(j)))
        throw InvalidModule("a ring relation does not act as zero");
  }

  // 1 acts as the identity on the quotient
  const IntVector one_coords = ring.element_coords(ring.one());
  IntMatrix one_action = combine(one_coords);
  for (std::size_t j = 0; j < k; ++j) {
    IntVector diff = one_action.col(j);
    diff[j] -= 1;
    if (!in_lattice(diff)) throw InvalidModule("1 does not act as the identity");
  }

  // generator actions compose like ring multiplication
  for (std::size_t gi = 0; gi < actions.size(); ++gi)
    for (std::size_t gj = 0; gj < actions.size(); ++gj) {
      const RingElement prod =
          ring.mul(ring_pres.generators[gi], ring_pres.generators[gj]);
      IntMatrix lhs = actions[gi] * actions[gj];
      IntMatrix rhs = combine(ring.element_coords(prod));
      for (std::size_t j = 0; j < k; ++j) {
        IntVector diff(k);
        for (std::size_t i = 0; i < k; ++i) diff[i] = lhs.at(i, j) - rhs.at(i, j);
        if (!in_lattice(diff))
          throw InvalidModule("generator actions are incompatible with ring multiplication");
      }
    }
}

}  // namespace parreg
