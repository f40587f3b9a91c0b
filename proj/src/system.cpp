#include "parreg/system.hpp"

#include <sstream>

#include "parreg/errors.hpp"

namespace parreg {

bool SystemInstance::rhs_is_zero() const {
  for (const auto& b : rhs)
    if (!module.is_zero(b)) return false;
  return true;
}

void SystemInstance::check_shape() const {
  if (rhs.size() != coefficients.size())
    throw InternalError("system: right-hand side length differs from row count");
  const std::size_t n = column_count();
  for (const auto& row : coefficients)
    if (row.size() != n) throw InternalError("system: ragged coefficient rows");
  for (const auto& b : rhs)
    if (b.size() != module.generator_count())
      throw InternalError("system: rhs coordinate width mismatch");
}

SystemInstance make_system(RingDescriptor ring,
                           std::vector<std::vector<RingElement>> coefficients,
                           std::vector<IntVector> rhs) {
  ModuleDescriptor module = ModuleDescriptor::self_module(ring);
  return make_system(std::move(ring), std::move(module), std::move(coefficients),
                     std::move(rhs));
}

SystemInstance make_system(RingDescriptor ring, ModuleDescriptor module,
                           std::vector<std::vector<RingElement>> coefficients,
                           std::vector<IntVector> rhs) {
  SystemInstance sys{std::move(ring), std::move(module), {}, {}};
  for (auto& row : coefficients) {
    std::vector<RingElement> canonical;
    canonical.reserve(row.size());
    for (auto& e : row) canonical.push_back(sys.ring.normalize(e));
    sys.coefficients.push_back(std::move(canonical));
  }
  for (auto& b : rhs) sys.rhs.push_back(sys.module.reduce(std::move(b)));
  sys.check_shape();
  return sys;
}

bool module_is_self(const SystemInstance& sys) {
  const AdditivePresentation pres = sys.ring.additive_presentation();
  return pres.group.generator_count == sys.module.generator_count() &&
         hermite_row_basis(pres.group.relations) == sys.module.relation_basis() &&
         pres.actions == sys.module.actions();
}

std::string render_module_element(const SystemInstance& sys, const IntVector& coords) {
  if (module_is_self(sys)) return sys.ring.render(sys.ring.element_from_coords(coords));
  if (coords.size() == 1) return coords[0].get_str();
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out << ",";
    out << coords[i].get_str();
  }
  out << ")";
  return out.str();
}

}  // namespace parreg
