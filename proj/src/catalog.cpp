#include "parreg/catalog.hpp"

namespace parreg {

std::vector<std::string> catalog_names() {
  return {"z2", "z3", "z4", "z5", "z6", "z7", "z8", "z9", "z2xz2", "z2xz3", "f4", "z2dual"};
}

std::optional<RingDescriptor> catalog_ring(const std::string& name) {
  if (name.size() >= 2 && name[0] == 'z' && name.find('x') == std::string::npos &&
      name.find("dual") == std::string::npos) {
    const std::string digits = name.substr(1);
    for (char c : digits)
      if (c < '0' || c > '9') return std::nullopt;
    Int n(digits);
    if (n < 2) return std::nullopt;
    return RingDescriptor::cyclic(n);
  }
  if (name == "z2xz2")
    return RingDescriptor::product({RingDescriptor::cyclic(2), RingDescriptor::cyclic(2)});
  if (name == "z2xz3")
    return RingDescriptor::product({RingDescriptor::cyclic(2), RingDescriptor::cyclic(3)});
  if (name == "f4")  // the field with four elements, Z_2[x]/(x^2+x+1)
    return RingDescriptor::poly_quotient(Int(2), {1, 1, 1});
  if (name == "z2dual")  // dual numbers over Z_2, Z_2[x]/(x^2); not reduced
    return RingDescriptor::poly_quotient(Int(2), {0, 0, 1});
  return std::nullopt;
}

}  // namespace parreg
