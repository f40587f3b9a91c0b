#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parreg/ring.hpp"

namespace parreg {

/// Named finite rings accepted by the survey command and the tests.
std::vector<std::string> catalog_names();

/// Lookup by name ("z2".."z9", "z2xz2", "z2xz3", "f4", "z2dual").
std::optional<RingDescriptor> catalog_ring(const std::string& name);

}  // namespace parreg
