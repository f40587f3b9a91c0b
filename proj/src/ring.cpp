#include "parreg/ring.hpp"

#include <sstream>

#include "parreg/errors.hpp"

namespace parreg {

bool RingElement::operator==(const RingElement& other) const {
  if (value_.index() != other.value_.index()) return false;
  if (holds_scalar()) return scalar() == other.scalar();
  if (holds_coeffs()) return coeffs() == other.coeffs();
  return tuple() == other.tuple();
}

RingDescriptor RingDescriptor::integers() {
  RingDescriptor r;
  r.kind_ = Integers{};
  return r;
}

RingDescriptor RingDescriptor::cyclic(Int modulus) {
  if (modulus < 2) throw Error("cyclic ring modulus must be at least 2");
  RingDescriptor r;
  r.kind_ = Cyclic{std::move(modulus)};
  return r;
}

RingDescriptor RingDescriptor::poly_quotient(std::optional<Int> base_modulus,
                                             IntVector modulus_poly) {
  if (base_modulus && *base_modulus < 2) throw Error("base modulus must be at least 2");
  if (modulus_poly.size() < 2) throw Error("polynomial modulus must have degree at least 1");
  if (base_modulus)
    for (auto& c : modulus_poly) c = floor_mod(c, *base_modulus);
  if (modulus_poly.back() != 1) throw Error("polynomial modulus must be monic");
  RingDescriptor r;
  r.kind_ = PolyQuotient{std::move(base_modulus), std::move(modulus_poly)};
  return r;
}

RingDescriptor RingDescriptor::product(std::vector<RingDescriptor> factors) {
  if (factors.empty()) throw Error("product ring needs at least one factor");
  RingDescriptor r;
  r.kind_ = Product{std::move(factors)};
  return r;
}

namespace {

Int reduce_base(const Int& v, const std::optional<Int>& base_modulus) {
  return base_modulus ? floor_mod(v, *base_modulus) : v;
}

// Remainder of p modulo the monic polynomial f, coefficients canonical in
// the base; the result always has exactly deg(f) entries.
IntVector poly_remainder(IntVector p, const IntVector& f, const std::optional<Int>& base) {
  const std::size_t deg = f.size() - 1;
  for (auto& c : p) c = reduce_base(c, base);
  for (std::size_t i = p.size(); i-- > deg;) {
    Int c = p[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) {
      p[i - deg + j] -= c * f[j];
      p[i - deg + j] = reduce_base(p[i - deg + j], base);
    }
  }
  p.resize(deg);
  for (auto& c : p) c = reduce_base(c, base);
  return p;
}

}  // namespace

RingElement RingDescriptor::normalize(const RingElement& raw) const {
  if (is_integers()) {
    if (!raw.holds_scalar()) throw MalformedElement("integer ring element must be a scalar");
    return raw;
  }
  if (is_cyclic()) {
    if (!raw.holds_scalar()) throw MalformedElement("cyclic ring element must be a scalar");
    return RingElement(floor_mod(raw.scalar(), cyclic_kind().modulus));
  }
  if (is_poly_quotient()) {
    const auto& k = poly_kind();
    IntVector coeffs;
    if (raw.holds_scalar())
      coeffs = {raw.scalar()};
    else if (raw.holds_coeffs())
      coeffs = raw.coeffs();
    else
      throw MalformedElement("polynomial-quotient element must be a coefficient vector");
    return RingElement(poly_remainder(std::move(coeffs), k.modulus_poly, k.base_modulus));
  }
  const auto& factors = product_kind().factors;
  if (!raw.holds_tuple()) throw MalformedElement("product ring element must be a tuple");
  if (raw.tuple().size() != factors.size())
    throw MalformedElement("product ring element has wrong arity");
  std::vector<RingElement> parts;
  parts.reserve(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i)
    parts.push_back(factors[i].normalize(raw.tuple()[i]));
  return RingElement(std::move(parts));
}

RingElement RingDescriptor::zero() const {
  if (is_integers() || is_cyclic()) return RingElement(Int(0));
  if (is_poly_quotient())
    return RingElement(IntVector(poly_kind().modulus_poly.size() - 1));
  std::vector<RingElement> parts;
  for (const auto& f : product_kind().factors) parts.push_back(f.zero());
  return RingElement(std::move(parts));
}

RingElement RingDescriptor::one() const {
  if (is_integers() || is_cyclic()) return RingElement(Int(1));
  if (is_poly_quotient()) {
    IntVector c(poly_kind().modulus_poly.size() - 1);
    c[0] = 1;
    return RingElement(std::move(c));
  }
  std::vector<RingElement> parts;
  for (const auto& f : product_kind().factors) parts.push_back(f.one());
  return RingElement(std::move(parts));
}

RingElement RingDescriptor::add(const RingElement& a, const RingElement& b) const {
  if (is_integers()) return RingElement(a.scalar() + b.scalar());
  if (is_cyclic())
    return RingElement(floor_mod(a.scalar() + b.scalar(), cyclic_kind().modulus));
  if (is_poly_quotient()) {
    const auto& k = poly_kind();
    IntVector c(a.coeffs());
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = reduce_base(c[i] + b.coeffs()[i], k.base_modulus);
    return RingElement(std::move(c));
  }
  const auto& factors = product_kind().factors;
  std::vector<RingElement> parts;
  for (std::size_t i = 0; i < factors.size(); ++i)
    parts.push_back(factors[i].add(a.tuple()[i], b.tuple()[i]));
  return RingElement(std::move(parts));
}

RingElement RingDescriptor::neg(const RingElement& a) const {
  if (is_integers()) return RingElement(-a.scalar());
  if (is_cyclic()) return RingElement(floor_mod(-a.scalar(), cyclic_kind().modulus));
  if (is_poly_quotient()) {
    const auto& k = poly_kind();
    IntVector c(a.coeffs());
    for (auto& x : c) x = reduce_base(-x, k.base_modulus);
    return RingElement(std::move(c));
  }
  const auto& factors = product_kind().factors;
  std::vector<RingElement> parts;
  for (std::size_t i = 0; i < factors.size(); ++i)
    parts.push_back(factors[i].neg(a.tuple()[i]));
  return RingElement(std::move(parts));
}

RingElement RingDescriptor::sub(const RingElement& a, const RingElement& b) const {
  return add(a, neg(b));
}

RingElement RingDescriptor::mul(const RingElement& a, const RingElement& b) const {
  if (is_integers()) return RingElement(a.scalar() * b.scalar());
  if (is_cyclic())
    return RingElement(floor_mod(a.scalar() * b.scalar(), cyclic_kind().modulus));
  if (is_poly_quotient()) {
    const auto& k = poly_kind();
    const IntVector& pa = a.coeffs();
    const IntVector& pb = b.coeffs();
    IntVector conv(pa.size() + pb.size() - 1);
    for (std::size_t i = 0; i < pa.size(); ++i) {
      if (pa[i] == 0) continue;
      for (std::size_t j = 0; j < pb.size(); ++j) conv[i + j] += pa[i] * pb[j];
    }
    return RingElement(poly_remainder(std::move(conv), k.modulus_poly, k.base_modulus));
  }
  const auto& factors = product_kind().factors;
  std::vector<RingElement> parts;
  for (std::size_t i = 0; i < factors.size(); ++i)
    parts.push_back(factors[i].mul(a.tuple()[i], b.tuple()[i]));
  return RingElement(std::move(parts));
}

bool RingDescriptor::is_zero(const RingElement& a) const { return a == zero(); }

std::optional<Int> RingDescriptor::cardinality() const {
  if (is_integers()) return std::nullopt;
  if (is_cyclic()) return cyclic_kind().modulus;
  if (is_poly_quotient()) {
    const auto& k = poly_kind();
    if (!k.base_modulus) return std::nullopt;
    Int card = 1;
    for (std::size_t i = 0; i + 1 < k.modulus_poly.size(); ++i) card *= *k.base_modulus;
    return card;
  }
  Int card = 1;
  for (const auto& f : product_kind().factors) {
    auto c = f.cardinality();
    if (!c) return std::nullopt;
    card *= *c;
  }
  return card;
}

std::vector<RingElement> RingDescriptor::enumerate() const {
  auto card = cardinality();
  if (!card) throw InfiniteRing("cannot enumerate an infinite ring");
  std::vector<RingElement> out;
  if (is_cyclic()) {
    for (Int v = 0; v < *card; ++v) out.push_back(RingElement(v));
    return out;
  }
  if (is_poly_quotient()) {
    const auto& k = poly_kind();
    const std::size_t deg = k.modulus_poly.size() - 1;
    const Int n = *k.base_modulus;
    // counting order: the constant coefficient is the fastest digit, so the
    // sequence starts 0, 1, ..., x, 1+x, ...
    for (Int idx = 0; idx < *card; ++idx) {
      IntVector coeffs(deg);
      Int rest = idx;
      for (std::size_t i = 0; i < deg; ++i) {
        coeffs[i] = floor_mod(rest, n);
        rest /= n;
      }
      out.push_back(RingElement(std::move(coeffs)));
    }
    return out;
  }
  // product: earlier factors are more significant, so the tuples come out in
  // lexicographic order
  const auto& factors = product_kind().factors;
  std::vector<std::vector<RingElement>> columns;
  for (const auto& f : factors) columns.push_back(f.enumerate());
  std::vector<std::size_t> idx(factors.size(), 0);
  for (;;) {
    std::vector<RingElement> parts;
    for (std::size_t i = 0; i < factors.size(); ++i) parts.push_back(columns[i][idx[i]]);
    out.push_back(RingElement(std::move(parts)));
    std::size_t pos = factors.size();
    while (pos > 0) {
      if (++idx[pos - 1] < columns[pos - 1].size()) break;
      idx[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }
  return out;
}

std::size_t RingDescriptor::additive_generator_count() const {
  if (is_integers() || is_cyclic()) return 1;
  if (is_poly_quotient()) return poly_kind().modulus_poly.size() - 1;
  std::size_t total = 0;
  for (const auto& f : product_kind().factors) total += f.additive_generator_count();
  return total;
}

AdditivePresentation RingDescriptor::additive_presentation() const {
  AdditivePresentation out;
  if (is_integers()) {
    out.group = FPAbelianGroup{1, IntMatrix(0, 1)};
    out.actions = {IntMatrix::identity(1)};
    out.generators = {one()};
    return out;
  }
  if (is_cyclic()) {
    IntMatrix rel(1, 1);
    rel.at(0, 0) = cyclic_kind().modulus;
    out.group = FPAbelianGroup{1, rel};
    out.actions = {IntMatrix::identity(1)};
    out.generators = {one()};
    return out;
  }
  if (is_poly_quotient()) {
    const auto& k = poly_kind();
    const std::size_t deg = k.modulus_poly.size() - 1;
    IntMatrix rel = k.base_modulus ? IntMatrix(deg, deg) : IntMatrix(0, deg);
    if (k.base_modulus)
      for (std::size_t i = 0; i < deg; ++i) rel.at(i, i) = *k.base_modulus;
    out.group = FPAbelianGroup{deg, rel};
    for (std::size_t g = 0; g < deg; ++g) {
      // multiplication by x^g: column j holds the coordinates of x^(g+j)
      IntMatrix action(deg, deg);
      for (std::size_t j = 0; j < deg; ++j) {
        IntVector power(g + j + 1);
        power[g + j] = 1;
        IntVector image = poly_remainder(std::move(power), k.modulus_poly, k.base_modulus);
        for (std::size_t i = 0; i < deg; ++i) action.at(i, j) = image[i];
      }
      out.actions.push_back(std::move(action));
      IntVector gen(deg);
      gen[g] = 1;
      out.generators.push_back(RingElement(std::move(gen)));
    }
    return out;
  }

  const auto& factors = product_kind().factors;
  std::vector<AdditivePresentation> parts;
  std::size_t total = 0;
  for (const auto& f : factors) {
    parts.push_back(f.additive_presentation());
    total += parts.back().group.generator_count;
  }
  std::size_t rel_rows = 0;
  for (const auto& p : parts) rel_rows += p.group.relations.rows();
  IntMatrix rel(rel_rows, total);
  std::size_t row0 = 0, col0 = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.group.relations.rows(); ++i)
      for (std::size_t j = 0; j < p.group.generator_count; ++j)
        rel.at(row0 + i, col0 + j) = p.group.relations.at(i, j);
    row0 += p.group.relations.rows();
    col0 += p.group.generator_count;
  }
  out.group = FPAbelianGroup{total, rel};

  col0 = 0;
  for (std::size_t t = 0; t < parts.size(); ++t) {
    const auto& p = parts[t];
    for (std::size_t g = 0; g < p.group.generator_count; ++g) {
      // an injected generator multiplies its own block and kills the others
      IntMatrix action(total, total);
      for (std::size_t i = 0; i < p.group.generator_count; ++i)
        for (std::size_t j = 0; j < p.group.generator_count; ++j)
          action.at(col0 + i, col0 + j) = p.actions[g].at(i, j);
      out.actions.push_back(std::move(action));

      std::vector<RingElement> inj;
      for (std::size_t s = 0; s < factors.size(); ++s)
        inj.push_back(s == t ? p.generators[g] : factors[s].zero());
      out.generators.push_back(RingElement(std::move(inj)));
    }
    col0 += p.group.generator_count;
  }
  return out;
}

IntVector RingDescriptor::element_coords(const RingElement& e) const {
  if (is_integers() || is_cyclic()) return {e.scalar()};
  if (is_poly_quotient()) return e.coeffs();
  IntVector coords;
  const auto& factors = product_kind().factors;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    IntVector part = factors[i].element_coords(e.tuple()[i]);
    coords.insert(coords.end(), part.begin(), part.end());
  }
  return coords;
}

RingElement RingDescriptor::element_from_coords(const IntVector& coords) const {
  if (coords.size() != additive_generator_count())
    throw MalformedElement("coordinate vector has wrong length");
  if (is_integers() || is_cyclic()) return normalize(RingElement(coords[0]));
  if (is_poly_quotient()) return normalize(RingElement(coords));
  std::vector<RingElement> parts;
  std::size_t pos = 0;
  for (const auto& f : product_kind().factors) {
    const std::size_t width = f.additive_generator_count();
    IntVector slice(coords.begin() + pos, coords.begin() + pos + width);
    parts.push_back(f.element_from_coords(slice));
    pos += width;
  }
  return RingElement(std::move(parts));
}

std::string RingDescriptor::render(const RingElement& e) const {
  if (is_integers() || is_cyclic()) return e.scalar().get_str();
  if (is_poly_quotient()) {
    const IntVector& c = e.coeffs();
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      if (!first) out << "+";
      if (i == 0)
        out << c[i].get_str();
      else {
        if (c[i] != 1) out << c[i].get_str();
        out << "x";
        if (i > 1) out << "^" << i;
      }
      first = false;
    }
    if (first) out << "0";
    return out.str();
  }
  std::ostringstream out;
  out << "(";
  const auto& factors = product_kind().factors;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out << ",";
    out << factors[i].render(e.tuple()[i]);
  }
  out << ")";
  return out.str();
}

bool RingDescriptor::operator==(const RingDescriptor& other) const {
  if (kind_.index() != other.kind_.index()) return false;
  if (is_integers()) return true;
  if (is_cyclic()) return cyclic_kind().modulus == other.cyclic_kind().modulus;
  if (is_poly_quotient()) {
    const auto& a = poly_kind();
    const auto& b = other.poly_kind();
    return a.base_modulus == b.base_modulus && a.modulus_poly == b.modulus_poly;
  }
  return product_kind().factors == other.product_kind().factors;
}

}  // namespace parreg
