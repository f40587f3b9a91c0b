#include "parreg/document.hpp"

#include <nlohmann/json.hpp>

#include "parreg/angle.hpp"
#include "parreg/errors.hpp"
#include "parreg/version.hpp"

namespace parreg {

namespace {

std::string int_str(const Int& v) { return v.get_str(); }

Int parse_int(const Json& node, const std::string& path) {
  if (node.is_string()) {
    const std::string& s = node.get_ref<const std::string&>();
    if (s.empty()) throw ParseError(path, "empty integer string");
    std::size_t start = s[0] == '-' ? 1 : 0;
    if (start == s.size()) throw ParseError(path, "not a decimal integer: " + s);
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw ParseError(path, "not a decimal integer: " + s);
    return Int(s);
  }
  if (node.is_number_integer()) return Int(static_cast<long>(node.get<long long>()));
  throw ParseError(path, "expected an integer (as a decimal string)");
}

IntVector parse_int_array(const Json& node, const std::string& path) {
  if (!node.is_array()) throw ParseError(path, "expected an array of integers");
  IntVector out;
  for (std::size_t i = 0; i < node.size(); ++i)
    out.push_back(parse_int(node[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

Json int_array(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(int_str(x));
  return out;
}

RingDescriptor parse_ring(const Json& node, const std::string& path) {
  if (!node.is_object()) throw ParseError(path, "expected a ring object");
  if (!node.contains("kind")) throw ParseError(path, "ring needs a \"kind\"");
  const std::string kind = node["kind"].get<std::string>();
  if (kind == "integers") return RingDescriptor::integers();
  if (kind == "cyclic") {
    if (!node.contains("modulus")) throw ParseError(path, "cyclic ring needs a modulus");
    Int n = parse_int(node["modulus"], path + ".modulus");
    if (n < 2) throw ParseError(path + ".modulus", "modulus must be at least 2");
    return RingDescriptor::cyclic(std::move(n));
  }
  if (kind == "poly_quotient") {
    if (!node.contains("base") || !node.contains("modulus_poly"))
      throw ParseError(path, "poly_quotient needs \"base\" and \"modulus_poly\"");
    const Json& base = node["base"];
    std::optional<Int> base_modulus;
    const std::string base_kind = base.contains("kind") ? base["kind"].get<std::string>() : "";
    if (base_kind == "cyclic")
      base_modulus = parse_int(base["modulus"], path + ".base.modulus");
    else if (base_kind != "integers")
      throw ParseError(path + ".base", "base must be the integers or a cyclic ring");
    IntVector poly = parse_int_array(node["modulus_poly"], path + ".modulus_poly");
    if (poly.size() < 2)
      throw ParseError(path + ".modulus_poly", "modulus polynomial must have degree >= 1");
    try {
      return RingDescriptor::poly_quotient(std::move(base_modulus), std::move(poly));
    } catch (const Error& e) {
      throw ParseError(path + ".modulus_poly", e.what());
    }
  }
  if (kind == "product") {
    if (!node.contains("factors") || !node["factors"].is_array() || node["factors"].empty())
      throw ParseError(path, "product ring needs a nonempty factor array");
    std::vector<RingDescriptor> factors;
    for (std::size_t i = 0; i < node["factors"].size(); ++i)
      factors.push_back(
          parse_ring(node["factors"][i], path + ".factors[" + std::to_string(i) + "]"));
    return RingDescriptor::product(std::move(factors));
  }
  throw ParseError(path + ".kind", "unknown ring kind: " + kind);
}

Json serialize_ring(const RingDescriptor& ring) {
  Json out;
  if (ring.is_integers()) {
    out["kind"] = "integers";
  } else if (ring.is_cyclic()) {
    out["kind"] = "cyclic";
    out["modulus"] = int_str(ring.cyclic_kind().modulus);
  } else if (ring.is_poly_quotient()) {
    out["kind"] = "poly_quotient";
    Json base;
    if (ring.poly_kind().base_modulus) {
      base["kind"] = "cyclic";
      base["modulus"] = int_str(*ring.poly_kind().base_modulus);
    } else {
      base["kind"] = "integers";
    }
    out["base"] = base;
    out["modulus_poly"] = int_array(ring.poly_kind().modulus_poly);
  } else {
    out["kind"] = "product";
    Json factors = Json::array();
    for (const auto& f : ring.product_kind().factors) factors.push_back(serialize_ring(f));
    out["factors"] = factors;
  }
  return out;
}

RingElement parse_ring_element(const RingDescriptor& ring, const Json& node,
                               const std::string& path) {
  RingElement raw;
  if (ring.is_integers() || ring.is_cyclic()) {
    raw = RingElement(parse_int(node, path));
  } else if (ring.is_poly_quotient()) {
    raw = RingElement(parse_int_array(node, path));
  } else {
    if (!node.is_array() || node.size() != ring.product_kind().factors.size())
      throw ParseError(path, "expected one entry per product factor");
    std::vector<RingElement> parts;
    for (std::size_t i = 0; i < node.size(); ++i)
      parts.push_back(parse_ring_element(ring.product_kind().factors[i], node[i],
                                         path + "[" + std::to_string(i) + "]"));
    raw = RingElement(std::move(parts));
  }
  try {
    return ring.normalize(raw);
  } catch (const MalformedElement& e) {
    throw ParseError(path, e.what());
  }
}

Json serialize_ring_element(const RingDescriptor& ring, const RingElement& e) {
  if (ring.is_integers() || ring.is_cyclic()) return int_str(e.scalar());
  if (ring.is_poly_quotient()) return int_array(e.coeffs());
  Json out = Json::array();
  for (std::size_t i = 0; i < ring.product_kind().factors.size(); ++i)
    out.push_back(serialize_ring_element(ring.product_kind().factors[i], e.tuple()[i]));
  return out;
}

struct ModuleSpec {
  std::string kind = "self";  // self | free | explicit
  std::size_t rank = 1;
  IntVector orders;
  std::vector<IntMatrix> actions;
};

IntMatrix parse_matrix_of_ints(const Json& node, const std::string& path) {
  if (!node.is_array()) throw ParseError(path, "expected a matrix (array of rows)");
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < node.size(); ++i)
    rows.push_back(parse_int_array(node[i], path + "[" + std::to_string(i) + "]"));
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw ParseError(path, "ragged matrix rows");
  return IntMatrix::from_int_rows(rows);
}

ModuleSpec parse_module_spec(const Json& doc) {
  ModuleSpec spec;
  if (!doc.contains("module")) return spec;
  const Json& node = doc["module"];
  if (!node.is_object()) throw ParseError("module", "expected an object");
  spec.kind = node.contains("kind") ? node["kind"].get<std::string>() : "self";
  if (spec.kind == "self") return spec;
  if (spec.kind == "free") {
    if (!node.contains("rank")) throw ParseError("module", "free module needs a rank");
    Int r = parse_int(node["rank"], "module.rank");
    if (r < 1 || !r.fits_ulong_p()) throw ParseError("module.rank", "rank must be >= 1");
    spec.rank = r.get_ui();
    return spec;
  }
  if (spec.kind == "explicit") {
    if (!node.contains("orders") || !node.contains("actions"))
      throw ParseError("module", "explicit module needs \"orders\" and \"actions\"");
    spec.orders = parse_int_array(node["orders"], "module.orders");
    if (!node["actions"].is_array()) throw ParseError("module.actions", "expected an array");
    for (std::size_t g = 0; g < node["actions"].size(); ++g)
      spec.actions.push_back(parse_matrix_of_ints(node["actions"][g],
                                                  "module.actions[" + std::to_string(g) + "]"));
    return spec;
  }
  throw ParseError("module.kind", "unknown module kind: " + spec.kind);
}

ModuleDescriptor build_module(const RingDescriptor& ring, const ModuleSpec& spec) {
  if (spec.kind == "self") return ModuleDescriptor::self_module(ring);
  if (spec.kind == "free") return ModuleDescriptor::free_module(ring, spec.rank);
  try {
    return ModuleDescriptor::explicit_module(ring, spec.orders, spec.actions);
  } catch (const InvalidModule& e) {
    throw ParseError("module", e.what());
  }
}

IntVector parse_module_element(const SystemInstance& sys, const ModuleSpec& spec,
                               const Json& node, const std::string& path) {
  if (spec.kind == "self") {
    RingElement e = parse_ring_element(sys.ring, node, path);
    return sys.ring.element_coords(e);
  }
  if (spec.kind == "free") {
    if (!node.is_array() || node.size() != spec.rank)
      throw ParseError(path, "expected one ring element per free-module coordinate");
    IntVector coords;
    for (std::size_t i = 0; i < spec.rank; ++i) {
      RingElement e =
          parse_ring_element(sys.ring, node[i], path + "[" + std::to_string(i) + "]");
      IntVector part = sys.ring.element_coords(e);
      coords.insert(coords.end(), part.begin(), part.end());
    }
    return coords;
  }
  IntVector coords = parse_int_array(node, path);
  if (coords.size() != sys.module.generator_count())
    throw ParseError(path, "expected one coordinate per module generator");
  return coords;
}

}  // namespace

SystemInstance parse_system(const Json& doc) {
  if (!doc.is_object()) throw ParseError("", "system document must be an object");
  if (!doc.contains("ring")) throw ParseError("ring", "missing");
  if (!doc.contains("matrix")) throw ParseError("matrix", "missing");
  if (!doc.contains("rhs")) throw ParseError("rhs", "missing");

  RingDescriptor ring = parse_ring(doc["ring"], "ring");
  ModuleSpec spec = parse_module_spec(doc);

  SystemInstance sys{ring, build_module(ring, spec), {}, {}};

  const Json& matrix = doc["matrix"];
  if (!matrix.is_array() || matrix.empty())
    throw ParseError("matrix", "expected a nonempty array of rows");
  for (std::size_t j = 0; j < matrix.size(); ++j) {
    const std::string rpath = "matrix[" + std::to_string(j) + "]";
    if (!matrix[j].is_array()) throw ParseError(rpath, "expected a row array");
    std::vector<RingElement> row;
    for (std::size_t i = 0; i < matrix[j].size(); ++i)
      row.push_back(
          parse_ring_element(ring, matrix[j][i], rpath + "[" + std::to_string(i) + "]"));
    if (!sys.coefficients.empty() && row.size() != sys.coefficients.front().size())
      throw ParseError(rpath, "ragged matrix rows");
    sys.coefficients.push_back(std::move(row));
  }

  const Json& rhs = doc["rhs"];
  if (!rhs.is_array() || rhs.size() != matrix.size())
    throw ParseError("rhs", "expected one entry per matrix row");
  for (std::size_t j = 0; j < rhs.size(); ++j)
    sys.rhs.push_back(sys.module.reduce(
        parse_module_element(sys, spec, rhs[j], "rhs[" + std::to_string(j) + "]")));

  sys.check_shape();
  if (sys.rhs_is_zero())
    throw ParseError("rhs", "right-hand side must be nonzero");
  return sys;
}

SystemInstance parse_system_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("", std::string("invalid document: ") + e.what());
  }
  return parse_system(doc);
}

Json serialize_system(const SystemInstance& sys) {
  Json out;
  out["format"] = "parreg-system";
  out["ring"] = serialize_ring(sys.ring);

  Json module;
  if (module_is_self(sys)) {
    module["kind"] = "self";
  } else {
    module["kind"] = "explicit";
    // canonical explicit form: Hermite diagonal orders plus raw actions
    const IntMatrix& hnf = sys.module.relation_basis();
    IntVector orders(sys.module.generator_count(), Int(0));
    for (std::size_t i = 0; i < hnf.rows(); ++i) {
      std::size_t pivot = 0;
      while (pivot < hnf.cols() && hnf.at(i, pivot) == 0) ++pivot;
      if (pivot < hnf.cols() && pivot == i) orders[pivot] = hnf.at(i, pivot);
    }
    module["orders"] = int_array(orders);
    Json actions = Json::array();
    for (const auto& a : sys.module.actions()) {
      Json rows = Json::array();
      for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(int_array(a.row(i)));
      actions.push_back(rows);
    }
    module["actions"] = actions;
  }
  out["module"] = module;

  Json matrix = Json::array();
  for (const auto& row : sys.coefficients) {
    Json jrow = Json::array();
    for (const auto& e : row) jrow.push_back(serialize_ring_element(sys.ring, e));
    matrix.push_back(jrow);
  }
  out["matrix"] = matrix;

  Json rhs = Json::array();
  for (const auto& b : sys.rhs) {
    if (module_is_self(sys))
      rhs.push_back(serialize_ring_element(sys.ring, sys.ring.element_from_coords(b)));
    else
      rhs.push_back(int_array(b));
  }
  out["rhs"] = rhs;
  return out;
}

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string system_digest(const SystemInstance& sys) {
  return fnv1a64_hex(serialize_system(sys).dump());
}

Json serialize_certificate(const WitnessCertificate& cert) {
  Json out;
  out["format"] = "parreg-certificate";
  out["u"] = int_array(cert.functional);
  out["d"] = int_str(cert.modulus);
  Json covectors = Json::array();
  for (const auto& ui : cert.column_covectors) covectors.push_back(int_array(ui));
  out["column_covectors"] = covectors;
  out["n"] = std::to_string(cert.column_count);
  out["system_digest"] = cert.system_digest;
  return out;
}

WitnessCertificate parse_certificate(const Json& doc) {
  if (!doc.is_object()) throw ParseError("", "certificate document must be an object");
  for (const char* field : {"u", "d", "column_covectors", "n", "system_digest"})
    if (!doc.contains(field)) throw ParseError(field, "missing");
  WitnessCertificate cert;
  cert.functional = parse_int_array(doc["u"], "u");
  cert.modulus = parse_int(doc["d"], "d");
  if (cert.modulus < 2) throw ParseError("d", "modulus must be at least 2");
  if (!doc["column_covectors"].is_array())
    throw ParseError("column_covectors", "expected an array");
  for (std::size_t i = 0; i < doc["column_covectors"].size(); ++i)
    cert.column_covectors.push_back(parse_int_array(
        doc["column_covectors"][i], "column_covectors[" + std::to_string(i) + "]"));
  Int n = parse_int(doc["n"], "n");
  if (n < 0 || !n.fits_ulong_p()) throw ParseError("n", "invalid column count");
  cert.column_count = n.get_ui();
  if (!doc["system_digest"].is_string()) throw ParseError("system_digest", "expected a string");
  cert.system_digest = doc["system_digest"].get<std::string>();
  return cert;
}

WitnessCertificate parse_certificate_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("", std::string("invalid document: ") + e.what());
  }
  return parse_certificate(doc);
}

namespace {

Json module_element_json(const SystemInstance& sys, const IntVector& coords) {
  Json out;
  out["coords"] = int_array(coords);
  out["label"] = render_module_element(sys, coords);
  return out;
}

}  // namespace

Json decide_result_document(const SystemInstance& sys, const Verdict& verdict) {
  Json out;
  out["format"] = "parreg-result";
  out["tool_version"] = kToolVersion;
  out["input_digest"] = system_digest(sys);

  if (std::holds_alternative<PartitionRegular>(verdict)) {
    out["verdict"] = "partition_regular";
    out["constant_solution"] =
        module_element_json(sys, std::get<PartitionRegular>(verdict).constant_solution);
    return out;
  }

  const WitnessCertificate& cert = std::get<NotPartitionRegular>(verdict).certificate;
  out["verdict"] = "not_partition_regular";
  out["certificate"] = serialize_certificate(cert);

  // colour classes, for modules small enough to display
  const auto order = sys.module.order();
  if (order && *order <= 64) {
    std::vector<IntVector> elements = sys.module.elements(std::nullopt);
    std::vector<std::vector<Int>> colours;
    std::vector<std::vector<std::string>> classes;
    for (const auto& t : elements) {
      const std::vector<Int> c = colour(cert, t);
      std::size_t slot = colours.size();
      for (std::size_t i = 0; i < colours.size(); ++i)
        if (colours[i] == c) {
          slot = i;
          break;
        }
      if (slot == colours.size()) {
        colours.push_back(c);
        classes.emplace_back();
      }
      classes[slot].push_back(render_module_element(sys, t));
    }
    Json jclasses = Json::array();
    for (const auto& cls : classes) {
      Json jc = Json::array();
      for (const auto& label : cls) jc.push_back(label);
      jclasses.push_back(jc);
    }
    Json colouring;
    colouring["realized_colour_count"] = std::to_string(colours.size());
    colouring["induced_classes"] = jclasses;
    out["colouring"] = colouring;
  }

  // circle view of the separation: the angle of b under the functional and
  // the bucket count at which interval colouring blocks every solution, via
  // the signed per-term bound |difference| < 1/d of a turn
  const Int ub = floor_mod(dot(cert.functional, stacked_rhs(sys)), cert.modulus);
  const RationalAngle theta_b(ub, cert.modulus);
  const RationalAngle delta = theta_b.distance_to_zero();
  Json analysis;
  analysis["rhs_angle_turns"] = theta_b.str();
  analysis["distance_to_zero_turns"] = delta.str();
  analysis["per_term_bound"] = "signed difference below 1/d turn per bucket";
  if (cert.column_count > 0)
    analysis["sufficient_bucket_count"] = required_d(cert.column_count, delta).get_str();
  out["interval_analysis"] = analysis;
  return out;
}

Json check_report_document(const std::string& digest, const CheckReport& report) {
  Json out;
  out["format"] = "parreg-check-report";
  out["tool_version"] = kToolVersion;
  out["system_digest"] = digest;
  Json checks = Json::array();
  for (const auto& c : report.algebraic_checks) {
    Json jc;
    jc["name"] = c.name;
    jc["pass"] = c.passed;
    if (!c.detail.empty()) jc["detail"] = c.detail;
    checks.push_back(jc);
  }
  out["algebraic_checks"] = checks;
  out["search_budget"] = report.search_budget;
  out["solutions_examined"] = std::to_string(report.solutions_examined);
  if (report.monochromatic_found) {
    Json x = Json::array();
    for (const auto& entry : *report.monochromatic_found) x.push_back(int_array(entry));
    out["monochromatic_found"] = x;
  }
  out["verdict"] = report.passed ? "pass" : "fail";
  return out;
}

Json exhaust_result_document(const SystemInstance& sys, const ExhaustiveResult& result) {
  Json out;
  out["format"] = "parreg-exhaust";
  out["tool_version"] = kToolVersion;
  out["input_digest"] = system_digest(sys);
  out["module_order"] = sys.module.order() ? sys.module.order()->get_str() : "infinite";
  out["partition_regular"] = result.is_partition_regular;
  if (result.blocking_partition) {
    const SetPartition& p = *result.blocking_partition;
    Json jp;
    Json rgs = Json::array();
    for (int digit : p.rgs) rgs.push_back(std::to_string(digit));
    jp["rgs"] = rgs;
    const std::vector<IntVector> elements = sys.module.elements(std::nullopt);
    Json jclasses = Json::array();
    for (const auto& cls : p.classes()) {
      Json jc = Json::array();
      for (std::size_t idx : cls) jc.push_back(render_module_element(sys, elements[idx]));
      jclasses.push_back(jc);
    }
    jp["classes"] = jclasses;
    out["blocking_partition"] = jp;
  }
  return out;
}

}  // namespace parreg
