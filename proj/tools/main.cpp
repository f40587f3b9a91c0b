#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "parreg/catalog.hpp"
#include "parreg/document.hpp"
#include "parreg/errors.hpp"
#include "parreg/oracle.hpp"
#include "parreg/rng.hpp"
#include "parreg/version.hpp"
#include "parreg/witness.hpp"

using namespace parreg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMalformed = 2;
constexpr int kExitInternal = 3;
constexpr int kExitVerifyFailed = 4;
constexpr int kExitDigestMismatch = 5;
constexpr int kExitModuleUnsuitable = 6;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

VerifyBudget pick_budget(const SystemInstance& sys, long box, bool exhaustive) {
  if (box >= 0 && exhaustive)
    throw ParseError("", "--box and --exhaustive are mutually exclusive");
  if (exhaustive) return ExhaustiveBudget{};
  if (box >= 0) return BoxBudget{box};
  // default: exhaust finite modules, box 25 otherwise
  if (sys.module.is_finite()) return ExhaustiveBudget{};
  return BoxBudget{25};
}

std::string budget_name(const VerifyBudget& budget) {
  if (std::holds_alternative<ExhaustiveBudget>(budget)) return "exhaustive";
  return "box " + std::to_string(std::get<BoxBudget>(budget).radius);
}

int run_decide(const std::string& input, bool with_check, long box, bool exhaustive) {
  const SystemInstance sys = parse_system_text(read_file(input));
  const Verdict verdict = decide(sys);
  Json doc = decide_result_document(sys, verdict);
  if (with_check && std::holds_alternative<NotPartitionRegular>(verdict)) {
    const WitnessCertificate& cert = std::get<NotPartitionRegular>(verdict).certificate;
    const CheckReport report = verify_certificate(sys, cert, pick_budget(sys, box, exhaustive));
    doc["check_report"] = check_report_document(system_digest(sys), report);
    if (!report.passed) {
      emit(doc);
      std::cerr << "internal check of the fresh certificate failed\n";
      return kExitInternal;
    }
  }
  emit(doc);
  return kExitOk;
}

int run_verify(const std::string& input, const std::string& certificate, long box,
               bool exhaustive) {
  const SystemInstance sys = parse_system_text(read_file(input));
  const WitnessCertificate cert = parse_certificate_text(read_file(certificate));
  const VerifyBudget budget = pick_budget(sys, box, exhaustive);
  const CheckReport report = verify_certificate(sys, cert, budget);
  emit(check_report_document(system_digest(sys), report));
  if (!report.passed) {
    for (const auto& c : report.algebraic_checks)
      if (!c.passed) std::cerr << "failed check: " << c.name << "\n";
    if (report.monochromatic_found)
      std::cerr << "monochromatic solution found under " << budget_name(budget) << "\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int run_exhaust(const std::string& input, long cap) {
  const SystemInstance sys = parse_system_text(read_file(input));
  const ExhaustiveResult result = exhaustive_pr(sys, Int(cap));
  emit(exhaust_result_document(sys, result));
  return kExitOk;
}

struct SurveyOptions {
  std::vector<std::string> rings;
  std::size_t max_m = 1;
  std::size_t max_n = 2;
  std::uint64_t sample = 0;  // 0 = full enumeration
  std::uint64_t seed = 0;
  long cap = 8;
};

std::vector<SystemInstance> enumerate_ring_systems(const RingDescriptor& ring,
                                                   std::size_t max_m, std::size_t max_n) {
  std::vector<SystemInstance> out;
  const auto elems = ring.enumerate();
  const std::size_t q = elems.size();
  for (std::size_t m = 1; m <= max_m; ++m)
    for (std::size_t n = 1; n <= max_n; ++n) {
      std::vector<std::size_t> a(m * n, 0);
      for (;;) {
        std::vector<std::size_t> b(m, 0);
        for (;;) {
          bool nonzero = false;
          for (std::size_t j = 0; j < m; ++j) nonzero = nonzero || !ring.is_zero(elems[b[j]]);
          if (nonzero) {
            std::vector<std::vector<RingElement>> coeff(m, std::vector<RingElement>(n));
            for (std::size_t j = 0; j < m; ++j)
              for (std::size_t i = 0; i < n; ++i) coeff[j][i] = elems[a[j * n + i]];
            std::vector<IntVector> rhs;
            for (std::size_t j = 0; j < m; ++j)
              rhs.push_back(ring.element_coords(elems[b[j]]));
            out.push_back(make_system(ring, std::move(coeff), std::move(rhs)));
          }
          std::size_t pos = m;
          while (pos > 0) {
            if (++b[pos - 1] < q) break;
            b[pos - 1] = 0;
            --pos;
          }
          if (pos == 0) break;
        }
        std::size_t pos = m * n;
        while (pos > 0) {
          if (++a[pos - 1] < q) break;
          a[pos - 1] = 0;
          --pos;
        }
        if (pos == 0) break;
      }
    }
  return out;
}

std::vector<SystemInstance> sample_ring_systems(const RingDescriptor& ring,
                                                const SurveyOptions& opt, CounterRng& rng) {
  std::vector<SystemInstance> out;
  const auto elems = ring.enumerate();
  const std::size_t q = elems.size();
  for (std::uint64_t t = 0; t < opt.sample; ++t) {
    const std::size_t m = 1 + rng.next() % opt.max_m;
    const std::size_t n = 1 + rng.next() % opt.max_n;
    std::vector<std::vector<RingElement>> coeff(m, std::vector<RingElement>(n));
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < n; ++i) coeff[j][i] = elems[rng.next() % q];
    std::vector<IntVector> rhs;
    for (;;) {
      rhs.clear();
      bool nonzero = false;
      for (std::size_t j = 0; j < m; ++j) {
        const RingElement& b = elems[rng.next() % q];
        nonzero = nonzero || !ring.is_zero(b);
        rhs.push_back(ring.element_coords(b));
      }
      if (nonzero) break;
    }
    out.push_back(make_system(ring, std::move(coeff), std::move(rhs)));
  }
  return out;
}

int run_survey(const SurveyOptions& opt) {
  Json doc;
  doc["format"] = "parreg-survey";
  doc["tool_version"] = kToolVersion;
  doc["seed"] = std::to_string(opt.seed);
  doc["sample"] = std::to_string(opt.sample);
  doc["max_m"] = std::to_string(opt.max_m);
  doc["max_n"] = std::to_string(opt.max_n);

  CounterRng rng(opt.seed);
  Json rings = Json::array();
  Json counterexamples = Json::array();
  std::size_t total_systems = 0;
  std::size_t total_discrepancies = 0;

  for (const auto& name : opt.rings) {
    const auto ring = catalog_ring(name);
    if (!ring) throw ParseError("--ring-catalog", "unknown ring name: " + name);
    if (!ring->cardinality())
      throw ParseError("--ring-catalog", "survey needs finite rings: " + name);

    const std::vector<SystemInstance> systems =
        opt.sample == 0 ? enumerate_ring_systems(*ring, opt.max_m, opt.max_n)
                        : sample_ring_systems(*ring, opt, rng);
    const CrossValidationReport report = cross_validate(systems, Int(opt.cap));

    Json jring;
    jring["ring"] = name;
    jring["systems"] = std::to_string(report.systems);
    jring["partition_regular"] = std::to_string(report.partition_regular);
    jring["not_partition_regular"] = std::to_string(report.not_partition_regular);
    jring["discrepancies"] = std::to_string(report.discrepancies.size());
    rings.push_back(jring);

    total_systems += report.systems;
    total_discrepancies += report.discrepancies.size();

    for (const auto& d : report.discrepancies) {
      Json bundle;
      bundle["ring"] = name;
      bundle["system"] = serialize_system(systems[d.index]);
      bundle["exhaustive_says_partition_regular"] = d.exhaustive_says_pr;
      bundle["constant_solution_exists"] = d.constant_solution_exists;
      if (d.blocking_partition) {
        Json rgs = Json::array();
        for (int digit : d.blocking_partition->rgs) rgs.push_back(std::to_string(digit));
        bundle["blocking_partition"] = rgs;
      }
      counterexamples.push_back(bundle);
    }
  }

  doc["rings"] = rings;
  doc["total_systems"] = std::to_string(total_systems);
  doc["total_discrepancies"] = std::to_string(total_discrepancies);
  if (!counterexamples.empty()) doc["counterexamples"] = counterexamples;
  emit(doc);
  if (total_discrepancies > 0) {
    std::cerr << "cross-validation discrepancies found; this is a bug\n";
    return kExitInternal;
  }
  return kExitOk;
}

int run_selftest() {
  std::size_t failures = 0;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) {
      ++failures;
      std::cerr << "selftest failure: " << what << "\n";
    }
  };

  // parity witness over the integers
  {
    SystemInstance sys = parse_system_text(
        R"({"ring": {"kind": "integers"}, "matrix": [["1", "1"]], "rhs": ["1"]})");
    const Verdict v = decide(sys);
    expect(std::holds_alternative<NotPartitionRegular>(v), "parity verdict");
    if (std::holds_alternative<NotPartitionRegular>(v)) {
      const auto& cert = std::get<NotPartitionRegular>(v).certificate;
      expect(cert.modulus == 2, "parity modulus");
      expect(verify_certificate(sys, cert, BoxBudget{25}).passed, "parity verification");
    }
  }
  // constant solution over the integers
  {
    SystemInstance sys = parse_system_text(
        R"({"ring": {"kind": "integers"}, "matrix": [["1", "1"]], "rhs": ["2"]})");
    const Verdict v = decide(sys);
    expect(std::holds_alternative<PartitionRegular>(v), "constant-solution verdict");
  }
  // witnesses agree with exhaustion on small cyclic rings
  {
    for (const char* name : {"z2", "z3", "z4"}) {
      const auto ring = catalog_ring(name);
      auto systems = enumerate_ring_systems(*ring, 1, 2);
      const CrossValidationReport report = cross_validate(systems, Int(8));
      expect(report.discrepancies.empty(), std::string("cross validation on ") + name);
    }
  }

  Json doc;
  doc["format"] = "parreg-selftest";
  doc["tool_version"] = kToolVersion;
  doc["pass"] = failures == 0;
  emit(doc);
  return failures == 0 ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decide partition regularity of A x = b over rings and modules"};
  app.require_subcommand(1);

  std::string input, certificate;
  long box = -1;
  bool exhaustive = false;
  bool with_check = false;
  long cap = 8;
  SurveyOptions survey;
  std::string ring_list;

  CLI::App* cmd_decide = app.add_subcommand("decide", "decide one system document");
  cmd_decide->add_option("input", input, "system document")->required();
  cmd_decide->add_flag("--check", with_check, "verify the fresh certificate too");
  cmd_decide->add_option("--box", box, "box radius for the embedded check");
  cmd_decide->add_flag("--exhaustive", exhaustive, "exhaustive embedded check");

  CLI::App* cmd_verify = app.add_subcommand("verify", "check a certificate against a system");
  cmd_verify->add_option("input", input, "system document")->required();
  cmd_verify->add_option("certificate", certificate, "certificate document")->required();
  cmd_verify->add_option("--box", box, "solution search box radius");
  cmd_verify->add_flag("--exhaustive", exhaustive, "search all module vectors");

  CLI::App* cmd_exhaust = app.add_subcommand("exhaust", "decide by enumerating partitions");
  cmd_exhaust->add_option("input", input, "system document")->required();
  cmd_exhaust->add_option("--cap", cap, "largest module order to exhaust");

  CLI::App* cmd_survey = app.add_subcommand("survey", "cross-validate whole system families");
  cmd_survey->add_option("--ring-catalog", ring_list, "comma-separated ring names")->required();
  cmd_survey->add_option("--max-m", survey.max_m, "largest equation count");
  cmd_survey->add_option("--max-n", survey.max_n, "largest column count");
  cmd_survey->add_option("--sample", survey.sample, "sample size (0 = enumerate everything)");
  cmd_survey->add_option("--seed", survey.seed, "sampling seed");
  cmd_survey->add_option("--cap", survey.cap, "largest module order to exhaust");

  CLI::App* cmd_selftest = app.add_subcommand("selftest", "run the built-in battery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitMalformed : kExitOk;
  }

  try {
    if (cmd_decide->parsed()) return run_decide(input, with_check, box, exhaustive);
    if (cmd_verify->parsed()) return run_verify(input, certificate, box, exhaustive);
    if (cmd_exhaust->parsed()) return run_exhaust(input, cap);
    if (cmd_survey->parsed()) {
      std::stringstream names(ring_list);
      std::string name;
      while (std::getline(names, name, ','))
        if (!name.empty()) survey.rings.push_back(name);
      return run_survey(survey);
    }
    if (cmd_selftest->parsed()) return run_selftest();
  } catch (const DigestMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDigestMismatch;
  } catch (const InfiniteModule& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cmd_exhaust->parsed() ? kExitModuleUnsuitable : kExitMalformed;
  } catch (const ModuleTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cmd_exhaust->parsed() ? kExitModuleUnsuitable : kExitMalformed;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
  return kExitMalformed;
}
