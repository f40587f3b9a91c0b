// Acceptance suite: each criterion prints one [PASS]/[FAIL] line; the binary
// exits nonzero when any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "parreg/angle.hpp"
#include "parreg/catalog.hpp"
#include "parreg/document.hpp"
#include "parreg/oracle.hpp"
#include "parreg/rng.hpp"
#include "parreg/smith.hpp"
#include "parreg/witness.hpp"

using namespace parreg;

namespace {

RingElement scalar(long v) { return RingElement(Int(v)); }

struct CertifiedSystem {
  SystemInstance sys;
  WitnessCertificate cert;
};

std::vector<CertifiedSystem> g_certificates;  // collected by criteria 1-3

struct Outcome {
  bool pass = false;
  std::string detail;
};

SystemInstance random_z_system(CounterRng& rng) {
  const std::size_t m = 1 + rng.next() % 3;
  const std::size_t n = 1 + rng.next() % 4;
  std::vector<std::vector<RingElement>> coeff(m, std::vector<RingElement>(n));
  for (auto& row : coeff)
    for (auto& e : row) e = scalar(rng.uniform(-5, 5));
  std::vector<IntVector> rhs;
  for (;;) {
    rhs.clear();
    bool nonzero = false;
    for (std::size_t j = 0; j < m; ++j) {
      long b = rng.uniform(-10, 10);
      nonzero = nonzero || b != 0;
      rhs.push_back(IntVector{Int(b)});
    }
    if (nonzero) break;
  }
  return make_system(RingDescriptor::integers(), std::move(coeff), std::move(rhs));
}

Outcome criterion1_theorem1_random_systems() {
  CounterRng rng(1);
  std::size_t witnesses = 0, constants = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    const SystemInstance sys = random_z_system(rng);

    // independent oracle: the unique candidate r = b_j / s_j row check
    std::vector<std::vector<long>> a;
    std::vector<long> b;
    for (const auto& row : sys.coefficients) {
      std::vector<long> r;
      for (const auto& e : row) r.push_back(e.scalar().get_si());
      a.push_back(r);
    }
    for (const auto& v : sys.rhs) b.push_back(v[0].get_si());
    const auto direct = testoracle::constant_solution_direct(a, b);

    const Verdict verdict = decide(sys);
    if (std::holds_alternative<PartitionRegular>(verdict)) {
      ++constants;
      if (!direct) return {false, "decide found a constant solution the oracle rejects"};
      const IntVector& r = std::get<PartitionRegular>(verdict).constant_solution;
      if (r != IntVector{*direct}) return {false, "constant solutions disagree"};
    } else {
      ++witnesses;
      if (direct) return {false, "decide missed the constant solution"};
      const WitnessCertificate& cert = std::get<NotPartitionRegular>(verdict).certificate;
      const CheckReport report = verify_certificate(sys, cert, BoxBudget{25});
      if (!report.passed) return {false, "a synthesized certificate failed verification"};
      g_certificates.push_back({sys, cert});
    }
  }
  std::ostringstream detail;
  detail << witnesses << " witnesses and " << constants
         << " constant solutions over 1000 systems, all box-verified";
  return {true, detail.str()};
}

Outcome criterion2_theorem2_exhaustive() {
  const std::vector<std::string> names{"z2", "z3", "z4", "z2xz2", "f4", "z2dual", "z6"};
  std::size_t total = 0;
  for (const auto& name : names) {
    const RingDescriptor ring = *catalog_ring(name);
    const auto elems = ring.enumerate();
    for (const auto& a0 : elems)
      for (const auto& a1 : elems)
        for (const auto& b : elems) {
          if (ring.is_zero(b)) continue;
          const SystemInstance sys =
              make_system(ring, {{a0, a1}}, {ring.element_coords(b)});
          const ExhaustiveResult ex = exhaustive_pr(sys, Int(8));
          const bool constant = find_constant_solution(sys).has_value();
          if (ex.is_partition_regular != constant) {
            std::ostringstream detail;
            detail << "discrepancy over " << name << ": exhaustive says "
                   << (ex.is_partition_regular ? "regular" : "blocked") << ", constant test says "
                   << (constant ? "solvable" : "unsolvable");
            return {false, detail.str()};
          }
          if (!constant) {
            const Verdict v = decide(sys);
            if (!std::holds_alternative<NotPartitionRegular>(v))
              return {false, "decide disagrees with the constant-solution test"};
            g_certificates.push_back({sys, std::get<NotPartitionRegular>(v).certificate});
          }
          ++total;
        }
  }
  std::ostringstream detail;
  detail << total << " systems across " << names.size() << " rings, zero discrepancies";
  return {true, detail.str()};
}

Outcome criterion3_module_spot_checks() {
  // M = Z_4 over the integers with A = [[2, 2]], b = [2]
  {
    ModuleDescriptor m = ModuleDescriptor::explicit_module(
        RingDescriptor::integers(), {Int(4)}, {IntMatrix::identity(1)});
    const SystemInstance sys = make_system(RingDescriptor::integers(), m,
                                           {{scalar(2), scalar(2)}}, {IntVector{Int(2)}});
    const Verdict v = decide(sys);
    if (!std::holds_alternative<NotPartitionRegular>(v))
      return {false, "Z_4 over Z: expected a witness"};
    const WitnessCertificate& cert = std::get<NotPartitionRegular>(v).certificate;
    const auto c0 = colour(cert, {Int(0)});
    const auto c1 = colour(cert, {Int(1)});
    const auto c2 = colour(cert, {Int(2)});
    const auto c3 = colour(cert, {Int(3)});
    if (!(c0 == c2 && c1 == c3 && c0 != c1))
      return {false, "Z_4 over Z: classes are not {0,2} | {1,3}"};
    if (!verify_certificate(sys, cert, ExhaustiveBudget{}).passed)
      return {false, "Z_4 over Z: exhaustive verification failed"};
    g_certificates.push_back({sys, cert});
  }
  // Z_2[x]/(x^2) over itself with A = [[x, x]], b = [x]
  {
    const RingDescriptor dual = *catalog_ring("z2dual");
    const SystemInstance sys = make_system(
        dual, {{RingElement(IntVector{0, 1}), RingElement(IntVector{0, 1})}},
        {IntVector{Int(0), Int(1)}});
    const Verdict v = decide(sys);
    if (!std::holds_alternative<NotPartitionRegular>(v))
      return {false, "dual numbers: expected a witness"};
    const WitnessCertificate& cert = std::get<NotPartitionRegular>(v).certificate;
    const IntVector zero{Int(0), Int(0)}, one{Int(1), Int(0)}, x{Int(0), Int(1)},
        onex{Int(1), Int(1)};
    if (!(colour(cert, zero) == colour(cert, x) && colour(cert, one) == colour(cert, onex) &&
          colour(cert, zero) != colour(cert, one)))
      return {false, "dual numbers: classes are not {0,x} | {1,1+x}"};
    if (!verify_certificate(sys, cert, ExhaustiveBudget{}).passed)
      return {false, "dual numbers: exhaustive verification failed"};
    g_certificates.push_back({sys, cert});
  }
  return {true, "induced classes match on both module examples, verified exhaustively"};
}

Outcome criterion4_smith_properties() {
  CounterRng rng(2);
  for (int iter = 0; iter < 500; ++iter) {
    const std::size_t rows = 1 + rng.next() % 6;
    const std::size_t cols = 1 + rng.next() % 6;
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Int(rng.uniform(-20, 20));
    const SmithDecomposition s = snf(m);
    if (s.u * m * s.v != s.d) return {false, "U*M*V != D"};
    if (abs(testoracle::det_bareiss(s.u)) != 1) return {false, "U is not unimodular"};
    if (abs(testoracle::det_bareiss(s.v)) != 1) return {false, "V is not unimodular"};
    const IntVector diag = smith_diagonal(s.d);
    for (std::size_t i = 0; i < s.d.rows(); ++i)
      for (std::size_t j = 0; j < s.d.cols(); ++j)
        if (i != j && s.d.at(i, j) != 0) return {false, "D is not diagonal"};
    for (std::size_t i = 0; i < diag.size(); ++i) {
      if (diag[i] < 0) return {false, "negative invariant factor"};
      if (i + 1 < diag.size() && !divides_exactly(diag[i], diag[i + 1]))
        return {false, "divisibility chain broken"};
    }
  }
  return {true, "500 random matrices up to 6x6, all transforms unimodular and chained"};
}

Outcome criterion5_certificate_congruences() {
  if (g_certificates.empty()) return {false, "no certificates were collected"};
  std::size_t checked = 0;
  for (const auto& [sys, cert] : g_certificates) {
    for (const auto& check : certificate_checks(sys, cert))
      if (!check.passed) {
        std::ostringstream detail;
        detail << "certificate congruence " << check.name << " failed";
        return {false, detail.str()};
      }
    ++checked;
  }
  std::ostringstream detail;
  detail << "all congruence families hold on " << checked << " synthesized certificates";
  return {true, detail.str()};
}

Outcome criterion6_interval_map() {
  // same bucket forces circle distance below one bucket width
  for (long den = 1; den <= 64; ++den)
    for (long d = 1; d <= 64; ++d) {
      std::vector<long> bucket(den);
      for (long a = 0; a < den; ++a)
        bucket[a] = interval_colour(RationalAngle(a, den), d).get_si();
      for (long a = 0; a < den; ++a)
        for (long b = a + 1; b < den; ++b) {
          if (bucket[a] != bucket[b]) continue;
          const long diff = b - a;
          const long circ = std::min(diff, den - diff);
          if (!(circ * d < den)) {
            std::ostringstream detail;
            detail << "bucket " << bucket[a] << " of " << d << " holds " << a << "/" << den
                   << " and " << b << "/" << den << " at distance >= 1/d";
            return {false, detail.str()};
          }
        }
    }

  // required_d is minimal for n/d < min(delta, 1 - delta)
  for (long den = 2; den <= 64; ++den)
    for (long num = 1; num < den; ++num)
      for (std::size_t n = 1; n <= 8; ++n) {
        const RationalAngle delta(num, den);
        const RationalAngle dist = delta.distance_to_zero();
        const Int d = required_d(n, delta);
        auto satisfies = [&](const Int& cand) {
          return Int(static_cast<long>(n)) * dist.denominator() < dist.numerator() * cand;
        };
        if (!satisfies(d)) return {false, "required_d output too small"};
        if (satisfies(d - 1)) return {false, "required_d output not minimal"};
      }
  return {true, "bucket bound and minimal bucket counts exact up to denominator 64"};
}

Outcome criterion7_bell_numbers() {
  const auto bell = testoracle::bell_numbers(10);
  if (bell[10] != 115975) return {false, "Bell oracle disagrees with the frozen value"};
  for (std::size_t q = 1; q <= 10; ++q) {
    PartitionEnumerator en(q);
    SetPartition p;
    std::uint64_t count = 0;
    while (en.next(p)) ++count;
    if (count != bell[q]) {
      std::ostringstream detail;
      detail << "q = " << q << " produced " << count << " partitions, expected " << bell[q];
      return {false, detail.str()};
    }
  }
  return {true, "partition counts match Bell numbers through q = 10 (115975 at q = 10)"};
}

struct Criterion {
  std::string name;
  std::function<Outcome()> run;
  double time_limit_seconds;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"theorem-1 equivalence on 1000 random integer systems", criterion1_theorem1_random_systems,
       60.0},
      {"theorem-2 equivalence, exhaustive over seven finite rings",
       criterion2_theorem2_exhaustive, 120.0},
      {"theorem-3 module spot checks", criterion3_module_spot_checks, 120.0},
      {"Smith normal form property suite", criterion4_smith_properties, 10.0},
      {"colouring soundness congruences", criterion5_certificate_congruences, 120.0},
      {"interval map bound and minimal bucket counts", criterion6_interval_map, 120.0},
      {"Bell number partition counts", criterion7_bell_numbers, 5.0},
  };

  bool all_pass = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > criteria[i].time_limit_seconds) {
      outcome.pass = false;
      outcome.detail += " [time limit exceeded]";
    }
    all_pass = all_pass && outcome.pass;
    std::printf("[%s] criterion %zu: %s: %s (%.2fs, limit %.0fs)\n",
                outcome.pass ? "PASS" : "FAIL", i + 1, criteria[i].name.c_str(),
                outcome.detail.c_str(), seconds, criteria[i].time_limit_seconds);
  }
  return all_pass ? 0 : 1;
}
