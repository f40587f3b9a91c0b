#include "parreg/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "parreg/document.hpp"
#include "parreg/errors.hpp"

namespace parreg {

std::size_t SetPartition::class_count() const {
  int maxc = -1;
  for (int d : rgs) maxc = std::max(maxc, d);
  return static_cast<std::size_t>(maxc + 1);
}

std::vector<std::vector<std::size_t>> SetPartition::classes() const {
  std::vector<std::vector<std::size_t>> out(class_count());
  for (std::size_t i = 0; i < rgs.size(); ++i)
    out[static_cast<std::size_t>(rgs[i])].push_back(i);
  return out;
}

PartitionEnumerator::PartitionEnumerator(std::size_t q) : q_(q), rgs_(q, 0) {}

bool PartitionEnumerator::next(SetPartition& out) {
  if (done_) return false;
  if (first_) {
    first_ = false;
    out.rgs = rgs_;
    return true;
  }
  // lexicographic successor: bump the rightmost digit that may grow,
  // reset everything after it
  std::size_t i = q_;
  while (i-- > 1) {
    int maxbefore = 0;
    for (std::size_t j = 0; j < i; ++j) maxbefore = std::max(maxbefore, rgs_[j]);
    if (rgs_[i] <= maxbefore) {
      ++rgs_[i];
      for (std::size_t j = i + 1; j < q_; ++j) rgs_[j] = 0;
      out.rgs = rgs_;
      return true;
    }
  }
  done_ = true;
  return false;
}

namespace {

struct ColumnEntry {
  std::size_t row;
  std::size_t col;
};

// Depth-first enumeration of integer solutions in lexicographic order.
// Variables with some row ending at them are forced by that row; the rest
// range over [-radius, radius]. With clamp_determined, forced values outside
// the box are discarded (the strict box semantics); without it they are kept
// (every emitted vector still solves the system exactly).
template <typename T>
class BoxSearch {
public:
  BoxSearch(std::vector<std::vector<T>> a, std::vector<T> b, long radius,
            bool clamp_determined)
      : a_(std::move(a)), b_(std::move(b)), radius_(radius), clamp_(clamp_determined) {
    m_ = a_.size();
    n_ = m_ == 0 ? 0 : a_.front().size();
    x_.resize(n_);
    partial_.resize(m_, T(0));
    rows_ending_at_.resize(n_);
    for (std::size_t j = 0; j < m_; ++j) {
      std::size_t last = n_;
      for (std::size_t i = n_; i-- > 0;)
        if (a_[j][i] != 0) {
          last = i;
          break;
        }
      if (last == n_) {
        if (b_[j] != 0) infeasible_ = true;  // zero row with nonzero rhs
      } else {
        rows_ending_at_[last].push_back(j);
      }
    }
  }

  void run(const std::function<void(const std::vector<T>&)>& emit) {
    if (infeasible_) return;
    emit_ = &emit;
    dfs(0);
  }

private:
  void assign(std::size_t t, const T& v) {
    x_[t] = v;
    for (std::size_t j = 0; j < m_; ++j)
      if (a_[j][t] != 0) partial_[j] += a_[j][t] * v;
  }
  void unassign(std::size_t t, const T& v) {
    for (std::size_t j = 0; j < m_; ++j)
      if (a_[j][t] != 0) partial_[j] -= a_[j][t] * v;
  }

  void dfs(std::size_t t) {
    if (t == n_) {
      (*emit_)(x_);
      return;
    }
    const auto& enders = rows_ending_at_[t];
    if (!enders.empty()) {
      const std::size_t j0 = enders.front();
      T need = b_[j0] - partial_[j0];
      if (need % a_[j0][t] != 0) return;
      T v = need / a_[j0][t];
      if (clamp_ && (v > radius_ || v < -radius_)) return;
      for (std::size_t idx = 1; idx < enders.size(); ++idx) {
        const std::size_t j = enders[idx];
        if (partial_[j] + a_[j][t] * v != b_[j]) return;
      }
      assign(t, v);
      dfs(t + 1);
      unassign(t, v);
      return;
    }
    for (long w = -radius_; w <= radius_; ++w) {
      T v(w);
      assign(t, v);
      dfs(t + 1);
      unassign(t, v);
    }
  }

  std::vector<std::vector<T>> a_;
  std::vector<T> b_;
  long radius_;
  bool clamp_;
  std::size_t m_ = 0, n_ = 0;
  std::vector<T> x_;
  std::vector<T> partial_;
  std::vector<std::vector<std::size_t>> rows_ending_at_;
  bool infeasible_ = false;
  const std::function<void(const std::vector<T>&)>* emit_ = nullptr;
};

bool is_plain_integers_system(const SystemInstance& sys) {
  return sys.ring.is_integers() && sys.module.generator_count() == 1 &&
         sys.module.additive_group().relations.rows() == 0;
}

// All coefficient magnitudes stay below this and the search fits int64.
bool fits_fast_path(const SystemInstance& sys, long radius) {
  Int max_a = 0, max_b = 0;
  for (const auto& row : sys.coefficients)
    for (const auto& e : row) {
      Int v = abs(e.scalar());
      if (v > max_a) max_a = v;
    }
  for (const auto& b : sys.rhs) {
    Int v = abs(b[0]);
    if (v > max_b) max_b = v;
  }
  const std::size_t n = sys.column_count();
  // forced values can chain; each level multiplies by at most n * max_a
  Int value_bound = std::max(Int(radius), Int(1));
  for (std::size_t t = 0; t < n; ++t) {
    Int forced = max_b + Int(static_cast<unsigned long>(n)) * max_a * value_bound;
    if (forced > value_bound) value_bound = forced;
  }
  Int partial_bound = Int(static_cast<unsigned long>(n)) * max_a * value_bound + max_b;
  return partial_bound < Int("2305843009213693952");  // 2^61
}

void enumerate_box(const SystemInstance& sys, long radius, bool clamp,
                   const std::function<void(const IntVector&)>& emit) {
  if (!is_plain_integers_system(sys))
    throw Error("box enumeration requires the system to be over Z with M = Z");
  if (radius < 0) throw Error("box radius must be nonnegative");
  const std::size_t m = sys.equation_count();
  const std::size_t n = sys.column_count();

  if (fits_fast_path(sys, radius)) {
    std::vector<std::vector<long long>> a(m, std::vector<long long>(n));
    std::vector<long long> b(m);
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t i = 0; i < n; ++i)
        a[j][i] = static_cast<long long>(sys.coefficients[j][i].scalar().get_si());
      b[j] = static_cast<long long>(sys.rhs[j][0].get_si());
    }
    BoxSearch<long long> search(std::move(a), std::move(b), radius, clamp);
    IntVector buffer(n);
    search.run([&](const std::vector<long long>& x) {
      for (std::size_t i = 0; i < n; ++i) buffer[i] = Int(static_cast<long>(x[i]));
      emit(buffer);
    });
    return;
  }

  std::vector<std::vector<Int>> a(m, std::vector<Int>(n));
  std::vector<Int> b(m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) a[j][i] = sys.coefficients[j][i].scalar();
    b[j] = sys.rhs[j][0];
  }
  BoxSearch<Int> search(std::move(a), std::move(b), radius, clamp);
  search.run(emit);
}

}  // namespace

std::vector<IntVector> solutions_in_box(const SystemInstance& sys, long radius) {
  std::vector<IntVector> out;
  enumerate_box(sys, radius, /*clamp=*/true, [&](const IntVector& x) { out.push_back(x); });
  return out;
}

FiniteModuleIndex::FiniteModuleIndex(const ModuleDescriptor& m, const std::optional<Int>& cap)
    : elements_(m.elements(cap)), gens_(m.generator_count()) {
  box_.resize(gens_);
  for (std::size_t j = 0; j < gens_; ++j) box_[j] = m.relation_basis().at(j, j);
}

std::size_t FiniteModuleIndex::index_of(const IntVector& canonical) const {
  Int idx = 0;
  for (std::size_t j = 0; j < gens_; ++j) idx = idx * box_[j] + canonical[j];
  if (!idx.fits_ulong_p()) throw InternalError("module index overflow");
  return idx.get_ui();
}

namespace {

struct FiniteSystemTables {
  FiniteModuleIndex index;
  std::vector<std::vector<std::vector<std::size_t>>> action;  // [row][col][element]
  std::vector<std::vector<std::size_t>> add;                  // [element][element]
  std::vector<std::size_t> rhs;                               // per equation

  explicit FiniteSystemTables(const SystemInstance& sys, const std::optional<Int>& cap)
      : index(sys.module, cap) {
    const std::size_t q = index.size();
    const std::size_t m = sys.equation_count();
    const std::size_t n = sys.column_count();

    add.assign(q, std::vector<std::size_t>(q));
    for (std::size_t e = 0; e < q; ++e)
      for (std::size_t f = 0; f < q; ++f)
        add[e][f] = index.index_of(sys.module.add(index.coords(e), index.coords(f)));

    action.assign(m, std::vector<std::vector<std::size_t>>(n, std::vector<std::size_t>(q)));
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < n; ++i) {
        const IntMatrix act =
            sys.module.action_matrix(sys.ring.element_coords(sys.coefficients[j][i]));
        for (std::size_t e = 0; e < q; ++e)
          action[j][i][e] = index.index_of(sys.module.reduce(act.apply(index.coords(e))));
      }

    rhs.resize(m);
    for (std::size_t j = 0; j < m; ++j) rhs[j] = index.index_of(sys.rhs[j]);
  }

  std::size_t zero_index() const {
    return 0;  // the zero vector is the first box element
  }

  std::vector<std::vector<std::size_t>> all_solutions(const SystemInstance& sys) const {
    const std::size_t q = index.size();
    const std::size_t m = sys.equation_count();
    const std::size_t n = sys.column_count();
    std::vector<std::vector<std::size_t>> sols;
    std::vector<std::size_t> x(n, 0);
    for (;;) {
      bool ok = true;
      for (std::size_t j = 0; j < m && ok; ++j) {
        std::size_t acc = zero_index();
        for (std::size_t i = 0; i < n; ++i) acc = add[acc][action[j][i][x[i]]];
        ok = (acc == rhs[j]);
      }
      if (ok) sols.push_back(x);
      if (n == 0) break;
      std::size_t pos = n;
      while (pos > 0) {
        if (++x[pos - 1] < q) break;
        x[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
    }
    return sols;
  }
};

}  // namespace

std::vector<std::vector<IntVector>> solutions_finite(const SystemInstance& sys) {
  FiniteSystemTables tables(sys, std::nullopt);
  std::vector<std::vector<IntVector>> out;
  for (const auto& sol : tables.all_solutions(sys)) {
    std::vector<IntVector> vec;
    vec.reserve(sol.size());
    for (std::size_t e : sol) vec.push_back(tables.index.coords(e));
    out.push_back(std::move(vec));
  }
  return out;
}

CheckReport verify_certificate(const SystemInstance& sys, const WitnessCertificate& cert,
                               const VerifyBudget& budget) {
  if (cert.system_digest != system_digest(sys))
    throw DigestMismatch("certificate digest " + cert.system_digest +
                         " does not match system digest " + system_digest(sys));

  CheckReport report;
  report.algebraic_checks = certificate_checks(sys, cert);
  bool algebra_ok = true;
  for (const auto& c : report.algebraic_checks) algebra_ok = algebra_ok && c.passed;

  bool shape_ok = !report.algebraic_checks.empty() && report.algebraic_checks.front().passed;

  auto is_monochromatic = [&](const std::vector<IntVector>& x) {
    if (x.empty()) return true;
    const std::vector<Int> first = colour(cert, x.front());
    for (const auto& entry : x)
      if (colour(cert, entry) != first) return false;
    return true;
  };

  if (std::holds_alternative<BoxBudget>(budget)) {
    const long radius = std::get<BoxBudget>(budget).radius;
    report.search_budget = "box " + std::to_string(radius);
    enumerate_box(sys, radius, /*clamp=*/false, [&](const IntVector& x) {
      ++report.solutions_examined;
      if (report.monochromatic_found || !shape_ok) return;
      std::vector<IntVector> entries;
      entries.reserve(x.size());
      for (const auto& xi : x) entries.push_back(IntVector{xi});
      if (is_monochromatic(entries)) report.monochromatic_found = entries;
    });
  } else {
    report.search_budget = "exhaustive";
    for (const auto& sol : solutions_finite(sys)) {
      ++report.solutions_examined;
      if (report.monochromatic_found || !shape_ok) continue;
      if (is_monochromatic(sol)) report.monochromatic_found = sol;
    }
  }

  report.passed = algebra_ok && !report.monochromatic_found;
  return report;
}

ExhaustiveResult exhaustive_pr(const SystemInstance& sys, const Int& cap) {
  FiniteSystemTables tables(sys, cap);
  const std::size_t q = tables.index.size();
  const auto sols = tables.all_solutions(sys);
  const std::size_t n = sys.column_count();

  PartitionEnumerator partitions(q);
  SetPartition p;
  while (partitions.next(p)) {
    bool has_monochromatic = false;
    for (const auto& sol : sols) {
      bool mono = true;
      for (std::size_t i = 1; i < n && mono; ++i)
        mono = (p.rgs[sol[i]] == p.rgs[sol[0]]);
      if (mono) {
        has_monochromatic = true;
        break;
      }
    }
    if (!has_monochromatic) return ExhaustiveResult{false, p};
  }
  return ExhaustiveResult{true, std::nullopt};
}

CrossValidationReport cross_validate(const std::vector<SystemInstance>& catalog,
                                     const Int& cap) {
  CrossValidationReport report;
  for (std::size_t idx = 0; idx < catalog.size(); ++idx) {
    const SystemInstance& sys = catalog[idx];
    const ExhaustiveResult ex = exhaustive_pr(sys, cap);
    const auto constant = find_constant_solution(sys);
    ++report.systems;
    if (ex.is_partition_regular)
      ++report.partition_regular;
    else
      ++report.not_partition_regular;
    if (ex.is_partition_regular != constant.has_value()) {
      Discrepancy d;
      d.index = idx;
      d.exhaustive_says_pr = ex.is_partition_regular;
      d.constant_solution_exists = constant.has_value();
      d.blocking_partition = ex.blocking_partition;
      d.constant_solution = constant;
      report.discrepancies.push_back(std::move(d));
    }
  }
  return report;
}

}  // namespace parreg
