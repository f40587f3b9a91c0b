// Test-only independent oracles. Nothing here may call into the library
// code paths it is used to check.
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "parreg/int_matrix.hpp"

namespace testoracle {

using parreg::Int;
using parreg::IntMatrix;
using parreg::IntVector;

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Int det_bareiss(IntMatrix a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::logic_error("det of non-square matrix");
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a.at(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      a.swap_rows(k, pivot);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

/// Bell numbers B(0..upto) via the Bell triangle.
inline std::vector<std::uint64_t> bell_numbers(std::size_t upto) {
  std::vector<std::uint64_t> bell{1};
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 1; i <= upto; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t v : row) next.push_back(next.back() + v);
    bell.push_back(next.front());
    row = std::move(next);
  }
  return bell;
}

/// Order of the subgroup generated by `gens` inside the direct product of
/// cyclic groups Z_orders[0] x ... (plain tuple arithmetic, BFS closure).
inline std::size_t tuple_subgroup_order(const std::vector<long>& orders,
                                        const std::vector<std::vector<long>>& gens) {
  auto reduce = [&](std::vector<long> t) {
    for (std::size_t i = 0; i < orders.size(); ++i) {
      t[i] %= orders[i];
      if (t[i] < 0) t[i] += orders[i];
    }
    return t;
  };
  std::set<std::vector<long>> seen;
  std::vector<std::vector<long>> frontier;
  std::vector<long> zero(orders.size(), 0);
  seen.insert(zero);
  frontier.push_back(zero);
  while (!frontier.empty()) {
    std::vector<std::vector<long>> next_frontier;
    for (const auto& t : frontier) {
      for (const auto& g : gens) {
        std::vector<long> s(t);
        for (std::size_t i = 0; i < s.size(); ++i) s[i] += g[i];
        s = reduce(s);
        if (seen.insert(s).second) next_frontier.push_back(s);
      }
    }
    frontier = std::move(next_frontier);
  }
  return seen.size();
}

/// Unique candidate check for a constant integer solution of r*s = b where
/// s is the vector of row sums of A. Independent of any matrix factorization.
inline std::optional<Int> constant_solution_direct(
    const std::vector<std::vector<long>>& a, const std::vector<long>& b) {
  const std::size_t m = a.size();
  std::vector<Int> s(m, 0);
  for (std::size_t j = 0; j < m; ++j)
    for (long v : a[j]) s[j] += v;
  std::size_t pivot = m;
  for (std::size_t j = 0; j < m; ++j)
    if (s[j] != 0) { pivot = j; break; }
  if (pivot == m) return std::nullopt;  // s = 0 and b != 0: no constant solution
  if (!mpz_divisible_p(Int(b[pivot]).get_mpz_t(), s[pivot].get_mpz_t()))
    return std::nullopt;
  Int r = Int(b[pivot]) / s[pivot];
  for (std::size_t j = 0; j < m; ++j)
    if (s[j] * r != b[j]) return std::nullopt;
  return r;
}

/// Brute-force box enumeration of solutions of A*x = b over Z with every
/// coordinate in [-radius, radius]; plain nested odometer, no pruning.
inline std::vector<std::vector<long>> box_solutions_naive(
    const std::vector<std::vector<long>>& a, const std::vector<long>& b, long radius) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a.front().size();
  std::vector<std::vector<long>> out;
  std::vector<long> x(n, -radius);
  while (true) {
    bool ok = true;
    for (std::size_t j = 0; j < m && ok; ++j) {
      long long acc = 0;
      for (std::size_t i = 0; i < n; ++i) acc += static_cast<long long>(a[j][i]) * x[i];
      ok = (acc == b[j]);
    }
    if (ok) out.push_back(x);
    std::size_t pos = n;
    while (pos > 0) {
      if (x[pos - 1] < radius) { ++x[pos - 1]; break; }
      x[pos - 1] = -radius;
      --pos;
    }
    if (pos == 0) break;
  }
  return out;
}

/// gcd of all k x k minors of a matrix (0 when every minor vanishes).
inline Int minor_gcd(const IntMatrix& m, std::size_t k) {
  std::vector<std::size_t> ri(k), ci(k);
  Int g = 0;
  std::vector<std::size_t> rows(m.rows()), cols(m.cols());
  // enumerate k-subsets of rows and columns by odometer over sorted indices
  std::vector<std::size_t> rsel(k), csel(k);
  for (std::size_t i = 0; i < k; ++i) rsel[i] = i;
  auto advance = [](std::vector<std::size_t>& sel, std::size_t limit) {
    std::size_t k2 = sel.size();
    std::size_t i = k2;
    while (i > 0) {
      --i;
      if (sel[i] + (k2 - i) <= limit) {
        ++sel[i];
        for (std::size_t j = i + 1; j < k2; ++j) sel[j] = sel[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  if (k > m.rows() || k > m.cols()) return 0;
  do {
    for (std::size_t i = 0; i < k; ++i) csel[i] = i;
    do {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = m.at(rsel[i], csel[j]);
      Int d = det_bareiss(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    } while (advance(csel, m.cols() - 1));
  } while (advance(rsel, m.rows() - 1));
  return g;
}

}  // namespace testoracle
