// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dropin/assignment.hpp"

#include <algorithm>
#include <limits>

namespace dropin {

namespace {

constexpr double kEps = 1e-9;

// Hungarian algorithm with potentials on an n x m cost matrix, n <= m
// (minimizing, every row assigned). O(n^2 m). Returns col_of_row.
std::vector<std::size_t> hungarian(const std::vector<double>& cost, std::size_t n, std::size_t m) {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
  std::vector<std::size_t> p(m + 1, 0), way(m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(m + 1, inf);
    std::vector<char> used(m + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double cur = cost[(i0 - 1) * m + (j - 1)] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> col_of_row(n, 0);
  for (std::size_t j = 1; j <= m; ++j)
    if (p[j] != 0) col_of_row[p[j] - 1] = j - 1;
  return col_of_row;
}

// Effective weights: forbidden, excluded and non-positive pairs weigh 0.
struct Problem {
  const ScoreMatrix& m;
  std::vector<char> excluded;  // rows*cols
  std::vector<char> row_taken, col_taken;

  double weight(std::size_t r, std::size_t c) const {
    const double s = m(r, c);
    if (excluded[r * m.cols() + c] || s == kForbidden || s <= 0.0) return 0.0;
    return s;
  }

  // Best matching over the free rows/cols; positive pairs only.
  Matching solve() const {
    std::vector<std::size_t> rows, cols;
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (!row_taken[r]) rows.push_back(r);
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!col_taken[c]) cols.push_back(c);
    Matching out;
    if (rows.empty() || cols.empty()) return out;
    // The solver wants the shorter side as rows.
    const bool transposed = rows.size() > cols.size();
    const auto& short_side = transposed ? cols : rows;
    const auto& long_side = transposed ? rows : cols;
    const std::size_t n = short_side.size(), k = long_side.size();
    std::vector<double> cost(n * k, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < k; ++j)
        cost[i * k + j] = transposed ? -weight(long_side[j], short_side[i]) : -weight(short_side[i], long_side[j]);
    const auto assign = hungarian(cost, n, k);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t r = transposed ? long_side[assign[i]] : short_side[i];
      const std::size_t c = transposed ? short_side[i] : long_side[assign[i]];
      if (weight(r, c) > 0.0) out.emplace_back(r, c);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  double total(const Matching& pairs) const {
    double s = 0.0;
    for (const auto& [r, c] : pairs) s += weight(r, c);
    return s;
  }
};

}  // namespace

Matching optimize(const ScoreMatrix& m) {
  Problem pb{m, std::vector<char>(m.rows() * m.cols(), 0), std::vector<char>(m.rows(), 0),
             std::vector<char>(m.cols(), 0)};
  Matching current = pb.solve();
  const double best = pb.total(current);
  if (current.empty()) return {};

  // Fix pairs in row-major order: keep a pair whenever some optimum that
  // agrees with every earlier decision contains it.
  Matching chosen;
  double chosen_weight = 0.0;
  for (std::size_t r = 0; r < m.rows() && chosen_weight < best - kEps; ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (pb.row_taken[r] || pb.col_taken[c] || pb.weight(r, c) <= 0.0) continue;
      const bool in_current = std::find(current.begin(), current.end(), std::pair{r, c}) != current.end();
      bool take = in_current;
      Matching rest;
      if (!in_current) {
        pb.row_taken[r] = pb.col_taken[c] = 1;
        rest = pb.solve();
        take = chosen_weight + pb.weight(r, c) + pb.total(rest) >= best - kEps;
        pb.row_taken[r] = pb.col_taken[c] = 0;
      }
      if (take) {
        pb.row_taken[r] = pb.col_taken[c] = 1;
        chosen.emplace_back(r, c);
        chosen_weight += pb.weight(r, c);
        if (!in_current) {
          current = chosen;
          current.insert(current.end(), rest.begin(), rest.end());
        }
        break;  // row r is now matched
      }
      pb.excluded[r * m.cols() + c] = 1;
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

double matching_score(const ScoreMatrix& m, const Matching& matching) {
  Matching sorted = matching;
  std::sort(sorted.begin(), sorted.end());
  double s = 0.0;
  for (const auto& [r, c] : sorted) s += m(r, c);
  return s;
}

}  // namespace dropin
