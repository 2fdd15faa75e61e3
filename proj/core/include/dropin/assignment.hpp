// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

// Maximum-weight bipartite matching with forbidden pairs.

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace dropin {

/// Marks a pair that must never be matched. Matrices start filled with it.
inline constexpr double kForbidden = -1.0;

class ScoreMatrix {
 public:
  ScoreMatrix() = default;
  ScoreMatrix(std::size_t rows, std::size_t cols, double fill = kForbidden)
      : rows_(rows), cols_(cols), v_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return v_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return v_[r * cols_ + c]; }

  bool operator==(const ScoreMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> v_;
};

/// (row, col) pairs sorted row-major.
using Matching = std::vector<std::pair<std::size_t, std::size_t>>;

/// A one-to-one partial matching of maximum total score that uses no
/// forbidden pair. Pairs scoring <= 0 never raise the total and are left
/// out. Among optimal matchings the result is the row-major
/// lexicographically smallest: the earliest pair that can belong to an
/// optimum is always taken.
Matching optimize(const ScoreMatrix& m);

/// Sum of the matched scores, accumulated in row-major order.
double matching_score(const ScoreMatrix& m, const Matching& matching);

}  // namespace dropin
