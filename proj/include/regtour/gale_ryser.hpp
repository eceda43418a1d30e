#pragma once

// Gale-Ryser feasibility for bounded-entry matrices with prescribed row and
// column sums, and a deterministic 0/1 realizer. Only the 0/1 realization is
// implemented; the predicate covers the general entry bound.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace regtour {

class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions must be nonnegative");
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  int at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
              static_cast<std::size_t>(j)];
  }

  void set(int i, int j, int v) {
    if (v != 0 && v != 1) throw std::invalid_argument("binary matrix entry outside {0,1}");
    a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j)] =
        static_cast<std::uint8_t>(v);
  }

  std::vector<int> row_sums() const {
    std::vector<int> s(static_cast<std::size_t>(rows_), 0);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) s[static_cast<std::size_t>(i)] += at(i, j);
    return s;
  }

  std::vector<int> col_sums() const {
    std::vector<int> s(static_cast<std::size_t>(cols_), 0);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) s[static_cast<std::size_t>(j)] += at(i, j);
    return s;
  }

  bool operator==(const BinaryMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint8_t> a_;
};

/// True iff a matrix with entries in {0,...,max_entry}, row sums `row_sums`
/// and column sums `col_sums` exists: the sums agree and every prefix of the
/// column sums satisfies sum_{i<=k} q_i <= sum_i min(p_i, max_entry * k).
/// `col_sums` must be nonincreasing.
inline bool feasible(const std::vector<int>& row_sums, const std::vector<int>& col_sums,
                     int max_entry) {
  if (max_entry < 1) throw std::invalid_argument("feasible: entry bound must be >= 1");
  for (int p : row_sums)
    if (p < 0) throw std::invalid_argument("feasible: negative row sum");
  for (std::size_t j = 0; j < col_sums.size(); ++j) {
    if (col_sums[j] < 0) throw std::invalid_argument("feasible: negative column sum");
    if (j > 0 && col_sums[j - 1] < col_sums[j])
      throw std::invalid_argument("feasible: column sums must be nonincreasing");
  }
  const long long total_p = std::accumulate(row_sums.begin(), row_sums.end(), 0LL);
  const long long total_q = std::accumulate(col_sums.begin(), col_sums.end(), 0LL);
  if (total_p != total_q) return false;
  long long prefix_q = 0;
  for (std::size_t k = 1; k <= col_sums.size(); ++k) {
    prefix_q += col_sums[k - 1];
    long long capped = 0;
    for (int p : row_sums) capped += std::min<long long>(p, max_entry * static_cast<long long>(k));
    if (prefix_q > capped) return false;
  }
  return true;
}

/// Deterministic 0/1 realization: columns are filled in the given order, each
/// column placing its ones in the rows of largest remaining demand, ties
/// broken by lowest row index. Output sums are re-checked before returning.
inline BinaryMatrix realize01(const std::vector<int>& row_sums, const std::vector<int>& col_sums) {
  if (!feasible(row_sums, col_sums, 1))
    throw std::invalid_argument("realize01: row/column sums are not realizable by a 0/1 matrix");
  const int m = static_cast<int>(row_sums.size());
  const int n = static_cast<int>(col_sums.size());
  BinaryMatrix c(m, n);
  std::vector<int> demand = row_sums;
  std::vector<int> order(static_cast<std::size_t>(m));
  for (int j = 0; j < n; ++j) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return demand[static_cast<std::size_t>(a)] > demand[static_cast<std::size_t>(b)];
    });
    const int q = col_sums[static_cast<std::size_t>(j)];
    if (q > m) throw std::logic_error("realize01: column demand exceeds row count");
    for (int k = 0; k < q; ++k) {
      const int row = order[static_cast<std::size_t>(k)];
      if (demand[static_cast<std::size_t>(row)] <= 0)
        throw std::logic_error("realize01: ran out of row demand on a feasible instance");
      c.set(row, j, 1);
      demand[static_cast<std::size_t>(row)] -= 1;
    }
  }
  if (c.row_sums() != row_sums || c.col_sums() != col_sums)
    throw std::logic_error("realize01: sum post-check failed on a feasible instance");
  return c;
}

}  // namespace regtour
