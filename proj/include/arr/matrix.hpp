#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <map>
#include <vector>

#include "arr/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<arr::Rat> {
  using Real = arr::Rat;
  using NonInteger = arr::Rat;
  using Literal = arr::Rat;
  using Nested = arr::Rat;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 10,
    MulCost = 10
  };
  static inline Real epsilon() { return arr::Rat(0); }
  static inline Real dummy_precision() { return arr::Rat(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<arr::GF> {
  using Real = arr::GF;
  using NonInteger = arr::GF;
  using Literal = arr::GF;
  using Nested = arr::GF;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 2
  };
  static inline Real epsilon() { return arr::GF(0); }
  static inline Real dummy_precision() { return arr::GF(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace arr {

template <class K>
using Mat = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;
template <class K>
using Col = Eigen::Matrix<K, Eigen::Dynamic, 1>;

// Row echelon form (in place), returns pivot columns.  Exact fields only:
// any nonzero entry is a valid pivot; we prefer "simple" ones for Rat.
template <class K>
std::vector<int> rref_inplace(Mat<K>& m) {
  const int rows = static_cast<int>(m.rows()), cols = static_cast<int>(m.cols());
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (!is_zero(m(i, c))) { pr = i; break; }
    if (pr < 0) continue;
    if (pr != r) m.row(pr).swap(m.row(r));
    K inv = K(1) / m(r, c);
    for (int j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      K f = m(i, c);
      for (int j = c; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class K>
int rank(Mat<K> m) {
  return static_cast<int>(rref_inplace(m).size());
}

// Kernel basis as columns; the non-pivot variables parameterize the kernel.
template <class K>
Mat<K> kernel_basis(Mat<K> m) {
  const int cols = static_cast<int>(m.cols());
  std::vector<int> piv = rref_inplace(m);
  std::vector<bool> isPiv(cols, false);
  for (int c : piv) isPiv[c] = true;
  const int nul = cols - static_cast<int>(piv.size());
  Mat<K> ker = Mat<K>::Constant(cols, nul, K(0));
  int k = 0;
  for (int c = 0; c < cols; ++c) {
    if (isPiv[c]) continue;
    ker(c, k) = K(1);
    for (size_t i = 0; i < piv.size(); ++i) ker(piv[i], k) = -m(static_cast<int>(i), c);
    ++k;
  }
  return ker;
}

struct RankNullity {
  int rank;
  int nullity;
};

// Solve A x = b; returns false when inconsistent.
template <class K>
bool solve(const Mat<K>& a, const Col<K>& b, Col<K>& x) {
  const int rows = static_cast<int>(a.rows()), cols = static_cast<int>(a.cols());
  Mat<K> aug(rows, cols + 1);
  aug.leftCols(cols) = a;
  aug.col(cols) = b;
  std::vector<int> piv = rref_inplace(aug);
  if (!piv.empty() && piv.back() == cols) return false;
  x = Col<K>::Constant(cols, K(0));
  for (size_t i = 0; i < piv.size(); ++i) x(piv[i]) = aug(static_cast<int>(i), cols);
  return true;
}

// ---------------------------------------------------------------------------
// Sparse columns over an exact field, for the large graded-piece matrices
// that appear in Tor computations.  Entries per column are sorted by row.

template <class K>
struct SparseCol {
  std::vector<std::pair<int, K>> e;
  bool empty() const { return e.empty(); }
  int minRow() const { return e.front().first; }
};

template <class K>
void axpy_sparse(SparseCol<K>& x, const K& f, const SparseCol<K>& y) {
  // x += f * y, merging sorted supports
  std::vector<std::pair<int, K>> out;
  out.reserve(x.e.size() + y.e.size());
  size_t i = 0, j = 0;
  while (i < x.e.size() || j < y.e.size()) {
    if (j == y.e.size() || (i < x.e.size() && x.e[i].first < y.e[j].first)) {
      out.push_back(x.e[i++]);
    } else if (i == x.e.size() || y.e[j].first < x.e[i].first) {
      K v = f * y.e[j].second;
      if (!is_zero(v)) out.emplace_back(y.e[j].first, v);
      ++j;
    } else {
      K v = x.e[i].second + f * y.e[j].second;
      if (!is_zero(v)) out.emplace_back(x.e[i].first, v);
      ++i;
      ++j;
    }
  }
  x.e = std::move(out);
}

// Incremental sparse echelon: feed columns one at a time; tracks rank and,
// optionally, the combination of input columns forming each kernel element.
template <class K>
class SparseEliminator {
  std::map<int, int> pivotOfRow_;        // row -> index into pivCols_
  std::vector<SparseCol<K>> pivCols_;
  bool wantKernel_;

 public:
  explicit SparseEliminator(bool wantKernel = false) : wantKernel_(wantKernel) {}

  int rank() const { return static_cast<int>(pivCols_.size()); }
  const std::vector<SparseCol<K>>& kernelCombos() const { return kernel_; }

  // Returns true if the column was independent (became a new pivot).
  bool add(SparseCol<K> col, int colIndex = -1) {
    SparseCol<K> combo;
    if (wantKernel_) combo.e.emplace_back(colIndex, K(1));
    while (!col.empty()) {
      int r = col.minRow();
      auto it = pivotOfRow_.find(r);
      if (it == pivotOfRow_.end()) {
        K inv = K(1) / col.e.front().second;
        for (auto& p : col.e) p.second = p.second * inv;
        if (wantKernel_) {
          for (auto& p : combo.e) p.second = p.second * inv;
          pivCombos_.push_back(std::move(combo));
        }
        pivotOfRow_[r] = static_cast<int>(pivCols_.size());
        pivCols_.push_back(std::move(col));
        return true;
      }
      int pi = it->second;
      K f = -col.e.front().second;  // pivot columns are normalized to lead 1
      axpy_sparse(col, f, pivCols_[pi]);
      if (wantKernel_) axpy_sparse(combo, f, pivCombos_[pi]);
    }
    if (wantKernel_) kernel_.push_back(std::move(combo));
    return false;
  }

 private:
  std::vector<SparseCol<K>> pivCombos_;  // pivot column = combo of inputs
  std::vector<SparseCol<K>> kernel_;
};

}  // namespace arr
