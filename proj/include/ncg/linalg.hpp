#pragma once

// Exact linear algebra over Q and Q(i).
//
// LinearSystem keeps its equations in reduced row echelon form while they are
// added. Pivots are chosen as the first nonzero column in the fixed unknown
// order, so the stored form is the (unique) RREF of everything added so far and
// does not depend on insertion order. bareiss_rank is an independent
// fraction-free route used to cross-check ranks.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncg/error.hpp"
#include "ncg/scalar.hpp"

namespace ncg {

inline bool field_is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool field_is_zero(const GR& x) { return x.is_zero(); }

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!field_is_zero(x)) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (field_is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& x : a.data_) x = s * x;
    return a;
  }
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

// Affine solution set {particular + sum t_k kernel[k]}.
template <class T>
struct AffineSolution {
  std::vector<T> particular;
  std::vector<std::vector<T>> kernel;
};

template <class T>
class LinearSystem {
 public:
  using Row = std::map<std::size_t, T>;

  explicit LinearSystem(std::size_t unknowns) : unknowns_(unknowns) {}

  std::size_t unknowns() const { return unknowns_; }
  std::size_t rank() const { return pivots_.size(); }
  bool consistent() const { return !inconsistent_.has_value(); }
  // Label of the first equation found to contradict the earlier ones.
  const std::optional<std::string>& inconsistency() const { return inconsistent_; }

  // Adds sum_j coeffs[j] x_j = rhs.
  void add(Row coeffs, T rhs, const std::string& label = {}) {
    prune(coeffs);
    reduce(coeffs, rhs);
    if (coeffs.empty()) {
      if (!field_is_zero(rhs) && !inconsistent_) inconsistent_ = label.empty() ? "equation" : label;
      return;
    }
    const std::size_t lead = coeffs.begin()->first;
    const T inv = T(1) / coeffs.begin()->second;
    for (auto& [c, v] : coeffs) v *= inv;
    rhs *= inv;
    // Keep every stored row free of the new pivot column.
    for (auto& [pcol, idx] : pivots_) {
      auto& row = rows_[idx];
      auto it = row.first.find(lead);
      if (it == row.first.end()) continue;
      const T factor = it->second;
      axpy(row.first, row.second, factor, coeffs, rhs);
    }
    pivots_.emplace(lead, rows_.size());
    rows_.emplace_back(std::move(coeffs), std::move(rhs));
  }

  void add_dense(const std::vector<T>& coeffs, T rhs, const std::string& label = {}) {
    Row row;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      if (!field_is_zero(coeffs[j])) row.emplace(j, coeffs[j]);
    add(std::move(row), std::move(rhs), label);
  }

  std::vector<std::size_t> pivot_columns() const {
    std::vector<std::size_t> out;
    for (const auto& [c, idx] : pivots_) out.push_back(c);
    return out;
  }

  std::vector<std::size_t> free_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < unknowns_; ++c)
      if (!pivots_.count(c)) out.push_back(c);
    return out;
  }

  // Particular solution (free unknowns set to zero) plus a kernel basis with
  // one vector per free unknown in ascending order. Empty when inconsistent.
  std::optional<AffineSolution<T>> solve() const {
    if (inconsistent_) return std::nullopt;
    AffineSolution<T> sol;
    sol.particular.assign(unknowns_, T(0));
    for (const auto& [pcol, idx] : pivots_) sol.particular[pcol] = rows_[idx].second;
    for (std::size_t f : free_columns()) {
      std::vector<T> v(unknowns_, T(0));
      v[f] = T(1);
      for (const auto& [pcol, idx] : pivots_) {
        auto it = rows_[idx].first.find(f);
        if (it != rows_[idx].first.end()) v[pcol] = -it->second;
      }
      sol.kernel.push_back(std::move(v));
    }
    return sol;
  }

 private:
  static void prune(Row& row) {
    for (auto it = row.begin(); it != row.end();) {
      if (field_is_zero(it->second)) it = row.erase(it);
      else ++it;
    }
  }

  // target -= factor * source
  static void axpy(Row& target, T& target_rhs, const T& factor, const Row& source, const T& source_rhs) {
    for (const auto& [c, v] : source) {
      auto [it, inserted] = target.try_emplace(c, T(0));
      it->second -= factor * v;
      if (field_is_zero(it->second)) target.erase(it);
    }
    target_rhs -= factor * source_rhs;
  }

  void reduce(Row& coeffs, T& rhs) const {
    // Pivot rows only touch their pivot column and non-pivot columns to the
    // right of it, so one ascending sweep clears every pivot column.
    auto it = coeffs.begin();
    while (it != coeffs.end()) {
      auto piv = pivots_.find(it->first);
      if (piv == pivots_.end()) {
        ++it;
        continue;
      }
      const std::size_t col = it->first;
      const T factor = it->second;
      const auto& row = rows_[piv->second];
      axpy(coeffs, rhs, factor, row.first, row.second);
      it = coeffs.upper_bound(col);
    }
  }

  std::size_t unknowns_;
  std::vector<std::pair<Row, T>> rows_;
  std::map<std::size_t, std::size_t> pivots_;
  std::optional<std::string> inconsistent_;
};

// Rank through the reduced row echelon form.
template <class T>
std::size_t rank(const Matrix<T>& m) {
  LinearSystem<T> sys(m.cols());
  std::vector<T> row(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) row[c] = m(r, c);
    sys.add_dense(row, T(0));
  }
  return sys.rank();
}

// Right kernel basis of m (vectors x with m x = 0), one per free column.
template <class T>
std::vector<std::vector<T>> nullspace(const Matrix<T>& m) {
  LinearSystem<T> sys(m.cols());
  std::vector<T> row(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) row[c] = m(r, c);
    sys.add_dense(row, T(0));
  }
  return sys.solve()->kernel;
}

// Solves m x = b; nullopt when inconsistent.
template <class T>
std::optional<AffineSolution<T>> solve(const Matrix<T>& m, const std::vector<T>& b) {
  LinearSystem<T> sys(m.cols());
  std::vector<T> row(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) row[c] = m(r, c);
    sys.add_dense(row, b[r]);
  }
  return sys.solve();
}

// Fraction-free (Bareiss) elimination with first-nonzero pivoting; returns
// the rank. Every division is exact: it divides by the previous pivot.
template <class T>
std::size_t bareiss_rank(Matrix<T> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  T prev(1);
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && field_is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    const T pivot = m(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const T lead = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) = (m(i, j) * pivot - lead * m(r, j)) / prev;
    }
    prev = pivot;
    ++r;
  }
  return r;
}

}  // namespace ncg
