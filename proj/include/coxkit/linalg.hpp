#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "coxkit/scalar.hpp"

namespace coxkit {

// Dense matrix over the exact scalar field.  Everything here is plain
// Gaussian elimination with exact division; matrices in this project are
// at most 9x9, so simplicity beats cleverness.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols)
      : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
  }
  static Mat from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Mat(0, 0);
    Mat m(int(rows.size()), int(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows[0].size())
        throw std::invalid_argument("Mat::from_rows: ragged rows");
      for (size_t j = 0; j < rows[i].size(); ++j)
        m.at(int(i), int(j)) = rows[i][j];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

  Vec row(int i) const {
    Vec r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
  }
  Vec col(int j) const {
    Vec c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }

  Mat transposed() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("Mat mul: shape");
    Mat r(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        if (x.at(i, k).is_zero()) continue;
        for (int j = 0; j < y.cols_; ++j)
          r.at(i, j) += x.at(i, k) * y.at(k, j);
      }
    return r;
  }
  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

  Vec apply(const Vec& v) const {
    if (int(v.size()) != cols_) throw std::invalid_argument("Mat apply: dim");
    Vec r(rows_);
    for (int i = 0; i < rows_; ++i) {
      Scalar s;
      for (int j = 0; j < cols_; ++j) s += at(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }

 private:
  int rows_, cols_;
  std::vector<Scalar> data_;
};

// Row echelon form of a set of vectors, kept reduced so that span
// membership is a single elimination pass.  Rows are stored pivot-first.
class Echelon {
 public:
  explicit Echelon(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  int rank() const { return int(rows_.size()); }

  // Returns true when v enlarged the span.
  bool insert(Vec v) {
    reduce(v);
    int p = pivot_of(v);
    if (p < 0) return false;
    Scalar inv = Scalar(1) / v[p];
    for (auto& c : v) c *= inv;
    // Back-substitute into earlier rows to keep the form reduced.
    for (size_t r = 0; r < rows_.size(); ++r) {
      const Scalar& c = rows_[r][p];
      if (!c.is_zero()) {
        Scalar f = c;
        for (int j = 0; j < dim_; ++j) rows_[r][j] -= f * v[j];
      }
    }
    size_t pos = 0;
    while (pos < rows_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
  }

  bool contains(Vec v) const {
    reduce(v);
    return is_zero(v);
  }

  const std::vector<Vec>& basis_rows() const { return rows_; }

 private:
  void reduce(Vec& v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      const Scalar& c = v[pivots_[r]];
      if (!c.is_zero()) {
        Scalar f = c;
        for (int j = 0; j < dim_; ++j) v[j] -= f * rows_[r][j];
      }
    }
  }
  static int pivot_of(const Vec& v) {
    for (size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) return int(j);
    return -1;
  }

  int dim_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

inline int rank_of(const std::vector<Vec>& vectors, int dim) {
  Echelon e(dim);
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

inline Scalar determinant(Mat m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
  int n = m.rows();
  Scalar det(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (!m.at(r, c).is_zero()) {
        p = r;
        break;
      }
    if (p < 0) return Scalar(0);
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(c, j));
      det = -det;
    }
    det *= m.at(c, c);
    Scalar inv = Scalar(1) / m.at(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (m.at(r, c).is_zero()) continue;
      Scalar f = m.at(r, c) * inv;
      for (int j = c; j < n; ++j) m.at(r, j) -= f * m.at(c, j);
    }
  }
  return det;
}

// Solves A x = b exactly; returns nullopt when inconsistent.  When the
// system is underdetermined an arbitrary solution is returned (free
// variables set to zero).
inline std::optional<Vec> solve(const Mat& a, const Vec& b) {
  if (int(b.size()) != a.rows()) throw std::invalid_argument("solve: dim");
  int n = a.rows(), m = a.cols();
  Mat w(n, m + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) w.at(i, j) = a.at(i, j);
    w.at(i, m) = b[i];
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < m && r < n; ++c) {
    int p = -1;
    for (int i = r; i < n; ++i)
      if (!w.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j <= m; ++j) std::swap(w.at(p, j), w.at(r, j));
    Scalar inv = Scalar(1) / w.at(r, c);
    for (int j = c; j <= m; ++j) w.at(r, j) *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == r || w.at(i, c).is_zero()) continue;
      Scalar f = w.at(i, c);
      for (int j = c; j <= m; ++j) w.at(i, j) -= f * w.at(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < n; ++i)
    if (!w.at(i, m).is_zero()) return std::nullopt;
  Vec x(m, Scalar(0));
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = w.at(i, m);
  return x;
}

// Basis (as rows) of the kernel of a.
inline std::vector<Vec> nullspace(const Mat& a) {
  int n = a.rows(), m = a.cols();
  Mat w(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) w.at(i, j) = a.at(i, j);
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < m && r < n; ++c) {
    int p = -1;
    for (int i = r; i < n; ++i)
      if (!w.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m; ++j) std::swap(w.at(p, j), w.at(r, j));
    Scalar inv = Scalar(1) / w.at(r, c);
    for (int j = c; j < m; ++j) w.at(r, j) *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == r || w.at(i, c).is_zero()) continue;
      Scalar f = w.at(i, c);
      for (int j = c; j < m; ++j) w.at(i, j) -= f * w.at(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(m, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int c = 0; c < m; ++c) {
    if (is_pivot[c]) continue;
    Vec v(m, Scalar(0));
    v[c] = Scalar(1);
    for (int i = 0; i < int(pivot_col.size()); ++i)
      v[pivot_col[i]] = -w.at(i, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace coxkit
