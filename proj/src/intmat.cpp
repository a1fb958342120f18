#include "coxkit/intmat.hpp"

#include <cassert>
#include <stdexcept>

namespace coxkit {

IntMat IntMat::from_rows(const std::vector<std::vector<mpz_class>>& rows) {
  if (rows.empty()) return IntMat(0, 0);
  IntMat m(int(rows.size()), int(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size())
      throw std::invalid_argument("IntMat::from_rows: ragged rows");
    for (size_t j = 0; j < rows[i].size(); ++j)
      m.at(int(i), int(j)) = rows[i][j];
  }
  return m;
}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat operator*(const IntMat& x, const IntMat& y) {
  if (x.cols_ != y.rows_) throw std::invalid_argument("IntMat mul: shape");
  IntMat r(x.rows_, y.cols_);
  for (int i = 0; i < x.rows_; ++i)
    for (int k = 0; k < x.cols_; ++k) {
      if (x.at(i, k) == 0) continue;
      for (int j = 0; j < y.cols_; ++j)
        r.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return r;
}

void IntMat::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMat::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

// Fraction-free (Bareiss) determinant.
mpz_class det(IntMat m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
  int n = m.rows();
  if (n == 0) return 1;
  mpz_class sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        mpz_class num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        m.at(i, j) = q;
      }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

namespace {

struct Pivot {
  int row = -1, col = -1;
};

// Minimal nonzero absolute value in the trailing submatrix.
Pivot find_pivot(const IntMat& a, int from) {
  Pivot best;
  mpz_class best_abs;
  for (int i = from; i < a.rows(); ++i)
    for (int j = from; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) continue;
      mpz_class v = abs(a.at(i, j));
      if (best.row < 0 || v < best_abs) {
        best = {i, j};
        best_abs = v;
      }
    }
  return best;
}

[[maybe_unused]] bool is_diagonal_from(const IntMat& a, int k) {
  for (int i = k; i < a.rows(); ++i)
    for (int j = k; j < a.cols(); ++j)
      if (i != j && a.at(i, j) != 0) return false;
  return true;
}

}  // namespace

SmithForm smith_normal_form(IntMat a) {
  const IntMat original = a;
  int n = a.rows(), m = a.cols();
  IntMat u = IntMat::identity(n), v = IntMat::identity(m);

  int k = 0;
  int limit = std::min(n, m);
  while (k < limit) {
    Pivot p = find_pivot(a, k);
    if (p.row < 0) break;
    a.swap_rows(k, p.row);
    u.swap_rows(k, p.row);
    a.swap_cols(k, p.col);
    v.swap_cols(k, p.col);

    bool clean = true;
    for (int i = k + 1; i < n; ++i) {
      if (a.at(i, k) == 0) continue;
      mpz_class q = a.at(i, k) / a.at(k, k);  // truncated division
      if (q != 0) {
        for (int j = 0; j < m; ++j) a.at(i, j) -= q * a.at(k, j);
        for (int j = 0; j < n; ++j) u.at(i, j) -= q * u.at(k, j);
      }
      if (a.at(i, k) != 0) clean = false;
    }
    for (int j = k + 1; j < m; ++j) {
      if (a.at(k, j) == 0) continue;
      mpz_class q = a.at(k, j) / a.at(k, k);
      if (q != 0) {
        for (int i = 0; i < n; ++i) a.at(i, j) -= q * a.at(i, k);
        for (int i = 0; i < m; ++i) v.at(i, j) -= q * v.at(i, k);
      }
      if (a.at(k, j) != 0) clean = false;
    }
    if (!clean) continue;  // smaller remainders exist; repick the pivot

    // Divisibility fixup: the pivot must divide every later entry.
    bool fixed = false;
    for (int i = k + 1; i < n && !fixed; ++i)
      for (int j = k + 1; j < m && !fixed; ++j)
        if (a.at(i, j) % a.at(k, k) != 0) {
          for (int c = 0; c < m; ++c) a.at(k, c) += a.at(i, c);
          for (int c = 0; c < n; ++c) u.at(k, c) += u.at(i, c);
          fixed = true;
        }
    if (fixed) continue;
    ++k;
  }

  SmithForm f;
  for (int i = 0; i < limit; ++i) {
    if (a.at(i, i) == 0) break;
    mpz_class d = abs(a.at(i, i));
    f.diag.push_back(d);
  }
#ifndef NDEBUG
  // U and V must be unimodular and U * A * V must equal the normal form.
  assert(is_diagonal_from(a, 0));
  assert(abs(det(u)) == 1);
  assert(abs(det(v)) == 1);
  IntMat check = (u * original) * v;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      mpz_class expect = 0;
      if (i == j && i < int(f.diag.size())) expect = f.diag[i];
      assert(abs(check.at(i, j)) == expect);
    }
#else
  (void)original;
  (void)u;
  (void)v;
#endif
  return f;
}

IntMat hermite_row_basis(IntMat a) {
  int n = a.rows(), m = a.cols();
  int r = 0;
  for (int c = 0; c < m && r < n; ++c) {
    // Euclid down the column until a single nonzero entry remains.
    while (true) {
      int p = -1;
      mpz_class best;
      for (int i = r; i < n; ++i) {
        if (a.at(i, c) == 0) continue;
        mpz_class v = abs(a.at(i, c));
        if (p < 0 || v < best) {
          p = i;
          best = v;
        }
      }
      if (p < 0) break;
      a.swap_rows(r, p);
      bool done = true;
      for (int i = r + 1; i < n; ++i) {
        if (a.at(i, c) == 0) continue;
        mpz_class q = a.at(i, c) / a.at(r, c);
        for (int j = 0; j < m; ++j) a.at(i, j) -= q * a.at(r, j);
        if (a.at(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (a.at(r, c) == 0) continue;
    if (a.at(r, c) < 0)
      for (int j = 0; j < m; ++j) a.at(r, j) = -a.at(r, j);
    // Reduce the rows above to finish the Hermite shape.
    for (int i = 0; i < r; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a.at(i, c).get_mpz_t(),
                 a.at(r, c).get_mpz_t());
      if (q != 0)
        for (int j = 0; j < m; ++j) a.at(i, j) -= q * a.at(r, j);
    }
    ++r;
  }
  IntMat basis(r, m);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < m; ++j) basis.at(i, j) = a.at(i, j);
  return basis;
}

std::optional<std::vector<mpz_class>> integer_coords_in_row_basis(
    const IntMat& basis, const std::vector<mpz_class>& v) {
  if (int(v.size()) != basis.cols())
    throw std::invalid_argument("integer_coords_in_row_basis: dim");
  std::vector<mpz_class> rem = v, coeff(basis.rows(), 0);
  for (int i = 0; i < basis.rows(); ++i) {
    int p = -1;
    for (int j = 0; j < basis.cols(); ++j)
      if (basis.at(i, j) != 0) {
        p = j;
        break;
      }
    if (p < 0) continue;
    if (rem[p] % basis.at(i, p) != 0) return std::nullopt;
    mpz_class q = rem[p] / basis.at(i, p);
    coeff[i] = q;
    if (q != 0)
      for (int j = 0; j < basis.cols(); ++j) rem[j] -= q * basis.at(i, j);
  }
  for (const auto& x : rem)
    if (x != 0) return std::nullopt;
  return coeff;
}

bool in_rational_row_span(const IntMat& basis,
                          const std::vector<mpz_class>& v) {
  if (int(v.size()) != basis.cols())
    throw std::invalid_argument("in_rational_row_span: dim");
  std::vector<mpq_class> rem(v.begin(), v.end());
  for (int i = 0; i < basis.rows(); ++i) {
    int p = -1;
    for (int j = 0; j < basis.cols(); ++j)
      if (basis.at(i, j) != 0) {
        p = j;
        break;
      }
    if (p < 0) continue;
    mpq_class q = rem[p] / mpq_class(basis.at(i, p));
    if (q != 0)
      for (int j = 0; j < basis.cols(); ++j)
        rem[j] -= q * mpq_class(basis.at(i, j));
  }
  for (const auto& x : rem)
    if (x != 0) return false;
  return true;
}

}  // namespace coxkit
