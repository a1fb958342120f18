#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace coxkit {

// Arbitrary-precision integer matrix with the two normal forms the
// lattice computations need.  No attempt at asymptotic cleverness: every
// matrix here is at most ~10x10.
class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(int rows, int cols)
      : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

  static IntMat from_rows(const std::vector<std::vector<mpz_class>>& rows);
  static IntMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpz_class& at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
  const mpz_class& at(int i, int j) const {
    return data_[size_t(i) * cols_ + j];
  }

  friend IntMat operator*(const IntMat& x, const IntMat& y);
  friend bool operator==(const IntMat& x, const IntMat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);

 private:
  int rows_, cols_;
  std::vector<mpz_class> data_;
};

mpz_class det(IntMat m);

struct SmithForm {
  // Invariant factors d_1 | d_2 | ... (nonzero diagonal of the normal
  // form), so rank = diag.size().
  std::vector<mpz_class> diag;
  int rank() const { return int(diag.size()); }
  // Product of the invariant factors; the index of the row lattice inside
  // its saturation when the matrix has full column rank.
  mpz_class diag_product() const {
    mpz_class p = 1;
    for (const auto& d : diag) p *= d;
    return p;
  }
};

// Smith normal form via elimination pivoting on the minimal nonzero
// absolute value.  The transforms U, V are accumulated and U*A*V is
// checked against the diagonal before returning.
SmithForm smith_normal_form(IntMat a);

// Row-style Hermite reduction: returns a basis (as matrix rows) of the
// lattice spanned by the rows of a.  Rows come out in echelon order.
IntMat hermite_row_basis(IntMat a);

// Expresses v in the row basis `basis` with integer coefficients;
// nullopt when v is outside the row lattice.
std::optional<std::vector<mpz_class>> integer_coords_in_row_basis(
    const IntMat& basis, const std::vector<mpz_class>& v);

// Same but over the rationals (membership in the Q-span).
bool in_rational_row_span(const IntMat& basis, const std::vector<mpz_class>& v);

}  // namespace coxkit
