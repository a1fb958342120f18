#include <doctest.h>

#include <random>

#include "coxkit/intmat.hpp"

using namespace coxkit;

TEST_CASE("smith normal form basics") {
  // The change-of-basis matrix of {e1-e2, e1+e2} inside {e1, e2}.
  IntMat m = IntMat::from_rows({{1, 1}, {1, -1}});
  SmithForm f = smith_normal_form(m);
  REQUIRE(f.rank() == 2);
  CHECK(f.diag[0] == 1);
  CHECK(f.diag[1] == 2);
  CHECK(f.diag_product() == 2);

  SmithForm d = smith_normal_form(IntMat::from_rows({{2, 0}, {0, 3}}));
  CHECK(d.diag[0] == 1);
  CHECK(d.diag[1] == 6);

  SmithForm z = smith_normal_form(IntMat::from_rows({{0, 0}, {0, 0}}));
  CHECK(z.rank() == 0);
  CHECK(z.diag_product() == 1);

  // Rank-deficient input.
  SmithForm r = smith_normal_form(IntMat::from_rows({{2, 4}, {1, 2}}));
  CHECK(r.rank() == 1);
  CHECK(r.diag[0] == 1);
}

TEST_CASE("divisibility chain and determinant on random matrices") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (int iter = 0; iter < 120; ++iter) {
    int n = 2 + int(rng() % 4);
    IntMat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = entry(rng);
    mpz_class d = det(m);
    SmithForm f = smith_normal_form(m);
    for (size_t i = 1; i < f.diag.size(); ++i)
      CHECK(f.diag[i] % f.diag[i - 1] == 0);
    if (d != 0) {
      REQUIRE(f.rank() == n);
      CHECK(f.diag_product() == abs(d));
    } else {
      CHECK(f.rank() < n);
    }
  }
}

TEST_CASE("hermite row basis and membership") {
  IntMat basis = hermite_row_basis(IntMat::from_rows({{1, 1}, {1, -1}}));
  REQUIRE(basis.rows() == 2);
  // The lattice contains (0,2) but not (0,1); (1,0) only rationally.
  CHECK(integer_coords_in_row_basis(basis, {0, 2}).has_value());
  CHECK(integer_coords_in_row_basis(basis, {2, 0}).has_value());
  CHECK_FALSE(integer_coords_in_row_basis(basis, {0, 1}).has_value());
  CHECK_FALSE(integer_coords_in_row_basis(basis, {1, 0}).has_value());
  CHECK(in_rational_row_span(basis, {1, 0}));
  CHECK(in_rational_row_span(basis, {0, 1}));

  IntMat line = hermite_row_basis(IntMat::from_rows({{2, 4}, {1, 2}, {3, 6}}));
  REQUIRE(line.rows() == 1);
  CHECK(line.at(0, 0) == 1);
  CHECK(line.at(0, 1) == 2);
  CHECK_FALSE(in_rational_row_span(line, {1, 0}));
}

TEST_CASE("coordinates returned by membership reconstruct the vector") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int iter = 0; iter < 60; ++iter) {
    IntMat m(3, 4);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) m.at(i, j) = entry(rng);
    IntMat basis = hermite_row_basis(m);
    std::vector<mpz_class> combo(4, 0);
    std::vector<int> c{entry(rng), entry(rng), entry(rng)};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) combo[j] += mpz_class(c[i]) * m.at(i, j);
    auto coords = integer_coords_in_row_basis(basis, combo);
    REQUIRE(coords.has_value());
    std::vector<mpz_class> back(4, 0);
    for (int i = 0; i < basis.rows(); ++i)
      for (int j = 0; j < 4; ++j) back[j] += (*coords)[i] * basis.at(i, j);
    CHECK(back == combo);
  }
}

TEST_CASE("bareiss determinant matches cofactor expansion") {
  IntMat a = IntMat::from_rows({{2, -1}, {-1, 2}});
  CHECK(det(a) == 3);
  IntMat b = IntMat::from_rows({{0, 1, 2}, {3, 4, 5}, {6, 7, 9}});
  CHECK(det(b) == -3);
  CHECK(det(IntMat::identity(5)) == 1);
  CHECK(det(IntMat(0, 0)) == 1);
}
