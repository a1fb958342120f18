#include <doctest.h>

#include "coxkit/scalar.hpp"

using namespace coxkit;

TEST_CASE("rational arithmetic is exact") {
  Scalar third(mpq_class(1, 3));
  CHECK(third + third + third == Scalar(1));
  CHECK(third * Scalar(3) == Scalar(1));
  CHECK(Scalar(1) / Scalar(7) * Scalar(7) == Scalar(1));
  CHECK((Scalar(2) - Scalar(5)).sign() == -1);
  CHECK(Scalar(0).is_zero());
  CHECK(third.is_rational());
  CHECK_FALSE(third.is_integer());
  CHECK(Scalar(6).to_integer() == 6);
}

TEST_CASE("golden field relations") {
  Scalar phi = Scalar::phi();
  CHECK(phi * phi == phi + Scalar(1));
  CHECK(phi * Scalar::inv_phi() == Scalar(1));
  CHECK(phi.inverse() == Scalar::inv_phi());
  CHECK(phi.inverse() == phi - Scalar(1));
  // Galois conjugation and the field norm.
  Scalar x(mpq_class(3, 2), mpq_class(-5, 7));
  CHECK(x * x.inverse() == Scalar(1));
  Scalar norm = x * x.galois_conjugate();
  CHECK(norm.is_rational());
  CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);
}

TEST_CASE("exact sign of golden values") {
  Scalar phi = Scalar::phi();
  CHECK(phi.sign() == 1);
  CHECK((phi - Scalar(1)).sign() == 1);
  CHECK((Scalar(2) - phi).sign() == 1);
  CHECK((phi - Scalar(2)).sign() == -1);
  CHECK((-phi).sign() == -1);
  // Consecutive Fibonacci ratios straddle phi.
  CHECK((Scalar(mpq_class(13, 8)) - phi).sign() == 1);
  CHECK((Scalar(mpq_class(21, 13)) - phi).sign() == -1);
  CHECK((Scalar(mpq_class(377, 233)) - phi).sign() == -1);
  CHECK((Scalar(mpq_class(610, 377)) - phi).sign() == 1);
  CHECK((phi - phi).sign() == 0);
  // Mixed comparisons drive the root-ordering code.
  CHECK(Scalar(1) < phi);
  CHECK(phi < Scalar(2));
  CHECK(Scalar::inv_phi() > Scalar(0));
}

TEST_CASE("vector helpers") {
  Vec a{Scalar(1), Scalar(2)}, b{Scalar(3), Scalar(-1)};
  CHECK(dot(a, b) == Scalar(1));
  CHECK(is_zero(a - a));
  CHECK((a + b)[0] == Scalar(4));
  CHECK(VecLess{}(a, b));
  CHECK_FALSE(VecLess{}(b, a));
  CHECK_THROWS_AS(dot(a, Vec{Scalar(1)}), std::invalid_argument);
}
