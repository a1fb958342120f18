#include <doctest.h>

#include <random>

#include "coxkit/group.hpp"
#include "oracles.hpp"

using namespace coxkit;

namespace {

GroupElement random_element(const CoxGroup& g, std::mt19937& rng, int len) {
  std::uniform_int_distribution<int> pick(0, g.num_reflections() - 1);
  Word w(len);
  for (auto& t : w) t = pick(rng);
  return g.from_word(w);
}

}  // namespace

TEST_CASE("words, composition and inverses") {
  CoxGroup g = CoxGroup::build(Family::A, 2);
  CHECK(g.is_identity(g.from_word({})));
  for (int t = 0; t < g.num_reflections(); ++t)
    CHECK(g.is_identity(g.from_word({t, t})));

  // A Coxeter element of A2 has order 3.
  auto s = g.simple_reflections();
  GroupElement c = g.from_word({s[0], s[1]});
  CHECK_FALSE(g.is_identity(c));
  GroupElement c2 = g.multiply(c, c);
  CHECK_FALSE(g.is_identity(c2));
  CHECK(g.is_identity(g.multiply(c2, c)));

  std::mt19937 rng(3);
  for (int i = 0; i < 30; ++i) {
    GroupElement w = random_element(g, rng, 4);
    CHECK(g.is_identity(g.multiply(w, g.inverse(w))));
  }

  CoxGroup other = CoxGroup::build(Family::B, 2);
  CHECK_THROWS_AS(g.multiply(c, other.identity()), std::invalid_argument);
}

TEST_CASE("conjugating a reflection lands on the transported root") {
  for (auto fam : {Family::A, Family::B}) {
    CoxGroup g = CoxGroup::build(fam, 3);
    const RootSystem& rs = g.roots();
    std::mt19937 rng(7);
    for (int i = 0; i < 40; ++i) {
      int t = int(rng() % g.num_reflections());
      GroupElement w = random_element(g, rng, 3);
      GroupElement conj = g.conjugate(g.reflection(t), w);
      auto idx = g.reflection_index(conj);
      REQUIRE(idx.has_value());
      CHECK(*idx == rs.positive_part(g.root_image(w, t)));
    }
  }
  // In the S3 model: conjugating s1 by s2 gives the third reflection.
  CoxGroup a2 = CoxGroup::build(Family::A, 2);
  auto s = a2.simple_reflections();
  GroupElement third = a2.conjugate(a2.reflection(s[0]), a2.reflection(s[1]));
  auto idx = a2.reflection_index(third);
  REQUIRE(idx.has_value());
  CHECK(*idx != s[0]);
  CHECK(*idx != s[1]);
}

TEST_CASE("matrices, determinants and moved spaces") {
  CoxGroup g = CoxGroup::build(Family::A, 2);
  Mat id = g.matrix_of(g.identity());
  CHECK(id == Mat::identity(3));
  for (int t = 0; t < g.num_reflections(); ++t)
    CHECK(determinant(g.matrix_of(g.reflection(t))) == Scalar(-1));

  // Coxeter element of A2: rotation block, zero trace with the fixed line.
  auto s = g.simple_reflections();
  Mat c = g.matrix_of(g.from_word({s[0], s[1]}));
  Scalar trace;
  for (int i = 0; i < 3; ++i) trace += c.at(i, i);
  CHECK(trace == Scalar(0));

  CHECK(g.moved_space_dim(g.identity()) == 0);
  CHECK(g.moved_space_dim(g.reflection(0)) == 1);
  CHECK(g.fixed_space_dim(g.reflection(0)) == 1);

  // The B4 sign-change product moves everything.
  CoxGroup b4 = CoxGroup::build(Family::B, 4);
  SignedPerm minus_one;
  minus_one.img = {-1, -2, -3, -4};
  GroupElement w = b4.from_signed_perm(minus_one);
  CHECK(b4.moved_space_dim(w) == 4);
  CHECK(b4.reflection_length(w) == 4);
}

TEST_CASE("reflection length agrees with the BFS oracle") {
  std::vector<CoxGroup> groups;
  groups.push_back(CoxGroup::build(Family::A, 3));
  groups.push_back(CoxGroup::build(Family::B, 3));
  groups.push_back(CoxGroup::build(Family::D, 4));
  groups.push_back(CoxGroup::build(Family::H, 3));
  for (int m = 3; m <= 8; ++m) groups.push_back(CoxGroup::dihedral(m));
  for (const auto& g : groups) {
    CAPTURE(g.label());
    auto dist = oracles::bfs_length_oracle(g);
    CHECK(dist.size() == g.order());
    for (const auto& [w, d] : dist) CHECK(g.reflection_length(w) == d);
  }
}

TEST_CASE("determinant parity") {
  for (auto [fam, rank] : std::vector<std::pair<Family, int>>{
           {Family::A, 3}, {Family::B, 3}, {Family::B, 4},
           {Family::D, 4}, {Family::H, 3}, {Family::F, 4}}) {
    CoxGroup g = CoxGroup::build(fam, rank);
    CAPTURE(g.label());
    for (const auto& w : g.all_elements()) {
      int len = g.reflection_length(w);
      CHECK(determinant(g.matrix_of(w)) == Scalar(len % 2 == 0 ? 1 : -1));
    }
  }
  // Random samples in larger groups.
  std::mt19937 rng(17);
  for (auto [fam, rank] : std::vector<std::pair<Family, int>>{
           {Family::D, 5}, {Family::H, 4}, {Family::E, 6}}) {
    CoxGroup g = CoxGroup::build(fam, rank);
    for (int i = 0; i < 15; ++i) {
      GroupElement w = random_element(g, rng, 5);
      int len = g.reflection_length(w);
      CHECK(determinant(g.matrix_of(w)) == Scalar(len % 2 == 0 ? 1 : -1));
    }
  }
}

TEST_CASE("absolute order is a partial order") {
  for (auto fam : {Family::A, Family::B}) {
    CoxGroup g = CoxGroup::build(fam, 3);
    CAPTURE(g.label());
    auto elements = g.all_elements();
    const int n = int(elements.size());
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        leq[i][j] = g.absolute_leq(elements[i], elements[j]);
    for (int i = 0; i < n; ++i) {
      CHECK(leq[i][i]);
      CHECK(g.absolute_leq(g.identity(), elements[i]));
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i != j && leq[i][j]) CHECK_FALSE(leq[j][i]);
        for (int k = 0; k < n; ++k)
          if (leq[i][j] && leq[j][k]) CHECK(leq[i][k]);
      }
  }
}

TEST_CASE("reflections below w are the roots in Mov(w)") {
  CoxGroup g = CoxGroup::build(Family::B, 3);
  auto elements = g.all_elements();
  for (const auto& w : elements) {
    Echelon mov = g.moved_space(w);
    for (int t = 0; t < g.num_reflections(); ++t) {
      bool below = g.absolute_leq(g.reflection(t), w);
      CHECK(below == mov.contains(g.roots().root(t)));
    }
  }
  // Every reflection divides the B4 sign-change product.
  CoxGroup b4 = CoxGroup::build(Family::B, 4);
  SignedPerm minus_one;
  minus_one.img = {-1, -2, -3, -4};
  GroupElement w = b4.from_signed_perm(minus_one);
  for (int t = 0; t < b4.num_reflections(); ++t)
    CHECK(b4.absolute_leq(b4.reflection(t), w));
}

TEST_CASE("signed permutation bridge") {
  CoxGroup b4 = CoxGroup::build(Family::B, 4);
  const RootSystem& rb = b4.roots();
  // The reflection with root e1 is (1,-1).
  Vec e1(4, Scalar(0));
  e1[0] = Scalar(1);
  SignedPerm sp = b4.to_signed_perm(b4.reflection(rb.index_of(e1)));
  CHECK(sp.apply(1) == -1);
  CHECK(sp.apply(2) == 2);

  // D_n: the reflection with root e_i - e_j is (i,j)(-i,-j).
  CoxGroup d4 = CoxGroup::build(Family::D, 4);
  const RootSystem& rd = d4.roots();
  Vec e1m3(4, Scalar(0));
  e1m3[0] = Scalar(1);
  e1m3[2] = Scalar(-1);
  SignedPerm t13 = d4.to_signed_perm(d4.reflection(rd.index_of(e1m3)));
  CHECK(t13.apply(1) == 3);
  CHECK(t13.apply(3) == 1);
  CHECK(t13.apply(-1) == -3);
  CHECK(t13.apply(2) == 2);

  // Round trips on random elements.
  std::mt19937 rng(23);
  for (int i = 0; i < 100; ++i) {
    GroupElement w = random_element(b4, rng, 5);
    CHECK(b4.from_signed_perm(b4.to_signed_perm(w)) == w);
    GroupElement v = random_element(d4, rng, 5);
    CHECK(d4.from_signed_perm(d4.to_signed_perm(v)) == v);
  }

  // Odd sign patterns are not D_n elements.
  SignedPerm odd;
  odd.img = {-1, 2, 3, 4};
  CHECK_THROWS_AS(d4.from_signed_perm(odd), std::invalid_argument);
  CHECK_THROWS_AS(CoxGroup::build(Family::A, 3).to_signed_perm(
                      CoxGroup::build(Family::A, 3).identity()),
                  std::invalid_argument);
}

TEST_CASE("fewer than rank reflections never generate") {
  std::mt19937 rng(31);
  for (auto [fam, rank] : std::vector<std::pair<Family, int>>{
           {Family::B, 3}, {Family::D, 4}, {Family::A, 4}}) {
    CoxGroup g = CoxGroup::build(fam, rank);
    std::uniform_int_distribution<int> pick(0, g.num_reflections() - 1);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<std::int32_t> ids(rank - 1);
      for (auto& t : ids) t = pick(rng);
      CHECK(int(g.reflection_closure(ids).size()) < g.num_reflections());
    }
  }
}

TEST_CASE("enumeration matches the closed-form orders") {
  for (auto [fam, rank] : std::vector<std::pair<Family, int>>{
           {Family::A, 3}, {Family::B, 3}, {Family::D, 4},
           {Family::H, 3}, {Family::I2, 7}, {Family::F, 4}}) {
    CoxGroup g = CoxGroup::build(fam, rank);
    CHECK(g.all_elements().size() == g.order());
  }
}
