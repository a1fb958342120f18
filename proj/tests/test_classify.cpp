#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "coxkit/classify.hpp"
#include "coxkit/lattice.hpp"
#include "oracles.hpp"

using namespace coxkit;

namespace {

GroupElement b4_minus_one(const CoxGroup& b4) {
  SignedPerm sp;
  sp.img = {-1, -2, -3, -4};
  return b4.from_signed_perm(sp);
}

GroupElement d4_quasi_coxeter(const CoxGroup& d4) {
  auto s = d4.simple_reflections();
  // s1 (s2 s1 s2)(s2 s0 s2) s3 with the branch node in the middle.
  return d4.from_word({s[2], d4.conj_reflection(s[1], s[2]),
                       d4.conj_reflection(s[1], s[0]), s[3]});
}

bool is_2n_cycle(const SignedPerm& sp) {
  int n = sp.n();
  int x = 1, steps = 0;
  do {
    x = sp.apply(x);
    ++steps;
  } while (x != 1 && steps <= 2 * n);
  return steps == 2 * n;
}

}  // namespace

TEST_CASE("parabolic closures") {
  CoxGroup b4 = CoxGroup::build(Family::B, 4);
  CHECK(parabolic_closure(b4, b4.identity()).empty());
  CHECK(parabolic_closure(b4, b4.reflection(5)) ==
        std::vector<std::int32_t>{5});
  auto full = parabolic_closure(b4, b4_minus_one(b4));
  CHECK(int(full.size()) == b4.num_reflections());

  // Monotone under the absolute order (A3 exhaustively).
  CoxGroup a3 = CoxGroup::build(Family::A, 3);
  auto elements = a3.all_elements();
  for (const auto& u : elements)
    for (const auto& v : elements) {
      if (!a3.absolute_leq(u, v)) continue;
      auto cu = parabolic_closure(a3, u);
      auto cv = parabolic_closure(a3, v);
      CHECK(std::includes(cv.begin(), cv.end(), cu.begin(), cu.end()));
    }
}

TEST_CASE("parabolic subgroups") {
  // Standard parabolics are parabolic.
  for (auto [fam, rank] : std::vector<std::pair<Family, int>>{
           {Family::A, 3}, {Family::B, 3}, {Family::D, 4}, {Family::H, 3}}) {
    CoxGroup g = CoxGroup::build(fam, rank);
    auto s = g.simple_reflections();
    for (int m = 0; m <= rank; ++m) {
      std::vector<std::int32_t> gens(s.begin(), s.begin() + m);
      CHECK(is_parabolic_subgroup(g, gens));
    }
  }

  // The sign-change A1^4 inside B4 is not parabolic.
  CoxGroup b4 = CoxGroup::build(Family::B, 4);
  const RootSystem& rb = b4.roots();
  std::vector<std::int32_t> signs;
  for (int i = 0; i < 4; ++i) {
    Vec e(4, Scalar(0));
    e[i] = Scalar(1);
    signs.push_back(rb.index_of(e));
  }
  CHECK_FALSE(is_parabolic_subgroup(b4, signs));

  // The outer A1 x A1 x A1 of D4 is a maximal parabolic.
  CoxGroup d4 = CoxGroup::build(Family::D, 4);
  auto sd = d4.simple_reflections();
  CHECK(is_parabolic_subgroup(d4, {sd[0], sd[2], sd[3]}));
}

TEST_CASE("quasi-Coxeter detection") {
  CoxGroup d4 = CoxGroup::build(Family::D, 4);
  DescentOracle od(d4);
  CHECK(is_quasi_coxeter(od, d4_quasi_coxeter(d4)));

  CoxGroup b4 = CoxGroup::build(Family::B, 4);
  DescentOracle ob(b4);
  CHECK_FALSE(is_quasi_coxeter(ob, b4_minus_one(b4)));
  CHECK_FALSE(is_parabolic_quasi_coxeter(ob, b4_minus_one(b4)));

  // Coxeter elements are quasi-Coxeter everywhere.
  for (auto [fam, rank] : std::vector<std::pair<Family, int>>{
           {Family::A, 3}, {Family::B, 3}, {Family::D, 4}, {Family::H, 3},
           {Family::F, 4}}) {
    CoxGroup g = CoxGroup::build(fam, rank);
    DescentOracle oracle(g);
    Word w(g.simple_reflections().begin(), g.simple_reflections().end());
    CAPTURE(g.label());
    CHECK(is_quasi_coxeter(oracle, g.from_word(w)));
  }
}

TEST_CASE("every element of A_n is parabolic quasi-Coxeter") {
  for (int n : {2, 3, 4}) {
    CoxGroup g = CoxGroup::build(Family::A, n);
    DescentOracle oracle(g);
    for (const auto& w : g.all_elements())
      CHECK(is_parabolic_quasi_coxeter(oracle, w));
  }
}

TEST_CASE("quasi-Coxeter implies parabolic quasi-Coxeter") {
  CoxGroup g = CoxGroup::build(Family::B, 3);
  DescentOracle oracle(g);
  for (const auto& w : g.all_elements()) {
    if (is_quasi_coxeter(oracle, w))
      CHECK(is_parabolic_quasi_coxeter(oracle, w));
  }
}

TEST_CASE("pqc iff below some quasi-Coxeter element") {
  for (auto [fam, rank] :
       std::vector<std::pair<Family, int>>{{Family::B, 3}, {Family::D, 4}}) {
    CoxGroup g = CoxGroup::build(fam, rank);
    DescentOracle oracle(g);
    auto elements = g.all_elements();
    std::vector<GroupElement> qc;
    for (const auto& w : elements)
      if (is_quasi_coxeter(oracle, w)) qc.push_back(w);
    for (const auto& w : elements) {
      bool below = false;
      for (const auto& c : qc)
        if (g.absolute_leq(w, c)) {
          below = true;
          break;
        }
      CHECK(is_parabolic_quasi_coxeter(oracle, w) == below);
    }
  }
}

TEST_CASE("B_n: pqc elements are the prefixes of 2n-cycles") {
  for (int n : {3, 4}) {
    CoxGroup g = CoxGroup::build(Family::B, n);
    DescentOracle oracle(g);
    auto elements = g.all_elements();
    std::vector<GroupElement> cycles;
    for (const auto& w : elements)
      if (is_2n_cycle(g.to_signed_perm(w))) cycles.push_back(w);
    CHECK_FALSE(cycles.empty());
    for (const auto& w : elements) {
      bool prefix = false;
      for (const auto& c : cycles)
        if (g.absolute_leq(w, c)) {
          prefix = true;
          break;
        }
      CHECK(is_parabolic_quasi_coxeter(oracle, w) == prefix);
    }
  }
}

TEST_CASE("dihedral: quasi-Coxeter = Coxeter = generating pair products") {
  for (int m = 3; m <= 10; ++m) {
    CoxGroup g = CoxGroup::dihedral(m);
    DescentOracle oracle(g);
    for (const auto& w : g.all_elements()) {
      bool generating_pair_product = false;
      for (int i = 0; i < m && !generating_pair_product; ++i)
        for (int j = 0; j < m; ++j) {
          if (i == j) continue;
          if (!(g.multiply(g.reflection(i), g.reflection(j)) == w)) continue;
          if (int(g.reflection_closure({i, j}).size()) == m) {
            generating_pair_product = true;
            break;
          }
        }
      CHECK(is_quasi_coxeter(oracle, w) == generating_pair_product);
    }
  }
}

TEST_CASE("corank-1 prefixes of quasi-Coxeter elements are parabolic") {
  for (auto [fam, rank] :
       std::vector<std::pair<Family, int>>{{Family::B, 3}, {Family::A, 3}}) {
    CoxGroup g = CoxGroup::build(fam, rank);
    DescentOracle oracle(g);
    for (const auto& w : g.all_elements())
      if (is_quasi_coxeter(oracle, w))
        CHECK(corank1_prefix_parabolic_check(oracle, w));
  }
  CoxGroup d4 = CoxGroup::build(Family::D, 4);
  DescentOracle od(d4);
  CHECK(corank1_prefix_parabolic_check(od, d4_quasi_coxeter(d4)));
}

TEST_CASE("conjugacy classes against the brute-force oracle") {
  for (auto [fam, rank, expected] :
       std::vector<std::tuple<Family, int, int>>{
           {Family::A, 2, 3}, {Family::B, 2, 5}, {Family::D, 4, 13}}) {
    CoxGroup g = CoxGroup::build(fam, rank);
    auto classes = conjugacy_classes(g);
    CHECK(int(classes.classes.size()) == expected);
    auto brute = oracles::brute_conjugacy_classes(g);
    REQUIRE(brute.size() == classes.classes.size());
    std::uint64_t covered = 0;
    for (size_t i = 0; i < brute.size(); ++i) {
      CHECK(brute[i] == classes.classes[i]);
      covered += brute[i].size();
    }
    CHECK(covered == g.order());
  }
  CHECK_THROWS_AS(conjugacy_classes(CoxGroup::build(Family::E, 7)),
                  std::invalid_argument);
}

TEST_CASE("classification records are coherent") {
  CoxGroup d4 = CoxGroup::build(Family::D, 4);
  DescentOracle oracle(d4);
  GroupElement w = d4_quasi_coxeter(d4);
  ClassificationRecord rec = classify_element(oracle, w, default_orbit_cap());
  CHECK(rec.reflection_length == 4);
  CHECK(rec.quasi_coxeter);
  CHECK(rec.parabolic_quasi_coxeter);
  CHECK(int(rec.closure.size()) == d4.num_reflections());
  CHECK(rec.transitivity.transitive());

  ClassificationRecord refl =
      classify_element(oracle, d4.reflection(0), default_orbit_cap());
  CHECK(refl.reflection_length == 1);
  CHECK_FALSE(refl.quasi_coxeter);
  CHECK(refl.parabolic_quasi_coxeter);
  CHECK(refl.closure == std::vector<std::int32_t>{0});
  CHECK(refl.transitivity.transitive());
}

TEST_CASE("maximal parabolic intersections in D_n") {
  auto r6 = dn_maximal_parabolic_intersections(6);
  CHECK(r6.all_nontrivial);
  CHECK(r6.trivial_pairs.empty());

  auto r4 = dn_maximal_parabolic_intersections(4, true);
  CHECK_FALSE(r4.all_nontrivial);
  bool has_documented_witness = false;
  for (const auto& p : r4.trivial_pairs)
    if (p.set_a == std::vector<int>{3, 4} && p.set_b == std::vector<int>{2, 4})
      has_documented_witness = true;
  CHECK(has_documented_witness);

  auto r5 = dn_maximal_parabolic_intersections(5);
  CHECK_FALSE(r5.all_nontrivial);
  CHECK_FALSE(r5.trivial_pairs.empty());

  CHECK_THROWS_AS(dn_maximal_parabolic_intersections(3),
                  std::invalid_argument);
}

TEST_CASE("Cor 6.8 sampled in F4: pqc iff below a quasi-Coxeter element") {
  CoxGroup g = CoxGroup::build(Family::F, 4);
  DescentOracle oracle(g);
  auto elements = g.all_elements();
  std::vector<GroupElement> qc;
  for (const auto& w : elements)
    if (is_quasi_coxeter(oracle, w)) qc.push_back(w);
  CHECK_FALSE(qc.empty());
  std::mt19937 rng(83);
  for (int trial = 0; trial < 40; ++trial) {
    const GroupElement& w = elements[rng() % elements.size()];
    bool below = false;
    for (const auto& c : qc)
      if (g.absolute_leq(w, c)) {
        below = true;
        break;
      }
    CHECK(is_parabolic_quasi_coxeter(oracle, w) == below);
  }
}
