#include <doctest.h>

#include <random>
#include <set>

#include "coxkit/lattice.hpp"

using namespace coxkit;

namespace {

std::vector<std::int32_t> simple_set(const RootSystem& rs) {
  return {rs.simple_ids().begin(), rs.simple_ids().end()};
}

}  // namespace

TEST_CASE("subsystem closure") {
  CoxGroup a2 = CoxGroup::build(Family::A, 2);
  auto all = subsystem_closure(
      a2, {a2.simple_reflections()[0], a2.simple_reflections()[1]});
  CHECK(all.size() == 3);

  // Two orthogonal short roots of B2 close up to A1 x A1.
  CoxGroup b2 = CoxGroup::build(Family::B, 2);
  const RootSystem& rb = b2.roots();
  Vec e1{Scalar(1), Scalar(0)}, e2{Scalar(0), Scalar(1)};
  int i1 = rb.index_of(e1), i2 = rb.index_of(e2);
  auto cl = subsystem_closure(b2, {i1, i2});
  CHECK(cl == std::vector<std::int32_t>{std::min(i1, i2), std::max(i1, i2)});

  // A single root closes to itself.
  auto single = subsystem_closure(a2, {2});
  CHECK(single == std::vector<std::int32_t>{2});
}

TEST_CASE("lattice index") {
  auto b2 = RootSystem::build(Family::B, 2);
  Vec e1{Scalar(1), Scalar(0)}, e2{Scalar(0), Scalar(1)};
  Vec d1{Scalar(1), Scalar(-1)}, d2{Scalar(1), Scalar(1)};
  int ie1 = b2->index_of(e1), ie2 = b2->index_of(e2);
  int id1 = b2->index_of(d1), id2 = b2->index_of(d2);

  LatticeIndex self = lattice_index(*b2, {ie1, ie2}, {ie1, ie2});
  CHECK(self.finite);
  CHECK(self.index == 1);

  LatticeIndex two = lattice_index(*b2, {id1, id2}, {ie1, ie2});
  CHECK(two.finite);
  CHECK(two.index == 2);

  LatticeIndex inf = lattice_index(*b2, {ie1}, {ie1, ie2});
  CHECK_FALSE(inf.finite);

  // e1 is not in the Q-span of e2.
  CHECK_THROWS_AS(lattice_index(*b2, {ie1}, {ie2}), std::invalid_argument);
}

TEST_CASE("connection indices of the standard table") {
  for (int n = 1; n <= 8; ++n) {
    auto rs = RootSystem::build(Family::A, n);
    CHECK(connection_index(*rs, simple_set(*rs)) == n + 1);
  }
  for (int n = 4; n <= 8; ++n) {
    auto rs = RootSystem::build(Family::D, n);
    CHECK(connection_index(*rs, simple_set(*rs)) == 4);
  }
  CHECK(connection_index(*RootSystem::build(Family::E, 6),
                         simple_set(*RootSystem::build(Family::E, 6))) == 3);
  CHECK(connection_index(*RootSystem::build(Family::E, 7),
                         simple_set(*RootSystem::build(Family::E, 7))) == 2);
  CHECK(connection_index(*RootSystem::build(Family::E, 8),
                         simple_set(*RootSystem::build(Family::E, 8))) == 1);

  auto b3 = RootSystem::build(Family::B, 3);
  CHECK_THROWS_AS(connection_index(*b3, simple_set(*b3)),
                  std::invalid_argument);
}

TEST_CASE("index squared relates the connection indices (full rank)") {
  // Proper full-rank subsystems found from random subsets.
  std::mt19937 rng(67);
  for (auto [fam, rank] : std::vector<std::pair<Family, int>>{
           {Family::D, 4}, {Family::A, 4}, {Family::D, 5}}) {
    CoxGroup g = CoxGroup::build(fam, rank);
    const RootSystem& rs = g.roots();
    mpz_class host_index = connection_index(rs, simple_set(rs));
    std::uniform_int_distribution<int> pick(0, rs.num_positive() - 1);
    int found = 0;
    for (int trial = 0; trial < 200 && found < 24; ++trial) {
      std::vector<std::int32_t> seed(rank);
      for (auto& t : seed) t = pick(rng);
      auto sub = subsystem_closure(g, seed);
      LatticeIndex li = lattice_index(rs, sub, simple_set(rs));
      if (!li.finite) continue;  // lower rank
      ++found;
      mpz_class sub_index = connection_index(rs, sub);
      CHECK(li.index * li.index * host_index == sub_index);
    }
    CHECK(found > 0);
  }
}

TEST_CASE("roots of a lattice recover subsystems") {
  for (auto [fam, rank] : std::vector<std::pair<Family, int>>{
           {Family::A, 4}, {Family::D, 4}, {Family::D, 5}}) {
    CoxGroup g = CoxGroup::build(fam, rank);
    const RootSystem& rs = g.roots();

    // Phi(L(Phi)) = Phi.
    std::vector<std::int32_t> all_pos(rs.num_positive());
    for (int i = 0; i < rs.num_positive(); ++i) all_pos[i] = i;
    CHECK(roots_of_lattice(rs, all_pos) == all_pos);

    // L(Phi') cuts out exactly Phi' for random subsystems.
    std::mt19937 rng(71);
    std::uniform_int_distribution<int> pick(0, rs.num_positive() - 1);
    for (int trial = 0; trial < 30; ++trial) {
      int k = 1 + int(rng() % rank);
      std::vector<std::int32_t> seed(k);
      for (auto& t : seed) t = pick(rng);
      auto sub = subsystem_closure(g, seed);
      CHECK(roots_of_lattice(rs, sub) == sub);
    }

    // A single root only reaches itself.
    CHECK(roots_of_lattice(rs, {0}) == std::vector<std::int32_t>{0});
  }
}

TEST_CASE("full lattice generation") {
  CoxGroup d4 = CoxGroup::build(Family::D, 4);
  const RootSystem& rs = d4.roots();
  CHECK(generates_full_lattice(rs, simple_set(rs)));

  // The quasi-Coxeter example factorization of D4 generates everything;
  // its connection index is forced to the host value 4.
  auto s = d4.simple_reflections();
  std::vector<std::int32_t> word{
      s[2], d4.conj_reflection(s[1], s[2]), d4.conj_reflection(s[1], s[0]),
      s[3]};
  CHECK(generates_full_lattice(rs, word));
  CHECK(connection_index(rs, word) == 4);

  // A proper subsystem does not.
  auto sub = subsystem_closure(d4, {s[0]});
  CHECK_FALSE(generates_full_lattice(rs, sub));

  // Non-simply-laced hosts are rejected: the criterion breaks in B2.
  auto b2 = RootSystem::build(Family::B, 2);
  Vec e1{Scalar(1), Scalar(0)}, e2{Scalar(0), Scalar(1)};
  CHECK_THROWS_AS(
      generates_full_lattice(*b2, {b2->index_of(e1), b2->index_of(e2)}),
      std::invalid_argument);
}

TEST_CASE("closure properties of generated subsystems") {
  std::mt19937 rng(73);
  CoxGroup g = CoxGroup::build(Family::D, 4);
  const RootSystem& rs = g.roots();
  std::uniform_int_distribution<int> pick(0, rs.num_positive() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    int k = 1 + int(rng() % 4);
    std::vector<std::int32_t> seed(k);
    for (auto& t : seed) t = pick(rng);
    auto closure = subsystem_closure(g, seed);
    // Idempotent, and the seed lattice equals the closure lattice.
    CHECK(subsystem_closure(g, closure) == closure);
    LatticeIndex li = lattice_index(rs, seed, closure);
    CHECK(li.finite);
    CHECK(li.index == 1);
  }
}

TEST_CASE("kluitmann invariant on individual elements") {
  CoxGroup a3 = CoxGroup::build(Family::A, 3);
  DescentOracle oracle(a3);
  CHECK(kluitmann_invariant_check(oracle, a3.identity()));
  auto s = a3.simple_reflections();
  CHECK(kluitmann_invariant_check(oracle, a3.from_word({s[0], s[1], s[2]})));
  CHECK(kluitmann_invariant_check(oracle, a3.from_word({s[0], s[1]})));

  CoxGroup b3 = CoxGroup::build(Family::B, 3);
  DescentOracle ob(b3);
  CHECK_THROWS_AS(kluitmann_invariant_check(ob, b3.identity()),
                  std::invalid_argument);
}

TEST_CASE("lattice generation agrees with reflection closure (simply laced)") {
  // The two routes to "generates W": full root lattice vs full subsystem
  // closure.  They must agree on simply laced hosts.
  std::mt19937 rng(79);
  for (auto [fam, rank] : std::vector<std::pair<Family, int>>{
           {Family::A, 4}, {Family::D, 4}, {Family::D, 5}}) {
    CoxGroup g = CoxGroup::build(fam, rank);
    const RootSystem& rs = g.roots();
    std::uniform_int_distribution<int> pick(0, rs.num_positive() - 1);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<std::int32_t> ids(rank);
      for (auto& t : ids) t = pick(rng);
      bool by_lattice = generates_full_lattice(rs, ids);
      bool by_closure =
          int(g.reflection_closure(ids).size()) == g.num_reflections();
      CHECK(by_lattice == by_closure);
    }
  }
}
