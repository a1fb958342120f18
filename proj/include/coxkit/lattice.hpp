#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "coxkit/group.hpp"
#include "coxkit/hurwitz.hpp"
#include "coxkit/intmat.hpp"
#include "coxkit/root_system.hpp"

namespace coxkit {

// Root-lattice computations.  All of these work on sets of root indices
// of a crystallographic host (integer coordinates); the connection-index
// family additionally requires a simply laced host, where the Gram matrix
// is normalized back to the (alpha|alpha) = 2 convention before any
// determinant is taken (E types are stored with doubled coordinates).

// Positive-root indices of the smallest root subsystem containing the
// given roots (closure under mutual reflection).  Works for any backend.
std::vector<std::int32_t> subsystem_closure(const CoxGroup& g,
                                            const std::vector<std::int32_t>& ids);

struct LatticeIndex {
  bool finite = false;
  mpz_class index;  // meaningful when finite
};

// Index of span_Z(sub) inside span_Z(sup); "infinite" when the spans have
// different dimensions.  Rejects sub when it is not contained in the
// Q-span of sup, or when its lattice is not a sublattice of span_Z(sup).
LatticeIndex lattice_index(const RootSystem& rs,
                           const std::vector<std::int32_t>& sub,
                           const std::vector<std::int32_t>& sup);

// Connection index i(R): determinant of the normalized Gram matrix of a
// Z-basis of L(R), the basis extracted by Hermite reduction.  Simply
// laced hosts only.
mpz_class connection_index(const RootSystem& rs,
                           const std::vector<std::int32_t>& ids);

// All host roots lying in L(R), as positive indices.  Simply laced only.
std::vector<std::int32_t> roots_of_lattice(const RootSystem& rs,
                                           const std::vector<std::int32_t>& ids);

// True iff L(R) equals the full root lattice L(Phi); for |R| = rank this
// is the fast quasi-Coxeter test.  Simply laced hosts only: the
// equivalence with subgroup generation fails already in B2.
bool generates_full_lattice(const RootSystem& rs,
                            const std::vector<std::int32_t>& ids);

// True iff the connection index is constant across the root sets of all
// reduced factorizations of w.
bool kluitmann_invariant_check(DescentOracle& oracle, const GroupElement& w);

}  // namespace coxkit
