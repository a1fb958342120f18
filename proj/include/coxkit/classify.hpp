#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coxkit/group.hpp"
#include "coxkit/hurwitz.hpp"

namespace coxkit {

// Positive-root indices of the parabolic closure of w (the smallest
// parabolic subgroup containing it): exactly the reflections t with
// t <=_T w, i.e. the roots lying in Mov(w).
std::vector<std::int32_t> parabolic_closure(const CoxGroup& g,
                                            const GroupElement& w);

// Whether the reflection subgroup generated by the given reflections is
// parabolic: its subsystem closure must exhaust every root of the host
// lying in the closure's linear span.
bool is_parabolic_subgroup(const CoxGroup& g,
                           const std::vector<std::int32_t>& gen_ids);

// Whether some reduced factorization of w generates the whole group.
// Scans factorizations with early exit; on simply laced hosts each
// factorization is tested through the root-lattice criterion.
bool is_quasi_coxeter(DescentOracle& oracle, const GroupElement& w);

// Whether some reduced factorization of w generates a parabolic subgroup.
// Simply laced hosts test a single factorization (any one works there);
// other types scan all factorizations with early exit.
bool is_parabolic_quasi_coxeter(DescentOracle& oracle, const GroupElement& w);

// For a quasi-Coxeter w: do the first n-1 entries of every reduced
// factorization generate a parabolic subgroup?
bool corank1_prefix_parabolic_check(DescentOracle& oracle,
                                    const GroupElement& w);

struct ClassificationRecord {
  GroupElement element;
  int reflection_length = 0;
  bool quasi_coxeter = false;
  bool parabolic_quasi_coxeter = false;
  std::vector<std::int32_t> closure;  // parabolic closure, positive roots
  TransitivityCheck transitivity;
};

ClassificationRecord classify_element(DescentOracle& oracle,
                                      const GroupElement& w,
                                      std::uint64_t cap);

// Conjugacy classes by full enumeration (|W| bounded); classes are sorted
// by their lexicographically minimal member, which is also the
// representative, so the output is deterministic.
struct ConjugacyClasses {
  std::vector<std::vector<GroupElement>> classes;
  std::vector<GroupElement> representatives() const {
    std::vector<GroupElement> reps;
    reps.reserve(classes.size());
    for (const auto& c : classes) reps.push_back(c.front());
    return reps;
  }
};
ConjugacyClasses conjugacy_classes(const CoxGroup& g,
                                   std::uint64_t bound = 100000);
std::vector<GroupElement> conjugacy_class_representatives(
    const CoxGroup& g, std::uint64_t bound = 100000);

// --- maximal parabolic intersections in D_n (signed permutation model) ---

// A maximal parabolic of W(D_n) is the stabilizer of a set A of signed
// letters; conjugates of std parabolics correspond to images w(A).  A
// pair is recorded as the two stabilized sets.
struct DnWitnessPair {
  int i_index = 0;                // the standard parabolic W_I, I = S \ {s_i}
  std::vector<int> set_a, set_b;  // A_I and the conjugated set
};

struct DnIntersectionReport {
  int n = 0;
  std::uint64_t pairs_checked = 0;
  bool all_nontrivial = true;
  // Pairs whose intersection is trivial (expected only for n in {4, 5}).
  std::vector<DnWitnessPair> trivial_pairs;
};

// Checks every pair (W_I, w W_J w^-1) of maximal parabolics of W(D_n), up
// to simultaneous conjugation, for a nontrivial intersection.  A common
// reflection is searched combinatorially first; reflection-free pairs are
// settled by enumerating the smaller stabilizer (n <= 6).
DnIntersectionReport dn_maximal_parabolic_intersections(
    int n, bool collect_all_witnesses = false);

// Serialized form of an element: the image sequence of the simple roots
// (or r<k>/f<k> for the dihedral backend).
std::string element_to_string(const CoxGroup& g, const GroupElement& w);

}  // namespace coxkit
