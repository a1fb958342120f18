#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "coxkit/dihedral.hpp"
#include "coxkit/linalg.hpp"
#include "coxkit/root_system.hpp"

namespace coxkit {

// A group element, stored as the image of each positive root.  Values lie
// in [0, 2N): an image >= N means the positive root is sent to a negative
// one.  Images of negative roots follow from w(-a) = -w(a).  Orbit
// enumeration lives on equality and hashing of these arrays, so they stay
// raw vectors rather than matrices.
//
// For the dihedral backend the array is {kind, index} (see dihedral.hpp).
struct GroupElement {
  std::vector<std::int32_t> img;
  std::uint32_t gid = 0;  // identity tag of the owning group

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend bool operator<(const GroupElement& x, const GroupElement& y) {
    return x.img < y.img;
  }
};

struct GroupElementHash {
  size_t operator()(const GroupElement& e) const {
    size_t h = 1469598103934665603ull;
    for (auto v : e.img) {
      h ^= size_t(std::uint32_t(v));
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Signed permutation of {-n..-1, 1..n} with w(-i) = -w(i); the
// combinatorial model for types B and D.  img[i-1] is the image of i.
struct SignedPerm {
  std::vector<std::int32_t> img;

  static SignedPerm identity(int n);
  int n() const { return int(img.size()); }
  int apply(int x) const {
    return x > 0 ? img[x - 1] : -img[-x - 1];
  }
  SignedPerm compose(const SignedPerm& o) const;  // this after o
  SignedPerm inverse() const;
  bool is_even() const;  // even number of sign flips (D_n membership)
  std::string str() const;

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
  friend bool operator<(const SignedPerm& x, const SignedPerm& y) {
    return x.img < y.img;
  }
};

// Facade over the two element backends.  Reflections are indexed by
// positive root (root-backed case) or by axis index 0..m-1 (dihedral
// case); everything downstream works through these indices plus the
// conjugation table, so the Hurwitz machinery never touches coordinates.
class CoxGroup {
 public:
  static CoxGroup from_roots(std::shared_ptr<const RootSystem> rs);
  static CoxGroup dihedral(int m);
  static CoxGroup build(Family f, int rank);  // dispatches on family

  bool is_dihedral() const { return dihedral_.has_value(); }
  const DihedralModel& dihedral_model() const { return *dihedral_; }
  const RootSystem& roots() const;
  bool has_roots() const { return rs_ != nullptr; }
  std::uint32_t id() const { return gid_; }
  std::string label() const;
  Family family() const;
  int rank() const;
  std::uint64_t order() const;

  int num_reflections() const { return n_refl_; }
  GroupElement identity() const;
  GroupElement reflection(int t) const;
  // The reflection indices of a simple system (the positive-root ids of
  // the simple roots; axes 0 and 1 for the dihedral backend).
  const std::vector<std::int32_t>& simple_reflections() const {
    return simple_refl_;
  }

  // Classical composition: (a*b)(v) = a(b(v)).  Words multiply out
  // left-to-right under a left fold, so conjugate(t, w) for a reflection t
  // is the reflection in w(root(t)).
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  GroupElement conjugate(const GroupElement& a, const GroupElement& b) const;
  GroupElement from_word(const std::vector<std::int32_t>& refl_ids) const;
  bool is_identity(const GroupElement& a) const;

  // Index of a reflection element; nullopt when a is not a reflection.
  std::optional<int> reflection_index(const GroupElement& a) const;
  // s_t s_r s_t as a reflection index (pure table lookup).
  int conj_reflection(int t, int r) const;
  // Image of root id under a (root-backed only).
  int root_image(const GroupElement& a, int root_id) const;

  // --- linear data (root-backed; dihedral has closed forms) ---
  Mat matrix_of(const GroupElement& a) const;
  // Echelon basis of Mov(w) = im(w - 1), over the root span.
  Echelon moved_space(const GroupElement& a) const;
  int moved_space_dim(const GroupElement& a) const;
  int fixed_space_dim(const GroupElement& a) const;
  int reflection_length(const GroupElement& a) const;
  bool absolute_leq(const GroupElement& u, const GroupElement& v) const;

  // Reflections t with t <=_T w, i.e. ell(t w) = ell(w) - 1.  These are
  // exactly the reflections of the parabolic closure of w.
  std::vector<std::int32_t> descent_reflections(const GroupElement& a) const;

  // Closure of a set of reflection indices under mutual conjugation: the
  // reflections of the subgroup they generate (equivalently the positive
  // roots of the subsystem they generate).
  std::vector<std::int32_t> reflection_closure(
      std::vector<std::int32_t> ids) const;

  // Full enumeration in a deterministic breadth-first order.
  std::vector<GroupElement> all_elements() const;

  // Signed-permutation bridge (families B and D only).
  SignedPerm to_signed_perm(const GroupElement& a) const;
  GroupElement from_signed_perm(const SignedPerm& sp) const;

 private:
  CoxGroup() = default;
  void check_same_group(const GroupElement& a) const;

  std::shared_ptr<const RootSystem> rs_;
  std::optional<DihedralModel> dihedral_;
  std::uint32_t gid_ = 0;
  int n_refl_ = 0;
  std::vector<std::int32_t> simple_refl_;
  std::vector<GroupElement> reflections_;
  std::unordered_map<GroupElement, int, GroupElementHash> refl_index_;
  // Root-backed helpers for matrix reconstruction.
  Mat basis_;      // columns: simple roots then a complement basis
  Mat basis_inv_;
};

// Memoizes lengths and descent sets per element.  The factorization
// recursion queries the same elements heavily; one of these per worker
// thread keeps the whole thing lock-free.
class DescentOracle {
 public:
  explicit DescentOracle(const CoxGroup& g) : g_(g) {}

  struct Entry {
    int length;
    std::vector<std::int32_t> descents;
  };

  const Entry& get(const GroupElement& w) {
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    Entry e;
    e.descents = g_.descent_reflections(w);
    e.length = g_.reflection_length(w);
    return cache_.emplace(w, std::move(e)).first->second;
  }
  const CoxGroup& group() const { return g_; }

 private:
  const CoxGroup& g_;
  std::unordered_map<GroupElement, Entry, GroupElementHash> cache_;
};

}  // namespace coxkit
