#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "coxkit/linalg.hpp"
#include "coxkit/scalar.hpp"

namespace coxkit {

enum class Family { A, B, D, E, F, H, I2 };

std::string family_name(Family f);
Family parse_family(const std::string& s);

// A finite root system in explicit coordinates.  Roots are indexed
// 0..2N-1 with the positive roots first, sorted lexicographically by their
// coefficient vectors over the simple system; root N+i is -root i.
//
// Crystallographic families use integer coordinates (E and F types are
// stored doubled so that the half-integer planche entries clear); H3/H4
// live in the golden-ratio field.  I2(m) has no coordinate model here, see
// dihedral.hpp.
class RootSystem {
 public:
  static std::shared_ptr<const RootSystem> build(Family f, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  int ambient_dim() const { return ambient_dim_; }
  int coordinate_scale() const { return scale_; }
  bool crystallographic() const { return crystallographic_; }
  bool simply_laced() const { return simply_laced_; }
  std::string label() const;

  int num_positive() const { return int(roots_.size()) / 2; }
  int num_roots() const { return int(roots_.size()); }
  const Vec& root(int id) const { return roots_[id]; }
  const Scalar& squared_length(int id) const {
    return sq_len_[id < num_positive() ? id : id - num_positive()];
  }
  int negation(int id) const {
    int n = num_positive();
    return id < n ? id + n : id - n;
  }
  int positive_part(int id) const {
    int n = num_positive();
    return id < n ? id : id - n;
  }
  bool is_positive(int id) const { return id < num_positive(); }

  const std::vector<int32_t>& simple_ids() const { return simple_ids_; }
  // Coefficients of positive root id over the simple system.
  const Vec& simple_coefficients(int id) const { return coeffs_[id]; }

  // Index lookup by exact coordinates; -1 when absent.
  int index_of(const Vec& v) const;

  // Image of an arbitrary vector under the reflection in root alpha_id.
  Vec reflect(int alpha_id, const Vec& v) const;
  // Image of root r under the reflection in root alpha_id, as an index.
  int reflect_root(int alpha_id, int r) const;
  // reflect_root restricted to positive ids, normalized back to the
  // positive representative.  This is the conjugation table for
  // reflections: s_a s_r s_a = s_{positive_reflect(a, r)}.
  int positive_reflect(int a, int r) const {
    return positive_part(table_[size_t(a) * num_positive() + r]);
  }
  int signed_reflect(int a, int r) const {
    return table_[size_t(a) * num_positive() + r];
  }

  // Cartan-like pairing <beta, alpha> = 2(beta|alpha)/(alpha|alpha) on the
  // simple system, M[i][j] = <alpha_j, alpha_i>.  Entries are integers
  // exactly when the system is crystallographic.
  Mat cartan_like_matrix() const;

 private:
  RootSystem() = default;
  void finalize(std::vector<Vec> all_roots, std::vector<Vec> simple);

  Family family_;
  int rank_ = 0;
  int ambient_dim_ = 0;
  int scale_ = 1;
  bool crystallographic_ = true;
  bool simply_laced_ = false;
  std::vector<Vec> roots_;
  std::vector<Scalar> sq_len_;          // per positive root
  std::vector<int32_t> simple_ids_;
  std::vector<Vec> coeffs_;             // per positive root
  std::map<Vec, int, VecLess> index_;
  std::vector<int32_t> table_;          // signed reflection table, pos x pos
};

// |W| for every supported family (rank = m for I2).
std::uint64_t coxeter_order(Family f, int rank);

}  // namespace coxkit
