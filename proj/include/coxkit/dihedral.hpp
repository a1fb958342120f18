#pragma once

#include <cstdint>
#include <stdexcept>

namespace coxkit {

// Coordinate-free model of the dihedral group of order 2m, m >= 3.
// Elements are (kind, index): kind 0 is the rotation r_k, kind 1 the
// reflection f_k, k taken mod m.  With composition read as "apply the
// right factor first" the products are
//   r_j . r_k = r_{j+k},   f_j . r_k = f_{j-k},
//   r_j . f_k = f_{j+k},   f_j . f_k = r_{j-k},
// so two reflections with indices i, j multiply to the rotation i-j.
// cos(pi/m) is not golden-rational for general m, which is why this type
// carries no coordinates at all.
struct DihedralModel {
  int m;

  explicit DihedralModel(int m_) : m(m_) {
    if (m_ < 3) throw std::invalid_argument("dihedral: need m >= 3");
  }

  int mod(long long x) const {
    long long r = x % m;
    return int(r < 0 ? r + m : r);
  }

  struct Elt {
    std::int8_t kind;  // 0 rotation, 1 reflection
    std::int32_t idx;
  };

  Elt identity() const { return {0, 0}; }
  Elt rotation(int k) const { return {0, mod(k)}; }
  Elt reflection(int k) const { return {1, mod(k)}; }

  // Classical composition a ∘ b (b acts first).
  Elt compose(Elt a, Elt b) const {
    if (a.kind == 0 && b.kind == 0) return {0, mod(a.idx + b.idx)};
    if (a.kind == 0) return {1, mod(a.idx + b.idx)};
    if (b.kind == 0) return {1, mod(a.idx - b.idx)};
    return {0, mod(a.idx - b.idx)};
  }
  Elt inverse(Elt a) const {
    if (a.kind == 1) return a;
    return {0, mod(-a.idx)};
  }
  // f_t f_r f_t = f_{2t-r}
  int conj_reflection(int t, int r) const { return mod(2LL * t - r); }

  int order() const { return 2 * m; }
  int reflection_length(Elt a) const {
    if (a.kind == 1) return 1;
    return a.idx == 0 ? 0 : 2;
  }
  bool is_involution(Elt a) const {
    Elt sq = compose(a, a);
    return !(a.kind == 0 && a.idx == 0) && sq.kind == 0 && sq.idx == 0;
  }
};

}  // namespace coxkit
