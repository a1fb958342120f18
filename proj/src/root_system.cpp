#include "coxkit/root_system.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace coxkit {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::H: return "H";
    case Family::I2: return "I2";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b" || s == "C" || s == "c") return Family::B;
  if (s == "D" || s == "d") return Family::D;
  if (s == "E" || s == "e") return Family::E;
  if (s == "F" || s == "f") return Family::F;
  if (s == "H" || s == "h") return Family::H;
  if (s == "I2" || s == "i2" || s == "I" || s == "i") return Family::I2;
  throw std::invalid_argument("unknown type label '" + s +
                              "' (expected A, B, D, E, F, H or I2)");
}

std::string RootSystem::label() const {
  return family_name(family_) + std::to_string(rank_);
}

namespace {

Vec basis_vec(int dim, int i, Scalar value) {
  Vec v(dim, Scalar(0));
  v[i] = std::move(value);
  return v;
}

// {e_i - e_j : i != j} in dimension n+1.
void roots_a(int n, std::vector<Vec>& roots, std::vector<Vec>& simple) {
  int d = n + 1;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      Vec v(d, Scalar(0));
      v[i] = Scalar(1);
      v[j] = Scalar(-1);
      roots.push_back(std::move(v));
    }
  for (int i = 0; i < n; ++i) {
    Vec v(d, Scalar(0));
    v[i] = Scalar(1);
    v[i + 1] = Scalar(-1);
    simple.push_back(std::move(v));
  }
}

// {±e_i} ∪ {±e_i ± e_j : i < j}.
void roots_b(int n, std::vector<Vec>& roots, std::vector<Vec>& simple) {
  for (int i = 0; i < n; ++i)
    for (int s : {1, -1}) roots.push_back(basis_vec(n, i, Scalar(s)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          Vec v(n, Scalar(0));
          v[i] = Scalar(si);
          v[j] = Scalar(sj);
          roots.push_back(std::move(v));
        }
  for (int i = 0; i + 1 < n; ++i) {
    Vec v(n, Scalar(0));
    v[i] = Scalar(1);
    v[i + 1] = Scalar(-1);
    simple.push_back(std::move(v));
  }
  simple.push_back(basis_vec(n, n - 1, Scalar(1)));
}

// {±e_i ± e_j : i < j}.
void roots_d(int n, std::vector<Vec>& roots, std::vector<Vec>& simple) {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          Vec v(n, Scalar(0));
          v[i] = Scalar(si);
          v[j] = Scalar(sj);
          roots.push_back(std::move(v));
        }
  for (int i = 0; i + 1 < n; ++i) {
    Vec v(n, Scalar(0));
    v[i] = Scalar(1);
    v[i + 1] = Scalar(-1);
    simple.push_back(std::move(v));
  }
  Vec last(n, Scalar(0));
  last[n - 2] = Scalar(1);
  last[n - 1] = Scalar(1);
  simple.push_back(std::move(last));
}

// E6/E7/E8 in the planche coordinates of R^8, doubled so every entry is an
// integer.  E8: ±2e_i ± 2e_j together with all (±1)^8 patterns having an
// even number of minus signs; E7 and E6 are the standard subsystems.
void roots_e(int n, std::vector<Vec>& roots, std::vector<Vec>& simple) {
  const int d = 8;
  auto signed_pattern = [&](unsigned mask) {
    Vec v(d, Scalar(0));
    for (int i = 0; i < d; ++i) v[i] = Scalar((mask >> i) & 1 ? -1 : 1);
    return v;
  };
  if (n == 8) {
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        for (int si : {1, -1})
          for (int sj : {1, -1}) {
            Vec v(d, Scalar(0));
            v[i] = Scalar(2 * si);
            v[j] = Scalar(2 * sj);
            roots.push_back(std::move(v));
          }
    for (unsigned mask = 0; mask < 256; ++mask)
      if (__builtin_popcount(mask) % 2 == 0)
        roots.push_back(signed_pattern(mask));
  } else if (n == 7) {
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        for (int si : {1, -1})
          for (int sj : {1, -1}) {
            Vec v(d, Scalar(0));
            v[i] = Scalar(2 * si);
            v[j] = Scalar(2 * sj);
            roots.push_back(std::move(v));
          }
    for (int s : {1, -1}) {
      Vec v(d, Scalar(0));
      v[6] = Scalar(2 * s);
      v[7] = Scalar(-2 * s);
      roots.push_back(std::move(v));
    }
    // ±(e8 - e7 + sum eta_i e_i), odd number of eta_i = -1.
    for (unsigned mask = 0; mask < 64; ++mask) {
      if (__builtin_popcount(mask) % 2 != 1) continue;
      Vec v(d, Scalar(0));
      for (int i = 0; i < 6; ++i) v[i] = Scalar((mask >> i) & 1 ? -1 : 1);
      v[6] = Scalar(-1);
      v[7] = Scalar(1);
      roots.push_back(v);
      roots.push_back(-v);
    }
  } else {
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        for (int si : {1, -1})
          for (int sj : {1, -1}) {
            Vec v(d, Scalar(0));
            v[i] = Scalar(2 * si);
            v[j] = Scalar(2 * sj);
            roots.push_back(std::move(v));
          }
    // ±(e8 - e7 - e6 + sum eta_i e_i), even number of eta_i = -1.
    for (unsigned mask = 0; mask < 32; ++mask) {
      if (__builtin_popcount(mask) % 2 != 0) continue;
      Vec v(d, Scalar(0));
      for (int i = 0; i < 5; ++i) v[i] = Scalar((mask >> i) & 1 ? -1 : 1);
      v[5] = Scalar(-1);
      v[6] = Scalar(-1);
      v[7] = Scalar(1);
      roots.push_back(v);
      roots.push_back(-v);
    }
  }
  // Simple roots, doubled: a1 = (e1+e8)-(e2+...+e7), a2 = 2e1+2e2,
  // a_k = 2e_{k-1} - 2e_{k-2} for k >= 3.
  Vec a1(d, Scalar(-1));
  a1[0] = Scalar(1);
  a1[7] = Scalar(1);
  simple.push_back(std::move(a1));
  Vec a2(d, Scalar(0));
  a2[0] = Scalar(2);
  a2[1] = Scalar(2);
  simple.push_back(std::move(a2));
  for (int k = 3; k <= n; ++k) {
    Vec v(d, Scalar(0));
    v[k - 2] = Scalar(2);
    v[k - 3] = Scalar(-2);
    simple.push_back(std::move(v));
  }
}

// F4 doubled: ±2e_i, ±2e_i ± 2e_j, (±1,±1,±1,±1).
void roots_f4(std::vector<Vec>& roots, std::vector<Vec>& simple) {
  const int d = 4;
  for (int i = 0; i < d; ++i)
    for (int s : {1, -1}) roots.push_back(basis_vec(d, i, Scalar(2 * s)));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          Vec v(d, Scalar(0));
          v[i] = Scalar(2 * si);
          v[j] = Scalar(2 * sj);
          roots.push_back(std::move(v));
        }
  for (unsigned mask = 0; mask < 16; ++mask) {
    Vec v(d, Scalar(0));
    for (int i = 0; i < d; ++i) v[i] = Scalar((mask >> i) & 1 ? -1 : 1);
    roots.push_back(std::move(v));
  }
  simple.push_back(Vec{Scalar(0), Scalar(2), Scalar(-2), Scalar(0)});
  simple.push_back(Vec{Scalar(0), Scalar(0), Scalar(2), Scalar(-2)});
  simple.push_back(Vec{Scalar(0), Scalar(0), Scalar(0), Scalar(2)});
  simple.push_back(Vec{Scalar(1), Scalar(-1), Scalar(-1), Scalar(-1)});
}

int permutation_parity(const int* p, int n) {
  int par = 0;
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int j = i, len = 0;
    while (!seen[j]) {
      seen[j] = true;
      j = p[j];
      ++len;
    }
    par ^= (len - 1) & 1;
  }
  return par;
}

// H3: ±2e_i and the cyclic permutations of (±1, ±phi, ±1/phi).
// H4: all ±2e_i, all (±1,±1,±1,±1), and the even permutations of
// (0, ±1, ±phi, ±1/phi).  Every root has squared length 4.
void roots_h(int n, std::vector<Vec>& roots, std::vector<Vec>& simple) {
  Scalar one(1), two(2), phi = Scalar::phi(), iphi = Scalar::inv_phi();
  if (n == 3) {
    for (int i = 0; i < 3; ++i)
      for (int s : {1, -1}) roots.push_back(basis_vec(3, i, Scalar(2 * s)));
    Vec base{one, phi, iphi};
    for (int rot = 0; rot < 3; ++rot) {
      for (unsigned mask = 0; mask < 8; ++mask) {
        Vec v(3);
        for (int i = 0; i < 3; ++i) {
          Scalar c = base[(i - rot + 3) % 3];
          v[i] = (mask >> i) & 1 ? -c : c;
        }
        roots.push_back(std::move(v));
      }
    }
    simple.push_back(Vec{-two, Scalar(0), Scalar(0)});
    simple.push_back(Vec{phi, iphi, -one});
    simple.push_back(Vec{Scalar(0), Scalar(0), two});
  } else {
    for (int i = 0; i < 4; ++i)
      for (int s : {1, -1}) roots.push_back(basis_vec(4, i, Scalar(2 * s)));
    for (unsigned mask = 0; mask < 16; ++mask) {
      Vec v(4);
      for (int i = 0; i < 4; ++i) v[i] = (mask >> i) & 1 ? -one : one;
      roots.push_back(std::move(v));
    }
    Vec base{Scalar(0), one, phi, iphi};
    int perm[4] = {0, 1, 2, 3};
    std::sort(perm, perm + 4);
    do {
      if (permutation_parity(perm, 4) != 0) continue;
      for (unsigned mask = 0; mask < 16; ++mask) {
        Vec v(4);
        bool skip = false;
        for (int i = 0; i < 4; ++i) {
          Scalar c = base[perm[i]];
          if (c.is_zero() && ((mask >> i) & 1)) {
            skip = true;  // avoid duplicating the zero coordinate
            break;
          }
          v[i] = (mask >> i) & 1 ? -c : c;
        }
        if (!skip) roots.push_back(std::move(v));
      }
    } while (std::next_permutation(perm, perm + 4));
    simple.push_back(Vec{-two, Scalar(0), Scalar(0), Scalar(0)});
    simple.push_back(Vec{phi, -one, iphi, Scalar(0)});
    simple.push_back(Vec{Scalar(0), phi, -iphi, -one});
    simple.push_back(Vec{Scalar(0), Scalar(0), Scalar(0), two});
  }
}

}  // namespace

std::shared_ptr<const RootSystem> RootSystem::build(Family f, int rank) {
  auto rs = std::shared_ptr<RootSystem>(new RootSystem());
  rs->family_ = f;
  rs->rank_ = rank;
  std::vector<Vec> roots, simple;
  switch (f) {
    case Family::A:
      if (rank < 1) throw std::invalid_argument("A_n requires n >= 1");
      roots_a(rank, roots, simple);
      rs->simply_laced_ = true;
      break;
    case Family::B:
      if (rank < 2) throw std::invalid_argument("B_n requires n >= 2");
      roots_b(rank, roots, simple);
      break;
    case Family::D:
      if (rank < 4) throw std::invalid_argument("D_n requires n >= 4");
      roots_d(rank, roots, simple);
      rs->simply_laced_ = true;
      break;
    case Family::E:
      if (rank < 6 || rank > 8)
        throw std::invalid_argument("E_n requires n in {6,7,8}");
      roots_e(rank, roots, simple);
      rs->simply_laced_ = true;
      rs->scale_ = 2;
      break;
    case Family::F:
      if (rank != 4) throw std::invalid_argument("F_n requires n = 4");
      roots_f4(roots, simple);
      rs->scale_ = 2;
      break;
    case Family::H:
      if (rank != 3 && rank != 4)
        throw std::invalid_argument("H_n requires n in {3,4}");
      roots_h(rank, roots, simple);
      rs->crystallographic_ = false;
      rs->scale_ = 2;
      break;
    case Family::I2:
      throw std::invalid_argument(
          "I2(m) has no coordinate root system here; use the dihedral model");
  }
  rs->ambient_dim_ = int(roots.front().size());
  rs->finalize(std::move(roots), std::move(simple));
  return rs;
}

void RootSystem::finalize(std::vector<Vec> all_roots,
                          std::vector<Vec> simple) {
  const int dim = ambient_dim_;
  Mat simple_cols(dim, int(simple.size()));
  for (size_t j = 0; j < simple.size(); ++j)
    for (int i = 0; i < dim; ++i) simple_cols.at(i, int(j)) = simple[j][i];

  struct Pos {
    Vec coeff;
    Vec root;
  };
  std::vector<Pos> positives;
  int negatives = 0;
  for (auto& r : all_roots) {
    auto c = solve(simple_cols, r);
    if (!c) throw std::logic_error("root outside simple span");
    bool nonneg = true, nonpos = true;
    for (const auto& x : *c) {
      int s = x.sign();
      if (s < 0) nonneg = false;
      if (s > 0) nonpos = false;
    }
    if (nonneg && !nonpos)
      positives.push_back({std::move(*c), std::move(r)});
    else if (nonpos)
      ++negatives;
    else
      throw std::logic_error("root with mixed-sign coefficients");
  }
  if (int(positives.size()) != negatives)
    throw std::logic_error("positive/negative root count mismatch");

  std::sort(positives.begin(), positives.end(),
            [](const Pos& x, const Pos& y) {
              return VecLess{}(x.coeff, y.coeff);
            });

  const int n = int(positives.size());
  roots_.clear();
  roots_.reserve(2 * n);
  coeffs_.clear();
  for (auto& p : positives) {
    roots_.push_back(p.root);
    coeffs_.push_back(p.coeff);
  }
  for (int i = 0; i < n; ++i) roots_.push_back(-roots_[i]);

  for (int i = 0; i < 2 * n; ++i) index_[roots_[i]] = i;
  if (int(index_.size()) != 2 * n)
    throw std::logic_error("duplicate roots in construction");

  sq_len_.clear();
  for (int i = 0; i < n; ++i) sq_len_.push_back(dot(roots_[i], roots_[i]));

  simple_ids_.clear();
  for (const auto& s : simple) {
    auto it = index_.find(s);
    if (it == index_.end() || it->second >= n)
      throw std::logic_error("simple root not positive");
    simple_ids_.push_back(it->second);
  }

  table_.assign(size_t(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int r = 0; r < n; ++r) {
      int img = index_of(reflect(a, roots_[r]));
      if (img < 0) throw std::logic_error("root system not reflection-closed");
      table_[size_t(a) * n + r] = img;
    }
}

int RootSystem::index_of(const Vec& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

Vec RootSystem::reflect(int alpha_id, const Vec& v) const {
  if (alpha_id < 0 || alpha_id >= num_roots())
    throw std::invalid_argument("reflect: bad root index");
  if (int(v.size()) != ambient_dim_)
    throw std::invalid_argument("reflect: dimension mismatch");
  const Vec& alpha = roots_[alpha_id];
  Scalar c = Scalar(2) * dot(v, alpha) / squared_length(alpha_id);
  Vec out(v);
  for (int i = 0; i < ambient_dim_; ++i) out[i] -= c * alpha[i];
  return out;
}

int RootSystem::reflect_root(int alpha_id, int r) const {
  int n = num_positive();
  int a = positive_part(alpha_id);
  if (r < n) return table_[size_t(a) * n + r];
  return negation(table_[size_t(a) * n + (r - n)]);
}

Mat RootSystem::cartan_like_matrix() const {
  int n = rank_;
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec& ai = roots_[simple_ids_[i]];
      const Vec& aj = roots_[simple_ids_[j]];
      m.at(i, j) = Scalar(2) * dot(aj, ai) / squared_length(simple_ids_[i]);
    }
  return m;
}

std::uint64_t coxeter_order(Family f, int rank) {
  auto factorial = [](int k) {
    std::uint64_t r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
  };
  switch (f) {
    case Family::A: return factorial(rank + 1);
    case Family::B: return (std::uint64_t(1) << rank) * factorial(rank);
    case Family::D:
      return (std::uint64_t(1) << (rank - 1)) * factorial(rank);
    case Family::E:
      if (rank == 6) return 51840;
      if (rank == 7) return 2903040;
      return 696729600;
    case Family::F: return 1152;
    case Family::H: return rank == 3 ? 120 : 14400;
    case Family::I2: return 2 * std::uint64_t(rank);
  }
  return 0;
}

}  // namespace coxkit
