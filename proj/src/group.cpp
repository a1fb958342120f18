#include "coxkit/group.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <unordered_set>

namespace coxkit {

namespace {
std::atomic<std::uint32_t> next_gid{1};
}

SignedPerm SignedPerm::identity(int n) {
  SignedPerm p;
  p.img.resize(n);
  for (int i = 0; i < n; ++i) p.img[i] = i + 1;
  return p;
}

SignedPerm SignedPerm::compose(const SignedPerm& o) const {
  SignedPerm r;
  r.img.resize(img.size());
  for (int i = 1; i <= n(); ++i) r.img[i - 1] = apply(o.apply(i));
  return r;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm r;
  r.img.resize(img.size());
  for (int i = 1; i <= n(); ++i) {
    int v = img[i - 1];
    if (v > 0)
      r.img[v - 1] = i;
    else
      r.img[-v - 1] = -i;
  }
  return r;
}

bool SignedPerm::is_even() const {
  int neg = 0;
  for (auto v : img)
    if (v < 0) ++neg;
  return neg % 2 == 0;
}

std::string SignedPerm::str() const {
  std::string s = "[";
  for (size_t i = 0; i < img.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(img[i]);
  }
  return s + "]";
}

CoxGroup CoxGroup::from_roots(std::shared_ptr<const RootSystem> rs) {
  CoxGroup g;
  g.rs_ = std::move(rs);
  g.gid_ = next_gid.fetch_add(1);
  const RootSystem& R = *g.rs_;
  const int n = R.num_positive();
  g.n_refl_ = n;
  g.simple_refl_ = R.simple_ids();

  g.reflections_.reserve(n);
  for (int t = 0; t < n; ++t) {
    GroupElement e;
    e.gid = g.gid_;
    e.img.resize(n);
    for (int r = 0; r < n; ++r) e.img[r] = R.signed_reflect(t, r);
    g.refl_index_.emplace(e, t);
    g.reflections_.push_back(std::move(e));
  }

  // Basis of the ambient space: simple roots first, then a basis of the
  // orthogonal complement of the root span (fixed pointwise by W).
  const int d = R.ambient_dim();
  const int rk = R.rank();
  Mat span_rows(rk, d);
  for (int i = 0; i < rk; ++i) {
    const Vec& a = R.root(R.simple_ids()[i]);
    for (int j = 0; j < d; ++j) span_rows.at(i, j) = a[j];
  }
  auto complement = nullspace(span_rows);
  if (int(complement.size()) != d - rk)
    throw std::logic_error("complement dimension mismatch");
  g.basis_ = Mat(d, d);
  for (int j = 0; j < rk; ++j) {
    const Vec& a = R.root(R.simple_ids()[j]);
    for (int i = 0; i < d; ++i) g.basis_.at(i, j) = a[i];
  }
  for (int j = rk; j < d; ++j)
    for (int i = 0; i < d; ++i) g.basis_.at(i, j) = complement[j - rk][i];
  // Invert by solving against the identity column by column.
  g.basis_inv_ = Mat(d, d);
  for (int c = 0; c < d; ++c) {
    Vec rhs(d, Scalar(0));
    rhs[c] = Scalar(1);
    auto x = solve(g.basis_, rhs);
    if (!x) throw std::logic_error("ambient basis not invertible");
    for (int i = 0; i < d; ++i) g.basis_inv_.at(i, c) = (*x)[i];
  }
  return g;
}

CoxGroup CoxGroup::dihedral(int m) {
  CoxGroup g;
  g.dihedral_.emplace(m);
  g.gid_ = next_gid.fetch_add(1);
  g.n_refl_ = m;
  g.simple_refl_ = {0, 1};
  for (int t = 0; t < m; ++t) {
    GroupElement e;
    e.gid = g.gid_;
    e.img = {1, t};
    g.refl_index_.emplace(e, t);
    g.reflections_.push_back(std::move(e));
  }
  return g;
}

CoxGroup CoxGroup::build(Family f, int rank) {
  if (f == Family::I2) return dihedral(rank);
  return from_roots(RootSystem::build(f, rank));
}

const RootSystem& CoxGroup::roots() const {
  if (!rs_) throw std::logic_error("dihedral group has no root system");
  return *rs_;
}

std::string CoxGroup::label() const {
  if (is_dihedral()) return "I2(" + std::to_string(dihedral_->m) + ")";
  return rs_->label();
}

Family CoxGroup::family() const {
  return is_dihedral() ? Family::I2 : rs_->family();
}

int CoxGroup::rank() const { return is_dihedral() ? 2 : rs_->rank(); }

std::uint64_t CoxGroup::order() const {
  if (is_dihedral()) return 2 * std::uint64_t(dihedral_->m);
  return coxeter_order(rs_->family(), rs_->rank());
}

GroupElement CoxGroup::identity() const {
  GroupElement e;
  e.gid = gid_;
  if (is_dihedral()) {
    e.img = {0, 0};
    return e;
  }
  e.img.resize(n_refl_);
  for (int i = 0; i < n_refl_; ++i) e.img[i] = i;
  return e;
}

GroupElement CoxGroup::reflection(int t) const {
  if (t < 0 || t >= n_refl_)
    throw std::invalid_argument("reflection index out of range");
  return reflections_[t];
}

void CoxGroup::check_same_group(const GroupElement& a) const {
  if (a.gid != gid_)
    throw std::invalid_argument("element belongs to a different group");
}

GroupElement CoxGroup::multiply(const GroupElement& a,
                                const GroupElement& b) const {
  check_same_group(a);
  check_same_group(b);
  GroupElement r;
  r.gid = gid_;
  if (is_dihedral()) {
    auto e = dihedral_->compose({std::int8_t(a.img[0]), a.img[1]},
                                {std::int8_t(b.img[0]), b.img[1]});
    r.img = {e.kind, e.idx};
    return r;
  }
  const int n = n_refl_;
  r.img.resize(n);
  for (int i = 0; i < n; ++i) {
    int j = b.img[i];
    r.img[i] = j < n ? a.img[j] : (a.img[j - n] < n ? a.img[j - n] + n
                                                    : a.img[j - n] - n);
  }
  return r;
}

GroupElement CoxGroup::inverse(const GroupElement& a) const {
  check_same_group(a);
  GroupElement r;
  r.gid = gid_;
  if (is_dihedral()) {
    auto e = dihedral_->inverse({std::int8_t(a.img[0]), a.img[1]});
    r.img = {e.kind, e.idx};
    return r;
  }
  const int n = n_refl_;
  r.img.resize(n);
  for (int i = 0; i < n; ++i) {
    int j = a.img[i];
    if (j < n)
      r.img[j] = i;
    else
      r.img[j - n] = i + n;
  }
  return r;
}

GroupElement CoxGroup::conjugate(const GroupElement& a,
                                 const GroupElement& b) const {
  return multiply(multiply(b, a), inverse(b));
}

GroupElement CoxGroup::from_word(
    const std::vector<std::int32_t>& refl_ids) const {
  GroupElement w = identity();
  for (auto t : refl_ids) w = multiply(w, reflection(t));
  return w;
}

bool CoxGroup::is_identity(const GroupElement& a) const {
  check_same_group(a);
  if (is_dihedral()) return a.img[0] == 0 && a.img[1] == 0;
  for (int i = 0; i < n_refl_; ++i)
    if (a.img[i] != i) return false;
  return true;
}

std::optional<int> CoxGroup::reflection_index(const GroupElement& a) const {
  check_same_group(a);
  auto it = refl_index_.find(a);
  if (it == refl_index_.end()) return std::nullopt;
  return it->second;
}

int CoxGroup::conj_reflection(int t, int r) const {
  if (is_dihedral()) return dihedral_->conj_reflection(t, r);
  return rs_->positive_reflect(t, r);
}

int CoxGroup::root_image(const GroupElement& a, int root_id) const {
  check_same_group(a);
  const int n = n_refl_;
  if (root_id < n) return a.img[root_id];
  int j = a.img[root_id - n];
  return j < n ? j + n : j - n;
}

Mat CoxGroup::matrix_of(const GroupElement& a) const {
  check_same_group(a);
  if (is_dihedral())
    throw std::invalid_argument(
        "dihedral model is coordinate-free; no matrix available");
  const RootSystem& R = *rs_;
  const int d = R.ambient_dim();
  const int rk = R.rank();
  // Images of the basis columns: simple roots map through the stored
  // permutation, the complement is fixed pointwise.
  Mat images(d, d);
  for (int j = 0; j < rk; ++j) {
    const Vec& img = R.root(root_image(a, R.simple_ids()[j]));
    for (int i = 0; i < d; ++i) images.at(i, j) = img[i];
  }
  for (int j = rk; j < d; ++j)
    for (int i = 0; i < d; ++i) images.at(i, j) = basis_.at(i, j);
  return images * basis_inv_;
}

Echelon CoxGroup::moved_space(const GroupElement& a) const {
  check_same_group(a);
  if (is_dihedral())
    throw std::logic_error("moved_space: dihedral model is coordinate-free");
  const RootSystem& R = *rs_;
  Echelon e(R.ambient_dim());
  for (int id : R.simple_ids()) {
    const Vec& alpha = R.root(id);
    const Vec& img = R.root(root_image(a, id));
    e.insert(img - alpha);
  }
  return e;
}

int CoxGroup::moved_space_dim(const GroupElement& a) const {
  if (is_dihedral())
    return dihedral_->reflection_length({std::int8_t(a.img[0]), a.img[1]});
  return moved_space(a).rank();
}

int CoxGroup::fixed_space_dim(const GroupElement& a) const {
  return rank() - moved_space_dim(a);
}

int CoxGroup::reflection_length(const GroupElement& a) const {
  check_same_group(a);
  return moved_space_dim(a);
}

bool CoxGroup::absolute_leq(const GroupElement& u,
                            const GroupElement& v) const {
  return reflection_length(u) +
             reflection_length(multiply(inverse(u), v)) ==
         reflection_length(v);
}

std::vector<std::int32_t> CoxGroup::descent_reflections(
    const GroupElement& a) const {
  check_same_group(a);
  std::vector<std::int32_t> out;
  if (is_dihedral()) {
    if (a.img[0] == 1) {
      out.push_back(a.img[1]);
    } else if (a.img[1] != 0) {
      out.resize(n_refl_);
      for (int t = 0; t < n_refl_; ++t) out[t] = t;
    }
    return out;
  }
  // t <=_T w  iff  Fix(w) ⊆ Fix(t)  iff  root(t) lies in Mov(w).
  Echelon mov = moved_space(a);
  if (mov.rank() == 0) return out;
  for (int t = 0; t < n_refl_; ++t)
    if (mov.contains(rs_->root(t))) out.push_back(t);
  return out;
}

std::vector<std::int32_t> CoxGroup::reflection_closure(
    std::vector<std::int32_t> ids) const {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (auto t : ids)
    if (t < 0 || t >= n_refl_)
      throw std::invalid_argument("reflection index out of range");
  std::vector<bool> in(n_refl_, false);
  std::vector<std::int32_t> queue = ids;
  for (auto t : queue) in[t] = true;
  for (size_t head = 0; head < queue.size(); ++head) {
    int a = queue[head];
    for (size_t k = 0; k < queue.size(); ++k) {
      int c = conj_reflection(a, queue[k]);
      if (!in[c]) {
        in[c] = true;
        queue.push_back(c);
      }
      c = conj_reflection(queue[k], a);
      if (!in[c]) {
        in[c] = true;
        queue.push_back(c);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<GroupElement> CoxGroup::all_elements() const {
  std::vector<GroupElement> out;
  std::unordered_set<GroupElement, GroupElementHash> seen;
  out.push_back(identity());
  seen.insert(out[0]);
  std::vector<GroupElement> gens;
  for (auto s : simple_refl_) gens.push_back(reflection(s));
  for (size_t head = 0; head < out.size(); ++head) {
    GroupElement w = out[head];
    for (const auto& s : gens) {
      GroupElement next = multiply(w, s);
      if (seen.insert(next).second) out.push_back(std::move(next));
    }
  }
  return out;
}

SignedPerm CoxGroup::to_signed_perm(const GroupElement& a) const {
  check_same_group(a);
  if (is_dihedral() ||
      (rs_->family() != Family::B && rs_->family() != Family::D))
    throw std::invalid_argument("signed permutations model types B and D only");
  const RootSystem& R = *rs_;
  const int n = R.rank();
  SignedPerm sp;
  sp.img.resize(n);
  for (int i = 0; i < n; ++i) {
    // Image of e_i: directly for B (short root); via the average of
    // w(e_i - e_j) and w(e_i + e_j) for D.
    Vec img;
    if (R.family() == Family::B) {
      Vec ei(n, Scalar(0));
      ei[i] = Scalar(1);
      int id = R.index_of(ei);
      img = R.root(root_image(a, id));
    } else {
      int j = (i + 1) % n;
      Vec d1(n, Scalar(0)), d2(n, Scalar(0));
      d1[i] = Scalar(1);
      d1[j] = Scalar(-1);
      d2[i] = Scalar(1);
      d2[j] = Scalar(1);
      const Vec& u = R.root(root_image(a, R.index_of(d1)));
      const Vec& v = R.root(root_image(a, R.index_of(d2)));
      img = Scalar(mpq_class(1, 2)) * (u + v);
    }
    int where = -1, sign = 0;
    for (int k = 0; k < n; ++k) {
      int s = img[k].sign();
      if (s != 0) {
        where = k;
        sign = s;
        break;
      }
    }
    sp.img[i] = sign * (where + 1);
  }
  return sp;
}

GroupElement CoxGroup::from_signed_perm(const SignedPerm& sp) const {
  if (is_dihedral() ||
      (rs_->family() != Family::B && rs_->family() != Family::D))
    throw std::invalid_argument("signed permutations model types B and D only");
  const RootSystem& R = *rs_;
  const int n = R.rank();
  if (sp.n() != n)
    throw std::invalid_argument("signed permutation size mismatch");
  std::vector<bool> hit(n, false);
  for (int i = 1; i <= n; ++i) {
    int v = sp.apply(i);
    if (v == 0 || std::abs(v) > n || hit[std::abs(v) - 1])
      throw std::invalid_argument("not a signed permutation");
    hit[std::abs(v) - 1] = true;
  }
  if (R.family() == Family::D && !sp.is_even())
    throw std::invalid_argument(
        "odd number of sign flips: not an element of D_n");
  GroupElement e;
  e.gid = gid_;
  e.img.resize(n_refl_);
  for (int r = 0; r < n_refl_; ++r) {
    const Vec& root = R.root(r);
    Vec img(n, Scalar(0));
    for (int i = 0; i < n; ++i) {
      if (root[i].is_zero()) continue;
      int v = sp.apply(i + 1);
      int k = std::abs(v) - 1;
      img[k] += v > 0 ? root[i] : -root[i];
    }
    int id = R.index_of(img);
    if (id < 0) throw std::logic_error("signed perm does not preserve roots");
    e.img[r] = id;
  }
  return e;
}

}  // namespace coxkit
