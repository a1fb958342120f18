#include "coxkit/lattice.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace coxkit {

namespace {

std::vector<std::int32_t> normalized_ids(const RootSystem& rs,
                                         std::vector<std::int32_t> ids) {
  for (auto& id : ids) {
    if (id < 0 || id >= rs.num_roots())
      throw std::invalid_argument("root index out of range");
    id = rs.positive_part(id);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

std::vector<mpz_class> integer_coords(const RootSystem& rs, int id) {
  const Vec& v = rs.root(id);
  std::vector<mpz_class> row(v.size());
  for (size_t i = 0; i < v.size(); ++i) row[i] = v[i].to_integer();
  return row;
}

IntMat coordinate_matrix(const RootSystem& rs,
                         const std::vector<std::int32_t>& ids) {
  if (!rs.crystallographic())
    throw std::invalid_argument("lattice computations need integer coordinates");
  std::vector<std::vector<mpz_class>> rows;
  rows.reserve(ids.size());
  for (auto id : ids) rows.push_back(integer_coords(rs, id));
  return IntMat::from_rows(rows);
}

void require_simply_laced(const RootSystem& rs, const char* what) {
  if (!rs.simply_laced())
    throw std::invalid_argument(std::string(what) +
                                ": host root system is not simply laced");
}

}  // namespace

std::vector<std::int32_t> subsystem_closure(
    const CoxGroup& g, const std::vector<std::int32_t>& ids) {
  std::vector<std::int32_t> pos;
  pos.reserve(ids.size());
  if (g.is_dihedral()) {
    pos = ids;
  } else {
    const RootSystem& rs = g.roots();
    for (auto id : ids) pos.push_back(rs.positive_part(id));
  }
  return g.reflection_closure(std::move(pos));
}

LatticeIndex lattice_index(const RootSystem& rs,
                           const std::vector<std::int32_t>& sub,
                           const std::vector<std::int32_t>& sup) {
  auto sub_ids = normalized_ids(rs, sub);
  auto sup_ids = normalized_ids(rs, sup);
  if (sub_ids.empty() || sup_ids.empty())
    throw std::invalid_argument("lattice_index: empty root set");
  IntMat sup_basis = hermite_row_basis(coordinate_matrix(rs, sup_ids));
  IntMat sub_mat = coordinate_matrix(rs, sub_ids);

  for (int i = 0; i < sub_mat.rows(); ++i) {
    std::vector<mpz_class> v(sub_mat.cols());
    for (int j = 0; j < sub_mat.cols(); ++j) v[j] = sub_mat.at(i, j);
    if (!in_rational_row_span(sup_basis, v))
      throw std::invalid_argument(
          "lattice_index: sub is not contained in the Q-span of sup");
  }
  IntMat sub_basis = hermite_row_basis(sub_mat);
  LatticeIndex result;
  if (sub_basis.rows() < sup_basis.rows()) {
    result.finite = false;
    return result;
  }
  // Coefficients of the sub basis over the sup basis must be integral for
  // span_Z(sub) to be a sublattice at all.
  IntMat coeff(sub_basis.rows(), sup_basis.rows());
  for (int i = 0; i < sub_basis.rows(); ++i) {
    std::vector<mpz_class> v(sub_basis.cols());
    for (int j = 0; j < sub_basis.cols(); ++j) v[j] = sub_basis.at(i, j);
    auto c = integer_coords_in_row_basis(sup_basis, v);
    if (!c)
      throw std::invalid_argument(
          "lattice_index: span_Z(sub) is not a sublattice of span_Z(sup)");
    for (int j = 0; j < sup_basis.rows(); ++j) coeff.at(i, j) = (*c)[j];
  }
  result.finite = true;
  result.index = smith_normal_form(coeff).diag_product();
  return result;
}

mpz_class connection_index(const RootSystem& rs,
                           const std::vector<std::int32_t>& ids) {
  require_simply_laced(rs, "connection_index");
  auto pos = normalized_ids(rs, ids);
  if (pos.empty()) return 1;
  IntMat basis = hermite_row_basis(coordinate_matrix(rs, pos));
  const int r = basis.rows();
  // Normalized Gram matrix: divide raw inner products by the square of
  // the coordinate scale so that roots have squared length 2.
  mpz_class scale2 = mpz_class(rs.coordinate_scale()) * rs.coordinate_scale();
  IntMat gram(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      mpz_class s = 0;
      for (int k = 0; k < basis.cols(); ++k)
        s += basis.at(i, k) * basis.at(j, k);
      if (s % scale2 != 0)
        throw std::logic_error("connection_index: non-integral normalized Gram");
      gram.at(i, j) = s / scale2;
    }
  return abs(det(gram));
}

std::vector<std::int32_t> roots_of_lattice(
    const RootSystem& rs, const std::vector<std::int32_t>& ids) {
  require_simply_laced(rs, "roots_of_lattice");
  auto pos = normalized_ids(rs, ids);
  std::vector<std::int32_t> out;
  if (pos.empty()) return out;
  IntMat basis = hermite_row_basis(coordinate_matrix(rs, pos));
  for (int r = 0; r < rs.num_positive(); ++r) {
    auto v = integer_coords(rs, r);
    if (integer_coords_in_row_basis(basis, v)) out.push_back(r);
  }
  return out;
}

bool generates_full_lattice(const RootSystem& rs,
                            const std::vector<std::int32_t>& ids) {
  require_simply_laced(rs, "generates_full_lattice");
  auto pos = normalized_ids(rs, ids);
  if (pos.empty()) return rs.rank() == 0;
  IntMat basis = hermite_row_basis(coordinate_matrix(rs, pos));
  if (basis.rows() < rs.rank()) return false;
  // The simple roots generate L(Phi); membership of each of them in L(R)
  // is exactly L(Phi) ⊆ L(R).
  for (auto sid : rs.simple_ids()) {
    auto v = integer_coords(rs, sid);
    if (!integer_coords_in_row_basis(basis, v)) return false;
  }
  return true;
}

bool kluitmann_invariant_check(DescentOracle& oracle, const GroupElement& w) {
  const CoxGroup& g = oracle.group();
  require_simply_laced(g.roots(), "kluitmann_invariant_check");
  const RootSystem& rs = g.roots();
  std::map<std::vector<std::int32_t>, mpz_class> cache;
  bool first = true, ok = true;
  mpz_class expected;
  visit_reduced_factorizations(oracle, w, [&](const Word& f) {
    std::vector<std::int32_t> key(f.begin(), f.end());
    std::sort(key.begin(), key.end());
    key.erase(std::unique(key.begin(), key.end()), key.end());
    auto it = cache.find(key);
    mpz_class value;
    if (it != cache.end()) {
      value = it->second;
    } else {
      value = connection_index(rs, key);
      cache.emplace(std::move(key), value);
    }
    if (first) {
      expected = value;
      first = false;
    } else if (value != expected) {
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

}  // namespace coxkit
