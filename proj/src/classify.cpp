#include "coxkit/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "coxkit/lattice.hpp"

namespace coxkit {

std::vector<std::int32_t> parabolic_closure(const CoxGroup& g,
                                            const GroupElement& w) {
  return g.descent_reflections(w);
}

bool is_parabolic_subgroup(const CoxGroup& g,
                           const std::vector<std::int32_t>& gen_ids) {
  auto closure = g.reflection_closure(gen_ids);
  if (g.is_dihedral()) {
    // Proper parabolics of I2(m) have rank <= 1; the only rank-2
    // parabolic is the whole group.
    return closure.size() <= 1 || int(closure.size()) == g.num_reflections();
  }
  const RootSystem& rs = g.roots();
  if (closure.empty()) return true;
  Echelon span(rs.ambient_dim());
  for (auto id : closure) span.insert(rs.root(id));
  std::vector<bool> in_closure(rs.num_positive(), false);
  for (auto id : closure) in_closure[id] = true;
  for (int r = 0; r < rs.num_positive(); ++r)
    if (!in_closure[r] && span.contains(rs.root(r))) return false;
  return true;
}

namespace {

struct IdSetHash {
  size_t operator()(const std::vector<std::int32_t>& v) const {
    size_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= size_t(std::uint32_t(x));
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::vector<std::int32_t> sorted_unique(const Word& f) {
  std::vector<std::int32_t> ids(f.begin(), f.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

bool generates_whole_group(const CoxGroup& g,
                           const std::vector<std::int32_t>& ids) {
  if (!g.is_dihedral() && g.roots().simply_laced())
    return generates_full_lattice(g.roots(), ids);
  return int(g.reflection_closure(ids).size()) == g.num_reflections();
}

}  // namespace

bool is_quasi_coxeter(DescentOracle& oracle, const GroupElement& w) {
  const CoxGroup& g = oracle.group();
  if (oracle.get(w).length != g.rank()) return false;
  bool found = false;
  std::unordered_set<std::vector<std::int32_t>, IdSetHash> rejected;
  visit_reduced_factorizations(oracle, w, [&](const Word& f) {
    auto ids = sorted_unique(f);
    if (rejected.count(ids)) return true;
    if (generates_whole_group(g, ids)) {
      found = true;
      return false;
    }
    rejected.insert(std::move(ids));
    return true;
  });
  return found;
}

bool is_parabolic_quasi_coxeter(DescentOracle& oracle,
                                const GroupElement& w) {
  const CoxGroup& g = oracle.group();
  int len = oracle.get(w).length;
  if (len == g.rank()) return is_quasi_coxeter(oracle, w);
  if (g.is_dihedral() || g.roots().simply_laced()) {
    // One factorization decides: for parabolic quasi-Coxeter elements of
    // simply laced systems every reduced factorization generates the
    // parabolic closure.
    Word f = first_reduced_factorization(oracle, w);
    return is_parabolic_subgroup(g, sorted_unique(f));
  }
  bool found = false;
  std::unordered_set<std::vector<std::int32_t>, IdSetHash> rejected;
  visit_reduced_factorizations(oracle, w, [&](const Word& f) {
    auto ids = sorted_unique(f);
    if (rejected.count(ids)) return true;
    if (is_parabolic_subgroup(g, ids)) {
      found = true;
      return false;
    }
    rejected.insert(std::move(ids));
    return true;
  });
  return found;
}

bool corank1_prefix_parabolic_check(DescentOracle& oracle,
                                    const GroupElement& w) {
  const CoxGroup& g = oracle.group();
  bool ok = true;
  std::unordered_map<std::vector<std::int32_t>, bool, IdSetHash> cache;
  visit_reduced_factorizations(oracle, w, [&](const Word& f) {
    Word prefix(f.begin(), f.end() - 1);
    auto ids = sorted_unique(prefix);
    auto it = cache.find(ids);
    bool parabolic;
    if (it != cache.end()) {
      parabolic = it->second;
    } else {
      parabolic = is_parabolic_subgroup(g, ids);
      cache.emplace(std::move(ids), parabolic);
    }
    if (!parabolic) {
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

ClassificationRecord classify_element(DescentOracle& oracle,
                                      const GroupElement& w,
                                      std::uint64_t cap) {
  ClassificationRecord rec;
  rec.element = w;
  rec.reflection_length = oracle.get(w).length;
  rec.closure = parabolic_closure(oracle.group(), w);
  rec.quasi_coxeter = is_quasi_coxeter(oracle, w);
  rec.parabolic_quasi_coxeter =
      rec.quasi_coxeter || is_parabolic_quasi_coxeter(oracle, w);
  rec.transitivity = is_hurwitz_transitive(oracle, w, cap);
  return rec;
}

ConjugacyClasses conjugacy_classes(const CoxGroup& g, std::uint64_t bound) {
  if (g.order() > bound)
    throw std::invalid_argument(
        "group too large for conjugacy class enumeration");
  auto elements = g.all_elements();
  std::sort(elements.begin(), elements.end());
  std::unordered_map<GroupElement, int, GroupElementHash> index;
  index.reserve(elements.size() * 2);
  for (size_t i = 0; i < elements.size(); ++i)
    index.emplace(elements[i], int(i));

  std::vector<GroupElement> gens;
  for (auto s : g.simple_reflections()) gens.push_back(g.reflection(s));

  std::vector<bool> assigned(elements.size(), false);
  ConjugacyClasses result;
  for (size_t i = 0; i < elements.size(); ++i) {
    if (assigned[i]) continue;
    std::vector<int> frontier{int(i)};
    assigned[i] = true;
    for (size_t head = 0; head < frontier.size(); ++head) {
      const GroupElement& w = elements[frontier[head]];
      for (const auto& s : gens) {
        GroupElement c = g.multiply(g.multiply(s, w), s);
        int j = index.at(c);
        if (!assigned[j]) {
          assigned[j] = true;
          frontier.push_back(j);
        }
      }
    }
    std::sort(frontier.begin(), frontier.end());
    std::vector<GroupElement> cls;
    cls.reserve(frontier.size());
    for (int j : frontier) cls.push_back(elements[j]);
    result.classes.push_back(std::move(cls));
  }
  return result;
}

std::vector<GroupElement> conjugacy_class_representatives(
    const CoxGroup& g, std::uint64_t bound) {
  return conjugacy_classes(g, bound).representatives();
}

// ---------------------------------------------------------------------
// Maximal parabolic intersections in D_n via stabilized sets.

namespace {

// Signed letters are encoded as +-1..+-n.
using SignedSet = std::set<int>;

SignedSet standard_a_set(int n, int i) {
  SignedSet a;
  if (i == 1) {
    a.insert(-1);
    for (int k = 2; k <= n; ++k) a.insert(k);
  } else {
    for (int k = i + 1; k <= n; ++k) a.insert(k);
  }
  return a;
}

bool reflection_stabilizes(const SignedSet& s, int k, int l) {
  // (k,l)(-k,-l) fixes everything outside {±k, ±l}.
  bool kin = s.count(k), lin = s.count(l);
  bool nkin = s.count(-k), nlin = s.count(-l);
  return kin == lin && nkin == nlin;
}

bool common_reflection_exists(int n, const SignedSet& a, const SignedSet& b) {
  for (int k = 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l) {
      if (reflection_stabilizes(a, k, l) && reflection_stabilizes(b, k, l))
        return true;
      if (reflection_stabilizes(a, k, -l) && reflection_stabilizes(b, k, -l))
        return true;
    }
  return false;
}

bool stabilizes(const SignedPerm& w, const SignedSet& s) {
  for (int x : s)
    if (!s.count(w.apply(x))) return false;
  return true;
}

// All elements of W(D_n): permutations with an even number of sign flips.
std::vector<SignedPerm> all_dn_elements(int n) {
  std::vector<SignedPerm> out;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) % 2 != 0) continue;
      SignedPerm w;
      w.img.resize(n);
      for (int i = 0; i < n; ++i)
        w.img[i] = (mask >> i) & 1 ? -perm[i] : perm[i];
      out.push_back(std::move(w));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

bool trivial_intersection_by_enumeration(const std::vector<SignedPerm>& all,
                                         const SignedSet& a,
                                         const SignedSet& b) {
  for (const auto& w : all) {
    bool is_id = true;
    for (int i = 0; i < w.n(); ++i)
      if (w.img[i] != i + 1) {
        is_id = false;
        break;
      }
    if (is_id) continue;
    if (stabilizes(w, a) && stabilizes(w, b)) return false;
  }
  return true;
}

// Distinct images w(A_J) over W(D_n): sets of the right size with at most
// one of ±x per letter; full-support sets additionally carry the sign
// parity of the standard set.
std::vector<SignedSet> conjugate_sets(int n, int j) {
  SignedSet aj = standard_a_set(n, j);
  int size = int(aj.size());
  int neg_parity = 0;
  for (int x : aj)
    if (x < 0) neg_parity ^= 1;
  std::vector<SignedSet> out;
  std::vector<int> support(n);
  for (int i = 0; i < n; ++i) support[i] = i + 1;
  std::vector<int> choice(size);
  // Choose the |values| as a combination, then signs.
  std::vector<int> comb(size);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == size) {
      for (unsigned mask = 0; mask < (1u << size); ++mask) {
        if (size == n &&
            (__builtin_popcount(mask) & 1) != neg_parity)
          continue;
        SignedSet s;
        for (int t = 0; t < size; ++t)
          s.insert((mask >> t) & 1 ? -comb[t] : comb[t]);
        out.push_back(std::move(s));
      }
      return;
    }
    for (int v = start; v <= n; ++v) {
      comb[depth] = v;
      rec(v + 1, depth + 1);
    }
  };
  rec(1, 0);
  return out;
}

}  // namespace

DnIntersectionReport dn_maximal_parabolic_intersections(
    int n, bool collect_all_witnesses) {
  if (n < 4)
    throw std::invalid_argument("dn_maximal_parabolic_intersections: n >= 4");
  DnIntersectionReport report;
  report.n = n;
  std::vector<SignedPerm> all;
  if (n <= 6) all = all_dn_elements(n);

  for (int i = 0; i < n; ++i) {
    SignedSet ai = standard_a_set(n, i);
    for (int j = 0; j < n; ++j) {
      for (const auto& b : conjugate_sets(n, j)) {
        ++report.pairs_checked;
        if (common_reflection_exists(n, ai, b)) continue;
        bool trivial;
        if (!all.empty()) {
          trivial = trivial_intersection_by_enumeration(all, ai, b);
        } else {
          // No common reflection and no enumeration fallback: flag it.
          trivial = true;
        }
        if (trivial) {
          report.all_nontrivial = false;
          DnWitnessPair w;
          w.i_index = i;
          w.set_a.assign(ai.begin(), ai.end());
          w.set_b.assign(b.begin(), b.end());
          report.trivial_pairs.push_back(std::move(w));
          if (!collect_all_witnesses && report.trivial_pairs.size() >= 8)
            return report;
        }
      }
    }
  }
  return report;
}

std::string element_to_string(const CoxGroup& g, const GroupElement& w) {
  if (g.is_dihedral()) {
    return (w.img[0] ? "f" : "r") + std::to_string(w.img[1]);
  }
  std::string s = "[";
  bool first = true;
  for (auto sid : g.roots().simple_ids()) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(g.root_image(w, sid));
  }
  return s + "]";
}

}  // namespace coxkit
