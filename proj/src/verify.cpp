#include "coxkit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "coxkit/lattice.hpp"

namespace coxkit {

std::string scope_name(Scope s) {
  switch (s) {
    case Scope::exhaustive: return "exhaustive";
    case Scope::class_reps: return "class-reps";
    case Scope::sampled: return "sampled";
  }
  return "?";
}

Scope parse_scope(const std::string& s) {
  if (s == "exhaustive") return Scope::exhaustive;
  if (s == "class-reps" || s == "class_reps") return Scope::class_reps;
  if (s == "sampled") return Scope::sampled;
  throw std::invalid_argument("unknown scope '" + s + "'");
}

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

struct Outcome {
  std::vector<Failure> failures;
  std::uint64_t caps = 0;
};

// Runs `work` over the element list with one descent oracle per worker
// and a deterministic, index-ordered merge of the outcomes.
template <typename Work>
Outcome run_over_elements(const CoxGroup& g,
                          const std::vector<GroupElement>& elements,
                          int threads, Work&& work) {
  const size_t n = elements.size();
  std::vector<Outcome> per_element(n);
  int t = std::max(1, threads);
  if (t == 1) {
    DescentOracle oracle(g);
    for (size_t i = 0; i < n; ++i)
      work(oracle, elements[i], per_element[i]);
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < t; ++k) {
      pool.emplace_back([&, k] {
        DescentOracle oracle(g);
        for (size_t i = k; i < n; i += size_t(t))
          work(oracle, elements[i], per_element[i]);
      });
    }
    for (auto& th : pool) th.join();
  }
  Outcome merged;
  for (auto& o : per_element) {
    for (auto& f : o.failures) merged.failures.push_back(std::move(f));
    merged.caps += o.caps;
  }
  return merged;
}

std::vector<GroupElement> scope_elements(const CoxGroup& g,
                                         const VerifyOptions& o) {
  switch (o.scope) {
    case Scope::exhaustive: {
      if (g.order() > o.enumeration_bound)
        throw std::invalid_argument(
            "exhaustive scope exceeds the enumeration bound for " +
            g.label());
      auto elements = g.all_elements();
      if (elements.size() != g.order())
        throw std::logic_error("enumeration disagrees with the closed-form "
                               "order of " + g.label());
      return elements;
    }
    case Scope::class_reps:
      return conjugacy_class_representatives(g, o.enumeration_bound);
    case Scope::sampled:
      throw std::logic_error("sampled scope has a dedicated path");
  }
  return {};
}

std::string word_to_string(const Word& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

std::string ids_to_string(const std::vector<std::int32_t>& v) {
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "}";
}

VerificationReport make_report(const CoxGroup& g, const std::string& theorem,
                               const VerifyOptions& o) {
  VerificationReport r;
  r.group_label = g.label();
  r.group_order = g.order();
  r.theorem = theorem;
  r.scope = scope_name(o.scope);
  return r;
}

bool generates_whole(const CoxGroup& g, const std::vector<std::int32_t>& ids) {
  if (!g.is_dihedral() && g.roots().simply_laced())
    return generates_full_lattice(g.roots(), ids);
  return int(g.reflection_closure(ids).size()) == g.num_reflections();
}

std::vector<std::int32_t> word_id_set(const Word& f) {
  std::vector<std::int32_t> ids(f.begin(), f.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

void sampled_theorem1_element(DescentOracle& oracle, const GroupElement& w,
                              std::uint64_t cap, Outcome& out,
                              const CoxGroup& g) {
  int len = oracle.get(w).length;
  if (len == g.rank()) {
    Word f = first_reduced_factorization(oracle, w);
    if (!generates_whole(g, word_id_set(f))) return;  // not quasi-Coxeter
    CoverageCheck cov = last_slot_coverage(g, f, cap);
    if (cov.capped && !cov.complete) {
      out.caps += 1;
    } else if (!cov.complete) {
      out.failures.push_back({element_to_string(g, w),
                              "all reflections in last orbit slot",
                              std::to_string(cov.covered.size()) +
                                  " of " +
                                  std::to_string(g.num_reflections()),
                              word_to_string(f)});
    }
  } else if (len == g.rank() - 1) {
    Word f = first_reduced_factorization(oracle, w);
    auto ids = word_id_set(f);
    if (!is_parabolic_subgroup(g, ids)) return;  // not parabolic quasi-Coxeter
    auto generated = g.reflection_closure(ids);
    auto closure = parabolic_closure(g, w);
    if (generated != closure)
      out.failures.push_back({element_to_string(g, w),
                              "factorization generates the parabolic closure",
                              ids_to_string(generated) + " vs " +
                                  ids_to_string(closure),
                              word_to_string(f)});
  }
}

std::vector<GroupElement> sample_elements(const CoxGroup& g,
                                          const VerifyOptions& o) {
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> pick(0, g.num_reflections() - 1);
  std::vector<GroupElement> out;
  for (int i = 0; i < o.samples; ++i) {
    int k = (i % 2 == 0) ? g.rank() : g.rank() - 1;
    Word word(k);
    for (int j = 0; j < k; ++j) word[j] = pick(rng);
    out.push_back(g.from_word(word));
  }
  return out;
}

}  // namespace

VerificationReport verify_theorem_1(const CoxGroup& g,
                                    const VerifyOptions& o) {
  Timer timer;
  VerificationReport r = make_report(g, "1.1", o);
  if (o.scope == Scope::sampled) {
    auto samples = sample_elements(g, o);
    r.elements_checked = samples.size();
    Outcome out = run_over_elements(
        g, samples, o.threads,
        [&](DescentOracle& oracle, const GroupElement& w, Outcome& res) {
          sampled_theorem1_element(oracle, w, o.cap, res, g);
        });
    r.failures = std::move(out.failures);
    r.caps_hit = out.caps;
    r.elapsed_ms = timer.ms();
    return r;
  }
  auto elements = scope_elements(g, o);
  r.elements_checked = elements.size();
  Outcome out = run_over_elements(
      g, elements, o.threads,
      [&](DescentOracle& oracle, const GroupElement& w, Outcome& res) {
        TransitivityCheck t = is_hurwitz_transitive(oracle, w, o.cap);
        if (t.indeterminate()) {
          res.caps += 1;
          return;
        }
        bool pqc = is_parabolic_quasi_coxeter(oracle, w);
        if (t.transitive() != pqc) {
          Failure f;
          f.element = element_to_string(g, w);
          f.expected = pqc ? "transitive (element is pqc)"
                           : "intransitive (element is not pqc)";
          f.got = "orbit " + std::to_string(t.orbit_size) + " of " +
                  std::to_string(t.red_count) + " factorizations";
          if (t.outside_witness) f.witness = word_to_string(*t.outside_witness);
          res.failures.push_back(std::move(f));
        }
      });
  r.failures = std::move(out.failures);
  r.caps_hit = out.caps;
  r.elapsed_ms = timer.ms();
  return r;
}

VerificationReport verify_theorem_2(const CoxGroup& g,
                                    const VerifyOptions& o) {
  Timer timer;
  VerificationReport r = make_report(g, "1.2", o);
  auto elements = scope_elements(g, o);
  r.elements_checked = elements.size();
  Outcome out = run_over_elements(
      g, elements, o.threads,
      [&](DescentOracle& oracle, const GroupElement& w, Outcome& res) {
        if (oracle.get(w).length != g.rank()) return;
        // The generation verdict must be constant across Red_T(w):
        // nonconstant means some factorization of a quasi-Coxeter element
        // generates a proper subgroup.
        bool saw_true = false, saw_false = false;
        Word bad;
        std::unordered_map<std::uint64_t, bool> memo;
        visit_reduced_factorizations(oracle, w, [&](const Word& f) {
          auto ids = word_id_set(f);
          std::uint64_t key = 0;
          for (auto id : ids) key = key * 257 + std::uint64_t(id) + 1;
          auto it = memo.find(key);
          bool gen;
          if (it != memo.end()) {
            gen = it->second;
          } else {
            gen = generates_whole(g, ids);
            memo.emplace(key, gen);
          }
          (gen ? saw_true : saw_false) = true;
          if (!gen && saw_true && bad.empty()) bad = f;
          return !(saw_true && saw_false);
        });
        if (saw_true && saw_false) {
          res.failures.push_back(
              {element_to_string(g, w),
               "every reduced factorization generates W",
               "found a non-generating factorization",
               word_to_string(bad)});
        }
      });
  r.failures = std::move(out.failures);
  r.caps_hit = out.caps;
  r.elapsed_ms = timer.ms();
  return r;
}

VerificationReport verify_theorem_6_1(const CoxGroup& g,
                                      const VerifyOptions& o) {
  Timer timer;
  VerificationReport r = make_report(g, "6.1", o);
  if (g.is_dihedral() || !g.roots().simply_laced())
    throw std::invalid_argument("theorem 6.1 applies to simply laced types");
  auto elements = scope_elements(g, o);
  r.elements_checked = elements.size();
  Outcome out = run_over_elements(
      g, elements, o.threads,
      [&](DescentOracle& oracle, const GroupElement& w, Outcome& res) {
        if (!is_parabolic_quasi_coxeter(oracle, w)) return;
        auto closure = parabolic_closure(g, w);
        std::set<std::vector<std::int32_t>> checked;
        bool ok = true;
        Word bad;
        visit_reduced_factorizations(oracle, w, [&](const Word& f) {
          auto ids = word_id_set(f);
          if (!checked.insert(ids).second) return true;
          if (g.reflection_closure(ids) != closure) {
            ok = false;
            bad = f;
            return false;
          }
          return true;
        });
        if (!ok)
          res.failures.push_back(
              {element_to_string(g, w),
               "factorization subgroup equals the parabolic closure " +
                   ids_to_string(closure),
               "mismatch", word_to_string(bad)});
      });
  r.failures = std::move(out.failures);
  r.caps_hit = out.caps;
  r.elapsed_ms = timer.ms();
  return r;
}

VerificationReport verify_kluitmann(const CoxGroup& g,
                                    const VerifyOptions& o) {
  Timer timer;
  VerificationReport r = make_report(g, "5.13", o);
  auto elements = scope_elements(g, o);
  r.elements_checked = elements.size();
  Outcome out = run_over_elements(
      g, elements, o.threads,
      [&](DescentOracle& oracle, const GroupElement& w, Outcome& res) {
        if (!kluitmann_invariant_check(oracle, w))
          res.failures.push_back(
              {element_to_string(g, w),
               "connection index constant across Red_T(w)", "mismatch", ""});
      });
  r.failures = std::move(out.failures);
  r.caps_hit = out.caps;
  r.elapsed_ms = timer.ms();
  return r;
}

VerificationReport verify_prop_7_1(int n, const VerifyOptions&) {
  Timer timer;
  VerificationReport r;
  r.group_label = "D" + std::to_string(n);
  r.group_order = coxeter_order(Family::D, n);
  r.theorem = "7.1";
  r.scope = "exhaustive";
  DnIntersectionReport rep = dn_maximal_parabolic_intersections(n, n <= 5);
  r.elements_checked = rep.pairs_checked;
  auto set_str = [](const std::vector<int>& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(s[i]);
    }
    return out + "}";
  };
  if (n >= 6) {
    for (const auto& p : rep.trivial_pairs)
      r.failures.push_back({"pair(i=" + std::to_string(p.i_index) + ")",
                            "nontrivial intersection",
                            "trivial intersection",
                            set_str(p.set_a) + " vs " + set_str(p.set_b)});
  } else {
    if (rep.all_nontrivial)
      r.failures.push_back({"D" + std::to_string(n),
                            "a trivially intersecting pair exists",
                            "all pairs intersect nontrivially", ""});
    if (n == 4) {
      // The documented witness: stab({3,4}) vs its s2-conjugate stab({2,4}).
      bool found = false;
      for (const auto& p : rep.trivial_pairs) {
        if (p.set_a == std::vector<int>{3, 4} &&
            p.set_b == std::vector<int>{2, 4})
          found = true;
      }
      if (!found)
        r.failures.push_back({"D4",
                              "witness pair {3,4} vs {2,4} present",
                              "not found", ""});
    }
  }
  r.elapsed_ms = timer.ms();
  return r;
}

VerificationReport verify_d4_example(const VerifyOptions& o) {
  Timer timer;
  CoxGroup g = CoxGroup::build(Family::D, 4);
  VerificationReport r = make_report(g, "d4-example", o);
  r.scope = "exhaustive";
  DescentOracle oracle(g);

  // Simple reflections in diagram order: s2 is the branch node (the
  // second simple root e2-e3); s0, s1, s3 are the outer nodes.
  const auto& simple = g.simple_reflections();
  int s0 = simple[0], s2 = simple[1], s1 = simple[2], s3 = simple[3];
  Word word{s1, g.conj_reflection(s2, s1), g.conj_reflection(s2, s0), s3};
  GroupElement w = g.from_word(word);
  r.elements_checked = g.order();

  if (!is_quasi_coxeter(oracle, w))
    r.failures.push_back({element_to_string(g, w),
                          "quasi-Coxeter", "not quasi-Coxeter",
                          word_to_string(word)});

  // Absolute-order interval below w.
  auto elements = g.all_elements();
  std::sort(elements.begin(), elements.end());
  std::vector<GroupElement> interval;
  int lw = oracle.get(w).length;
  for (const auto& u : elements) {
    int lu = oracle.get(u).length;
    if (lu + oracle.get(g.multiply(g.inverse(u), w)).length == lw)
      interval.push_back(u);
  }
  if (interval.size() != 54)
    r.failures.push_back({element_to_string(g, w),
                          "interval of size 54",
                          std::to_string(interval.size()) + " elements", ""});

  // Search for a pair with no least upper bound (or no greatest lower
  // bound) inside the interval.
  const int m = int(interval.size());
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int li = oracle.get(interval[i]).length;
      int lj = oracle.get(interval[j]).length;
      leq[i][j] =
          li +
              oracle.get(g.multiply(g.inverse(interval[i]), interval[j]))
                  .length ==
          lj;
    }
  auto non_lattice_pair = [&]() -> std::string {
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        std::vector<int> uppers, lowers;
        for (int z = 0; z < m; ++z) {
          if (leq[i][z] && leq[j][z]) uppers.push_back(z);
          if (leq[z][i] && leq[z][j]) lowers.push_back(z);
        }
        int min_uppers = 0, max_lowers = 0;
        for (int z : uppers) {
          bool minimal = true;
          for (int y : uppers)
            if (y != z && leq[y][z]) minimal = false;
          if (minimal) ++min_uppers;
        }
        for (int z : lowers) {
          bool maximal = true;
          for (int y : lowers)
            if (y != z && leq[z][y]) maximal = false;
          if (maximal) ++max_lowers;
        }
        if (min_uppers != 1 || max_lowers != 1)
          return element_to_string(g, interval[i]) + " , " +
                 element_to_string(g, interval[j]);
      }
    return "";
  };
  std::string witness = non_lattice_pair();
  if (witness.empty())
    r.failures.push_back({element_to_string(g, w),
                          "interval is not a lattice",
                          "all pairs have unique join and meet", ""});

  // Exactly one conjugacy class of quasi-Coxeter non-Coxeter elements.
  auto classes = conjugacy_classes(g);
  GroupElement coxeter = g.from_word(
      {simple[0], simple[1], simple[2], simple[3]});
  int qc_non_coxeter = 0;
  for (const auto& cls : classes.classes) {
    if (!is_quasi_coxeter(oracle, cls.front())) continue;
    if (!std::binary_search(cls.begin(), cls.end(), coxeter))
      ++qc_non_coxeter;
  }
  if (qc_non_coxeter != 1)
    r.failures.push_back({"D4",
                          "one quasi-Coxeter non-Coxeter class",
                          std::to_string(qc_non_coxeter) + " classes",
                          witness});
  r.elapsed_ms = timer.ms();
  return r;
}

VerificationReport verify_connection_table(const VerifyOptions&) {
  Timer timer;
  VerificationReport r;
  r.group_label = "simply-laced table";
  r.theorem = "connection-table";
  r.scope = "exhaustive";
  auto check = [&](Family f, int rank, long expected) {
    auto rs = RootSystem::build(f, rank);
    std::vector<std::int32_t> simple(rs->simple_ids().begin(),
                                     rs->simple_ids().end());
    mpz_class got = connection_index(*rs, simple);
    ++r.elements_checked;
    if (got != expected)
      r.failures.push_back({rs->label(), std::to_string(expected),
                            got.get_str(), "simple system"});
  };
  for (int n = 1; n <= 8; ++n) check(Family::A, n, n + 1);
  for (int n = 4; n <= 8; ++n) check(Family::D, n, 4);
  check(Family::E, 6, 3);
  check(Family::E, 7, 2);
  check(Family::E, 8, 1);
  r.group_order = 0;
  r.elapsed_ms = timer.ms();
  return r;
}

VerificationReport verify_coverage_class_reps(const CoxGroup& g,
                                              const VerifyOptions& o) {
  Timer timer;
  VerifyOptions local = o;
  local.scope = Scope::class_reps;
  VerificationReport r = make_report(g, "coverage", local);
  auto reps = conjugacy_class_representatives(g, o.enumeration_bound);
  DescentOracle oracle(g);
  for (const auto& w : reps) {
    if (oracle.get(w).length != g.rank()) continue;
    if (!is_quasi_coxeter(oracle, w)) continue;
    ++r.elements_checked;
    Word f = first_reduced_factorization(oracle, w);
    CoverageCheck cov = last_slot_coverage(g, f, o.cap);
    if (cov.capped && !cov.complete) {
      ++r.caps_hit;
      continue;
    }
    if (!cov.complete)
      r.failures.push_back({element_to_string(g, w),
                            "all reflections covered in the last slot",
                            std::to_string(cov.covered.size()) + " of " +
                                std::to_string(g.num_reflections()),
                            word_to_string(f)});
    TransitivityCheck t = is_hurwitz_transitive(oracle, w, o.cap);
    if (t.indeterminate()) {
      ++r.caps_hit;
    } else if (!t.transitive()) {
      Failure fail;
      fail.element = element_to_string(g, w);
      fail.expected = "transitive Hurwitz action";
      fail.got = "orbit " + std::to_string(t.orbit_size) + " of " +
                 std::to_string(t.red_count);
      if (t.outside_witness) fail.witness = word_to_string(*t.outside_witness);
      r.failures.push_back(std::move(fail));
    }
  }
  r.elapsed_ms = timer.ms();
  return r;
}

}  // namespace coxkit
