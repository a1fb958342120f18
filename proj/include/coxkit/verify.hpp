#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coxkit/classify.hpp"
#include "coxkit/group.hpp"
#include "coxkit/hurwitz.hpp"

namespace coxkit {

enum class Scope { exhaustive, class_reps, sampled };
std::string scope_name(Scope s);
Scope parse_scope(const std::string& s);

struct VerifyOptions {
  Scope scope = Scope::exhaustive;
  std::uint64_t cap = default_orbit_cap();
  int threads = 1;
  int samples = 200;
  std::uint64_t seed = 7;
  std::uint64_t enumeration_bound = 100000;
};

struct Failure {
  std::string element;
  std::string expected;
  std::string got;
  std::string witness;
};

// Machine-readable outcome of one theorem check.  elapsed_ms is wall
// clock and is the one field exempt from the determinism contract.
struct VerificationReport {
  std::string group_label;
  std::uint64_t group_order = 0;
  std::string theorem;
  std::string scope;
  std::uint64_t elements_checked = 0;
  std::vector<Failure> failures;
  std::uint64_t caps_hit = 0;
  std::int64_t elapsed_ms = 0;

  bool success() const { return failures.empty() && caps_hit == 0; }
};

// Hurwitz transitivity <=> parabolic quasi-Coxeter, elementwise.  In
// sampled scope (the E7/E8 regime) transitivity is replaced by the
// last-slot coverage property on quasi-Coxeter samples and the
// factorization-generates-parabolic-closure property on corank-1 samples.
VerificationReport verify_theorem_1(const CoxGroup& g, const VerifyOptions& o);

// Every reduced factorization of every quasi-Coxeter element generates
// the whole group (checked as: the per-factorization generation verdict
// is constant over Red_T(w) for full-length w).
VerificationReport verify_theorem_2(const CoxGroup& g, const VerifyOptions& o);

// Simply laced: for every parabolic quasi-Coxeter element, every reduced
// factorization generates exactly the parabolic closure.
VerificationReport verify_theorem_6_1(const CoxGroup& g,
                                      const VerifyOptions& o);

// Connection index constant across Red_T(w) for every element.
VerificationReport verify_kluitmann(const CoxGroup& g, const VerifyOptions& o);

// Maximal parabolic intersections in D_n: nontrivial for n >= 6;
// explicit trivially-intersecting witnesses for n in {4, 5}.
VerificationReport verify_prop_7_1(int n, const VerifyOptions& o);

// The D4 showcase: the branch-twisted element is quasi-Coxeter, its
// absolute-order interval has 54 elements and is not a lattice, and D4
// has exactly one conjugacy class of quasi-Coxeter non-Coxeter elements.
VerificationReport verify_d4_example(const VerifyOptions& o);

// Connection indices of the simply laced table: i(A_n) = n+1 (n <= 8),
// i(D_n) = 4 (n <= 8), i(E6) = 3, i(E7) = 2, i(E8) = 1.
VerificationReport verify_connection_table(const VerifyOptions& o);

// Coverage + transitivity for one representative of each quasi-Coxeter
// conjugacy class (the E6 computation).
VerificationReport verify_coverage_class_reps(const CoxGroup& g,
                                              const VerifyOptions& o);

}  // namespace coxkit
