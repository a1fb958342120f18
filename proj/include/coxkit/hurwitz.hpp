#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_set>
#include <vector>

#include "coxkit/group.hpp"

namespace coxkit {

// A factorization is a word of reflection indices; the group element it
// factors is the left-to-right product.  Orbit enumeration packs words
// into 64-bit keys (reflection count <= 256 and length <= 8 covers every
// finite type built here, with wider slots for dihedral groups).
using Word = std::vector<std::int32_t>;

GroupElement word_product(const CoxGroup& g, const Word& w);

class WordCodec {
 public:
  WordCodec(int n_symbols, int len);
  std::uint64_t encode(const Word& w) const;
  Word decode(std::uint64_t key) const;
  int length() const { return len_; }

 private:
  int bits_, len_;
  std::uint64_t mask_;
};

// One Hurwitz move.  Positions are 1-based: position i acts on entries
// (i, i+1).  Forward replaces them by (t_i t_{i+1} t_i, t_i); inverse by
// (t_{i+1}, t_{i+1} t_i t_{i+1}).  The product is unchanged.
Word braid_move(const CoxGroup& g, const Word& f, int i, bool forward);

// Streaming enumeration of Red_T(w) in lexicographic order (by choice of
// descent at each step).  Returns false from the visitor to stop early.
void visit_reduced_factorizations(
    DescentOracle& oracle, const GroupElement& w,
    const std::function<bool(const Word&)>& visit);
std::vector<Word> reduced_factorizations(DescentOracle& oracle,
                                         const GroupElement& w);
std::uint64_t count_reduced_factorizations(DescentOracle& oracle,
                                           const GroupElement& w);
Word first_reduced_factorization(DescentOracle& oracle,
                                 const GroupElement& w);

struct HurwitzOrbit {
  Word seed;
  WordCodec codec;
  std::unordered_set<std::uint64_t> keys;
  bool exhausted = true;  // false when the cap stopped the search
  std::uint64_t cap = 0;

  std::uint64_t size() const { return keys.size(); }
  bool contains(const Word& w) const {
    return keys.count(codec.encode(w)) != 0;
  }
  // Members in sorted key order (deterministic for reports).
  std::vector<Word> sorted_members() const;
};

// Breadth-first closure of the seed under all forward and inverse moves.
// Hitting the cap is a reported state, not an error.
HurwitzOrbit hurwitz_orbit(const CoxGroup& g, const Word& seed,
                           std::uint64_t cap);

struct TransitivityCheck {
  enum class Verdict { transitive, intransitive, indeterminate };
  Verdict verdict = Verdict::indeterminate;
  std::uint64_t red_count = 0;
  std::uint64_t orbit_size = 0;
  // A reduced factorization outside the orbit, when intransitive.
  std::optional<Word> outside_witness;

  bool transitive() const { return verdict == Verdict::transitive; }
  bool indeterminate() const {
    return verdict == Verdict::indeterminate;
  }
};

// Enumerates Red_T(w), runs the orbit BFS from one member and compares
// sizes.  A capped orbit yields an indeterminate verdict.
TransitivityCheck is_hurwitz_transitive(DescentOracle& oracle,
                                        const GroupElement& w,
                                        std::uint64_t cap);

struct CoverageCheck {
  bool complete = false;  // every reflection reached the last slot
  bool capped = false;
  std::vector<std::int32_t> covered;  // sorted reflection indices
  std::uint64_t explored = 0;         // orbit members visited
};

// Which reflections occur in the final position across the orbit of the
// seed; exits as soon as all of them have been seen.
CoverageCheck last_slot_coverage(const CoxGroup& g, const Word& seed,
                                 std::uint64_t cap);

// Default orbit cap (10^7), overridable through the HURWITZ_CAP
// environment variable.
std::uint64_t default_orbit_cap();

}  // namespace coxkit
