#include "coxkit/hurwitz.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <deque>
#include <stdexcept>

namespace coxkit {

GroupElement word_product(const CoxGroup& g, const Word& w) {
  return g.from_word(w);
}

WordCodec::WordCodec(int n_symbols, int len) : len_(len) {
  bits_ = 1;
  while ((1 << bits_) < n_symbols) ++bits_;
  if (bits_ * len > 64)
    throw std::invalid_argument("word too long to pack into 64 bits");
  mask_ = bits_ == 64 ? ~0ull : ((1ull << bits_) - 1);
}

std::uint64_t WordCodec::encode(const Word& w) const {
  if (int(w.size()) != len_)
    throw std::invalid_argument("WordCodec: length mismatch");
  std::uint64_t key = 0;
  for (int i = 0; i < len_; ++i)
    key |= (std::uint64_t(w[i]) & mask_) << (i * bits_);
  return key;
}

Word WordCodec::decode(std::uint64_t key) const {
  Word w(len_);
  for (int i = 0; i < len_; ++i)
    w[i] = std::int32_t((key >> (i * bits_)) & mask_);
  return w;
}

Word braid_move(const CoxGroup& g, const Word& f, int i, bool forward) {
  if (i < 1 || i >= int(f.size()))
    throw std::invalid_argument("braid move position out of range");
  Word out(f);
  int a = f[i - 1], b = f[i];
  if (forward) {
    out[i - 1] = g.conj_reflection(a, b);
    out[i] = a;
  } else {
    out[i - 1] = b;
    out[i] = g.conj_reflection(b, a);
  }
  return out;
}

namespace {

bool visit_rec(DescentOracle& oracle, const GroupElement& w, Word& path,
               const std::function<bool(const Word&)>& visit) {
  const auto& entry = oracle.get(w);
  if (entry.length == 0) return visit(path);
  const CoxGroup& g = oracle.group();
  for (auto t : entry.descents) {
    path.push_back(t);
    GroupElement rest = g.multiply(g.reflection(t), w);
    bool keep = visit_rec(oracle, rest, path, visit);
    path.pop_back();
    if (!keep) return false;
  }
  return true;
}

}  // namespace

void visit_reduced_factorizations(
    DescentOracle& oracle, const GroupElement& w,
    const std::function<bool(const Word&)>& visit) {
  Word path;
  path.reserve(16);
  visit_rec(oracle, w, path, visit);
}

std::vector<Word> reduced_factorizations(DescentOracle& oracle,
                                         const GroupElement& w) {
  std::vector<Word> out;
  visit_reduced_factorizations(oracle, w, [&](const Word& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::uint64_t count_reduced_factorizations(DescentOracle& oracle,
                                           const GroupElement& w) {
  std::uint64_t n = 0;
  visit_reduced_factorizations(oracle, w, [&](const Word&) {
    ++n;
    return true;
  });
  return n;
}

Word first_reduced_factorization(DescentOracle& oracle,
                                 const GroupElement& w) {
  Word out;
  visit_reduced_factorizations(oracle, w, [&](const Word& f) {
    out = f;
    return false;
  });
  return out;
}

std::vector<Word> HurwitzOrbit::sorted_members() const {
  std::vector<std::uint64_t> ks(keys.begin(), keys.end());
  std::sort(ks.begin(), ks.end());
  std::vector<Word> out;
  out.reserve(ks.size());
  for (auto k : ks) out.push_back(codec.decode(k));
  return out;
}

namespace {

// Shared orbit-walk core.  on_insert sees each new member; returning
// false stops the whole search (used for coverage early exit).  FIFO
// order enumerates members breadth-first; LIFO dives along chains of
// moves, which reaches fresh last-slot values far sooner on the huge
// E-type orbits where coverage exits early.
template <typename OnInsert>
void orbit_walk(const CoxGroup& g, const Word& seed, std::uint64_t cap,
                const WordCodec& codec,
                std::unordered_set<std::uint64_t>& keys, bool& capped,
                bool lifo, OnInsert&& on_insert) {
  const int len = int(seed.size());
  capped = false;
  std::uint64_t seed_key = codec.encode(seed);
  keys.insert(seed_key);
  if (!on_insert(seed)) return;
  if (len < 2) return;

#ifndef NDEBUG
  GroupElement expect = word_product(g, seed);
#endif
  std::deque<std::uint64_t> queue{seed_key};
  Word cur, nxt(len);
  while (!queue.empty()) {
    if (lifo) {
      cur = codec.decode(queue.back());
      queue.pop_back();
    } else {
      cur = codec.decode(queue.front());
      queue.pop_front();
    }
    for (int pos = 0; pos + 1 < len; ++pos) {
      for (int dir = 0; dir < 2; ++dir) {
        int a = cur[pos], b = cur[pos + 1];
        nxt = cur;
        if (dir == 0) {
          nxt[pos] = g.conj_reflection(a, b);
          nxt[pos + 1] = a;
        } else {
          nxt[pos] = b;
          nxt[pos + 1] = g.conj_reflection(b, a);
        }
        std::uint64_t key = codec.encode(nxt);
        if (!keys.insert(key).second) continue;
        assert(word_product(g, nxt) == expect);
        if (!on_insert(nxt)) return;
        if (keys.size() >= cap) {
          capped = true;
          return;
        }
        queue.push_back(key);
      }
    }
  }
}

}  // namespace

HurwitzOrbit hurwitz_orbit(const CoxGroup& g, const Word& seed,
                           std::uint64_t cap) {
  HurwitzOrbit orbit{seed, WordCodec(g.num_reflections(), int(seed.size())),
                     {}, true, cap};
  bool capped = false;
  orbit_walk(g, seed, cap, orbit.codec, orbit.keys, capped, /*lifo=*/false,
             [](const Word&) { return true; });
  orbit.exhausted = !capped;
  return orbit;
}

TransitivityCheck is_hurwitz_transitive(DescentOracle& oracle,
                                        const GroupElement& w,
                                        std::uint64_t cap) {
  const CoxGroup& g = oracle.group();
  TransitivityCheck r;
  Word seed = first_reduced_factorization(oracle, w);
  HurwitzOrbit orbit = hurwitz_orbit(g, seed, cap);
  r.orbit_size = orbit.size();
  if (!orbit.exhausted) {
    r.verdict = TransitivityCheck::Verdict::indeterminate;
    return r;
  }
  std::uint64_t red = 0;
  std::optional<Word> outside;
  visit_reduced_factorizations(oracle, w, [&](const Word& f) {
    ++red;
    if (!outside && !orbit.contains(f)) outside = f;
    return true;
  });
  r.red_count = red;
  if (outside) {
    r.verdict = TransitivityCheck::Verdict::intransitive;
    r.outside_witness = std::move(outside);
  } else {
    r.verdict = TransitivityCheck::Verdict::transitive;
  }
  return r;
}

CoverageCheck last_slot_coverage(const CoxGroup& g, const Word& seed,
                                 std::uint64_t cap) {
  CoverageCheck r;
  const int n = g.num_reflections();
  if (seed.empty()) {
    r.complete = n == 0;
    return r;
  }
  std::vector<bool> seen(n, false);
  int remaining = n;
  WordCodec codec(n, int(seed.size()));
  std::unordered_set<std::uint64_t> keys;
  bool capped = false;
  orbit_walk(g, seed, cap, codec, keys, capped, /*lifo=*/true,
             [&](const Word& f) {
               int last = f.back();
               if (!seen[last]) {
                 seen[last] = true;
                 --remaining;
               }
               return remaining > 0;
             });
  r.capped = capped;
  r.complete = remaining == 0;
  r.explored = keys.size();
  for (int t = 0; t < n; ++t)
    if (seen[t]) r.covered.push_back(t);
  return r;
}

std::uint64_t default_orbit_cap() {
  if (const char* env = std::getenv("HURWITZ_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 10'000'000ull;
}

}  // namespace coxkit
