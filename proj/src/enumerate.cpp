#include "pbdom/enumerate.hpp"

#include "pbdom/error.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace pbdom {
namespace {

using Code = std::uint64_t;

constexpr Code bit(std::size_t i, std::size_t j) { return Code{1} << (8 * i + j); }

// leq lookups on a raw code of size n
struct Small {
  std::size_t n;
  Code leq;
  bool le(std::size_t i, std::size_t j) const { return (leq & bit(i, j)) != 0; }
};

Code canonical(const Small& s) {
  const std::size_t n = s.n;
  std::vector<std::pair<std::size_t, std::size_t>> key(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (s.le(j, i)) ++key[i].first;
      if (s.le(i, j)) ++key[i].second;
    }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return key[a] != key[b] ? key[a] < key[b] : a < b;
  });
  // runs of equal keys may be permuted freely
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && key[perm[j]] == key[perm[i]]) ++j;
    runs.emplace_back(i, j);
    i = j;
  }
  for (auto [b, e] : runs) std::sort(perm.begin() + b, perm.begin() + e);
  Code best = ~Code{0};
  while (true) {
    Code c = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (s.le(perm[i], perm[j])) c |= bit(i, j);
    best = std::min(best, c);
    std::size_t r = runs.size();
    while (r > 0) {
      auto [b, e] = runs[r - 1];
      if (std::next_permutation(perm.begin() + b, perm.begin() + e)) break;
      --r;
    }
    if (r == 0) break;
  }
  return best;
}

FinPoset from_small(const Small& s) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < s.n; ++i) ids.push_back(std::to_string(i));
  return FinPoset::from_order(std::move(ids), [&](std::size_t a, std::size_t b) { return s.le(a, b); });
}

std::string subset_id(unsigned mask) {
  std::string s = "{";
  bool first = true;
  for (unsigned i = 0; i < 32; ++i)
    if (mask & (1u << i)) {
      if (!first) s += ',';
      s += std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

FinPoset set_family(const std::vector<unsigned>& sets) {
  std::vector<std::string> ids;
  for (unsigned m : sets) ids.push_back(subset_id(m));
  return FinPoset::from_order(std::move(ids), [&](std::size_t a, std::size_t b) {
    return (sets[a] & ~sets[b]) == 0;
  });
}

}  // namespace

std::uint64_t canonical_code(const FinPoset& p) {
  if (p.size() > 8) throw UsageError("canonical_code supports at most 8 elements");
  Small s{p.size(), 0};
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p.leq(i, j)) s.leq |= bit(i, j);
  return canonical(s);
}

std::vector<FinPoset> enumerate_posets(int k) {
  if (k < 1 || k > kMaxEnumeratedPoset)
    throw UsageError("enumerate_posets supports 1.." + std::to_string(kMaxEnumeratedPoset));
  std::set<Code> level{bit(0, 0)};
  for (std::size_t n = 1; n < static_cast<std::size_t>(k); ++n) {
    std::set<Code> next;
    for (Code c : level) {
      Small s{n, c};
      // add a new maximal element n above every down-set of s
      for (unsigned d = 0; d < (1u << n); ++d) {
        bool closed = true;
        for (std::size_t i = 0; i < n && closed; ++i)
          if (d & (1u << i))
            for (std::size_t j = 0; j < n; ++j)
              if (s.le(j, i) && !(d & (1u << j))) {
                closed = false;
                break;
              }
        if (!closed) continue;
        Small t{n + 1, c | bit(n, n)};
        for (std::size_t i = 0; i < n; ++i)
          if (d & (1u << i)) t.leq |= bit(i, n);
        next.insert(canonical(t));
      }
    }
    level = std::move(next);
  }
  std::vector<FinPoset> out;
  out.reserve(level.size());
  for (Code c : level) out.push_back(from_small(Small{static_cast<std::size_t>(k), c}));
  return out;
}

FinPoset chain(int n) {
  if (n < 1) throw UsageError("chain needs at least one element");
  std::vector<std::string> ids;
  std::vector<FinPoset::Cover> covers;
  for (int i = 0; i < n; ++i) {
    ids.push_back(std::to_string(i));
    if (i) covers.emplace_back(i - 1, i);
  }
  return FinPoset::from_indices(std::move(ids), std::move(covers));
}

FinPoset antichain(int n) {
  if (n < 1) throw UsageError("antichain needs at least one element");
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back(std::to_string(i));
  return FinPoset::from_indices(std::move(ids), {});
}

FinPoset boolean_lattice(int dim) {
  if (dim < 0 || dim > 10) throw UsageError("boolean lattice dimension must be in 0..10");
  std::vector<unsigned> sets;
  for (unsigned m = 0; m < (1u << dim); ++m) sets.push_back(m);
  return set_family(sets);
}

FinPoset random_lattice(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const unsigned ground = 2 + static_cast<unsigned>(rng() % 4);
  const unsigned full = (1u << ground) - 1;
  const unsigned gens = 1 + static_cast<unsigned>(rng() % (2 * ground));
  std::set<unsigned> family{full};
  for (unsigned g = 0; g < gens; ++g) family.insert(static_cast<unsigned>(rng() & full));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<unsigned> cur(family.begin(), family.end());
    for (unsigned a : cur)
      for (unsigned b : cur)
        if (family.insert(a & b).second) grew = true;
  }
  return set_family(std::vector<unsigned>(family.begin(), family.end()));
}

std::vector<FinPoset> random_lattices(std::size_t count, std::uint64_t seed) {
  std::vector<FinPoset> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_lattice(seed * 1000003u + i));
  return out;
}

}  // namespace pbdom
