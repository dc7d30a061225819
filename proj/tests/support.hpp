#pragma once
// Hand-rolled generators and brute-force oracles shared by the unit tests.

#include "pbdom/boolalg.hpp"
#include "pbdom/pba.hpp"
#include "pbdom/poset.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace pbtest {

using namespace pbdom;

inline std::vector<std::string> numbered(std::size_t n, const std::string& prefix = "") {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back(prefix + std::to_string(i));
  return ids;
}

// Random poset: i < j with probability p for i < j in a hidden linear order,
// then closed transitively.
inline FinPoset random_poset(std::mt19937_64& rng, std::size_t n, double p = 0.35) {
  std::bernoulli_distribution coin(p);
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) le[i][j] = coin(rng);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = true;
  return FinPoset::from_order(numbered(n, "x"), [&](std::size_t a, std::size_t b) { return le[a][b]; });
}

// Greatest lower bound straight from the order relation.
inline std::optional<std::size_t> brute_meet(const FinPoset& p, const std::vector<std::size_t>& s) {
  std::vector<std::size_t> lower;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (std::all_of(s.begin(), s.end(), [&](std::size_t y) { return p.leq(x, y); })) lower.push_back(x);
  for (std::size_t x : lower)
    if (std::all_of(lower.begin(), lower.end(), [&](std::size_t y) { return p.leq(y, x); })) return x;
  return std::nullopt;
}

inline std::optional<std::size_t> brute_join(const FinPoset& p, const std::vector<std::size_t>& s) {
  std::vector<std::size_t> upper;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (std::all_of(s.begin(), s.end(), [&](std::size_t y) { return p.leq(y, x); })) upper.push_back(x);
  for (std::size_t x : upper)
    if (std::all_of(upper.begin(), upper.end(), [&](std::size_t y) { return p.leq(x, y); })) return x;
  return std::nullopt;
}

// Bell numbers by the Stirling recurrence S(n,k) = k S(n-1,k) + S(n-1,k-1).
inline std::uint64_t stirling_bell(int n) {
  std::vector<std::vector<std::uint64_t>> s(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= i; ++k) s[i][k] = k * s[i - 1][k] + s[i - 1][k - 1];
  return std::accumulate(s[n].begin(), s[n].end(), std::uint64_t{0});
}

// Number of subsets of a 2^atoms element Boolean algebra that contain 0 and 1
// and are closed under complement and meet.
inline std::size_t brute_subalgebra_count(unsigned atoms) {
  const unsigned size = 1u << atoms, one = size - 1;
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask) {
    auto in = [&](unsigned x) { return (mask >> x) & 1; };
    if (!in(0) || !in(one)) continue;
    bool closed = true;
    for (unsigned x = 0; x < size && closed; ++x) {
      if (!in(x)) continue;
      if (!in(one & ~x)) closed = false;
      for (unsigned y = 0; y < size && closed; ++y)
        if (in(y) && !in(x & y)) closed = false;
    }
    count += closed;
  }
  return count;
}

// Number of isomorphism classes of k-element posets, from all labelled
// partial orders and a permutation-minimal adjacency code.
inline std::size_t brute_poset_classes(int k) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) pairs.emplace_back(i, j);
  std::vector<std::uint64_t> codes;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
    std::vector<std::vector<bool>> le(k, std::vector<bool>(k, false));
    for (int i = 0; i < k; ++i) le[i][i] = true;
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if ((m >> b) & 1) le[pairs[b].first][pairs[b].second] = true;
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = 0; j < k && ok; ++j) {
        if (i != j && le[i][j] && le[j][i]) ok = false;
        for (int l = 0; l < k && ok; ++l)
          if (le[i][j] && le[j][l] && !le[i][l]) ok = false;
      }
    if (!ok) continue;
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
      std::uint64_t code = 0;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          if (le[perm[i]][perm[j]]) code |= std::uint64_t{1} << (k * i + j);
      best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    codes.push_back(best);
  }
  std::sort(codes.begin(), codes.end());
  return static_cast<std::size_t>(std::unique(codes.begin(), codes.end()) - codes.begin());
}

inline FinBool letters(int atoms) {
  std::vector<std::string> labels;
  for (int i = 0; i < atoms; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  return FinBool(labels);
}

inline PieceBool boolean_pba(int atoms) { return PieceBool::from_bool(letters(atoms)); }

inline PieceBool glued_pair() { return PbaBuilder().block({"a", "na"}).block({"b", "nb"}).build(); }

inline PosetMap identity_map(std::size_t n) {
  PosetMap m(n);
  std::iota(m.begin(), m.end(), 0);
  return m;
}

}  // namespace pbtest
