#pragma once

#include "pbdom/poset.hpp"

#include <cstdint>
#include <vector>

namespace pbdom {

inline constexpr int kMaxEnumeratedPoset = 7;

/// Every poset with exactly k elements, one per isomorphism class, in a fixed
/// order. Element ids are "0".."k-1". Throws UsageError unless 1 <= k <= 7.
std::vector<FinPoset> enumerate_posets(int k);

/// Canonical code of a poset with at most 8 elements: the least leq-matrix
/// bitmask (bit 8*i + j) over all relabellings. Equal iff isomorphic.
std::uint64_t canonical_code(const FinPoset& p);

FinPoset chain(int n);
FinPoset antichain(int n);
/// Subsets of {1..dim} under inclusion, ids like "{}", "{1,3}".
FinPoset boolean_lattice(int dim);

/// A lattice of sets: a random family over a ground set of 2..5 points,
/// closed under intersection, with the full set added. Same ids as
/// boolean_lattice. Deterministic in `seed`.
FinPoset random_lattice(std::uint64_t seed);
std::vector<FinPoset> random_lattices(std::size_t count, std::uint64_t seed);

}  // namespace pbdom
