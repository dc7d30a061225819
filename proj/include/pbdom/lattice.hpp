#pragma once

#include "pbdom/poset.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pbdom {

/// Greatest lower bound of a nonempty subset, if it exists.
/// Throws UsageError for an empty subset.
std::optional<std::size_t> meet(const FinPoset& p, std::span<const std::size_t> s);
/// Least upper bound of a nonempty subset, if it exists.
std::optional<std::size_t> join(const FinPoset& p, std::span<const std::size_t> s);
std::optional<std::size_t> meet(const FinPoset& p, std::size_t a, std::size_t b);
std::optional<std::size_t> join(const FinPoset& p, std::size_t a, std::size_t b);

/// Length of the longest chain from the least element below x up to x.
/// Throws StructuralError when x has no least element below it.
std::size_t height(const FinPoset& p, std::size_t x);

/// Meet and join tables of a finite lattice.
class LatticeOps {
 public:
  /// nullopt unless every pair has a meet and a join.
  static std::optional<LatticeOps> of(const FinPoset& p);

  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * n_ + b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * n_ + b]; }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_ = 0;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
  std::vector<std::size_t> meet_;
  std::vector<std::size_t> join_;
};

bool is_lattice(const FinPoset& p);

/// a v (x ^ y) == (a v x) ^ y for all a <= y. Throws UsageError if p is not a lattice.
bool is_modular_element(const FinPoset& p, std::size_t x);
/// A pair (a, y), a <= y, on which the modular identity fails for x.
std::optional<std::pair<std::size_t, std::size_t>> modularity_witness(const FinPoset& p,
                                                                      std::size_t x);
std::optional<std::pair<std::size_t, std::size_t>> modularity_witness(const FinPoset& p,
                                                                      const LatticeOps& ops,
                                                                      std::size_t x);

/// Finite, atomistic, upper semimodular lattice.
bool is_geometric(const FinPoset& p);
/// Dual of a geometric lattice.
bool is_cogeometric(const FinPoset& p);

std::vector<std::size_t> atoms(const FinPoset& p);
std::vector<std::size_t> coatoms(const FinPoset& p);

// ---------------------------------------------------------------------------
// Partition lattices

/// A set partition of {0, ..., n-1}; blocks sorted internally and ordered by
/// their minimum element.
struct Partition {
  std::vector<std::vector<int>> blocks;

  int ground_size() const;
  /// Figure-style label with 1-based digits, e.g. "13/2/4".
  std::string label() const;
  /// True if every block of *this lies inside a block of `coarser`.
  bool refines(const Partition& coarser) const;
  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

  static Partition from_rgs(const std::vector<int>& rgs);
  /// Parses labels like "13/2/4" (digits 1..9).
  static Partition parse(const std::string& label);
};

/// All set partitions of an n-set, in restricted-growth-string order.
std::vector<Partition> set_partitions(int n);

inline constexpr int kMaxPartitionLattice = 8;

std::uint64_t bell_number(int n);

/// The partition lattice on {1..n}, finer below coarser, labelled by
/// Partition::label. Throws UsageError unless 1 <= n <= kMaxPartitionLattice.
FinPoset partition_lattice(int n);

struct PartitionLatticeCert {
  int n = 0;
  std::vector<Partition> iso;  ///< iso[i] is the partition matched to element i
};

/// Route (i): direct isomorphism search against partition_lattice(height + 1).
std::optional<PartitionLatticeCert> recognize_partition_lattice(const FinPoset& p);

/// Route (ii): recursive criterion. Geometric, has a modular coatom, every
/// upper interval above an atom is again a partition lattice one size
/// smaller, and for n <= 4 there are n(n-1)/2 atoms. Returns n.
std::optional<int> recognize_partition_lattice_recursive(const FinPoset& p);

}  // namespace pbdom
