#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pbdom {

using Bits = boost::dynamic_bitset<std::uint64_t>;

/// Map between the element indices of two posets, `map[i]` is the image of i.
using PosetMap = std::vector<std::size_t>;

/// A finite partially ordered set stored as a cover relation.
///
/// Elements are addressed by index (their position in `ids()`); the full order
/// is computed once at construction and kept as up-set / down-set bitsets.
/// Instances are immutable and safe to share between threads.
class FinPoset {
 public:
  using Cover = std::pair<std::size_t, std::size_t>;

  /// Builds a poset from element ids and (lower, upper) cover pairs.
  /// Throws StructuralError on duplicate or empty ids, unknown ids in covers,
  /// cycles, or covers implied by other covers.
  FinPoset(std::vector<std::string> ids,
           const std::vector<std::pair<std::string, std::string>>& covers);

  static FinPoset from_indices(std::vector<std::string> ids,
                               std::vector<Cover> covers);

  /// Builds the poset whose order is `leq` (must be a partial order), taking
  /// the transitive reduction as cover relation.
  static FinPoset from_order(std::vector<std::string> ids,
                             const std::function<bool(std::size_t, std::size_t)>& leq);

  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(std::size_t i) const { return ids_[i]; }
  std::optional<std::size_t> find(const std::string& id) const;
  /// Like find(), but throws UsageError for unknown ids.
  std::size_t index(const std::string& id) const;

  bool leq(std::size_t a, std::size_t b) const { return up_[a][b]; }
  bool lt(std::size_t a, std::size_t b) const { return a != b && up_[a][b]; }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }
  bool covers(std::size_t lo, std::size_t hi) const;

  /// Elements >= x (including x).
  const Bits& up(std::size_t x) const { return up_[x]; }
  /// Elements <= x (including x).
  const Bits& down(std::size_t x) const { return down_[x]; }

  const std::vector<Cover>& cover_pairs() const { return covers_; }
  const std::vector<std::size_t>& lower_covers(std::size_t x) const { return lower_[x]; }
  const std::vector<std::size_t>& upper_covers(std::size_t x) const { return upper_[x]; }

  /// Reflexive-transitive closure of the covers as (lower, upper) pairs.
  std::vector<Cover> order() const;

  /// Indices sorted so that every element comes after everything below it;
  /// ties broken by index.
  const std::vector<std::size_t>& linear_extension() const { return topo_; }

  std::vector<std::size_t> minimal() const;
  std::vector<std::size_t> maximal() const;
  bool is_maximal(std::size_t x) const { return upper_[x].empty(); }
  std::optional<std::size_t> bottom() const;
  std::optional<std::size_t> top() const;

  FinPoset dual() const;
  /// Induced subposet on `elems` (kept in the given order).
  FinPoset subposet(const std::vector<std::size_t>& elems) const;
  /// Principal ideal of x; `embed`, if given, receives the index in *this of
  /// each element of the result.
  FinPoset ideal(std::size_t x, std::vector<std::size_t>* embed = nullptr) const;
  /// Closed interval [lo, hi].
  FinPoset interval(std::size_t lo, std::size_t hi,
                    std::vector<std::size_t>* embed = nullptr) const;

  static std::vector<std::size_t> members(const Bits& b);

 private:
  FinPoset() = default;
  void build(std::vector<Cover> covers);

  std::vector<std::string> ids_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Cover> covers_;
  std::vector<std::vector<std::size_t>> lower_;
  std::vector<std::vector<std::size_t>> upper_;
  std::vector<Bits> up_;
  std::vector<Bits> down_;
  std::vector<std::size_t> topo_;
};

bool is_monotone(const FinPoset& p, const FinPoset& q, const PosetMap& f);
/// Bijective, and x <= y iff f(x) <= f(y).
bool is_order_iso(const FinPoset& p, const FinPoset& q, const PosetMap& f);
PosetMap inverse_map(const PosetMap& f);
PosetMap compose(const PosetMap& after, const PosetMap& before);

}  // namespace pbdom
