#pragma once

#include "pbdom/lattice.hpp"
#include "pbdom/poset.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace pbdom {

/// Element of a finite Boolean algebra: a subset of its atoms as a bitmask.
using Elem = std::uint32_t;

inline constexpr std::size_t kMaxBoolAtoms = 20;
inline constexpr std::size_t kMaxSubalgebraAtoms = 6;

/// Atom cap for subalgebra enumeration, lowered by PBDOM_MAX_ATOMS if set.
std::size_t subalgebra_atom_cap();

/// Finite Boolean algebra given by its atoms.
class FinBool {
 public:
  /// Throws UsageError on an empty atom list, more than kMaxBoolAtoms atoms,
  /// or duplicate/empty labels.
  explicit FinBool(std::vector<std::string> atom_labels);

  std::size_t atom_count() const { return atoms_.size(); }
  const std::vector<std::string>& atoms() const { return atoms_; }
  std::size_t size() const { return std::size_t{1} << atoms_.size(); }

  Elem zero() const { return 0; }
  Elem one() const { return static_cast<Elem>(size() - 1); }
  Elem neg(Elem x) const { return one() & ~x; }
  Elem atom(std::size_t i) const { return Elem{1} << i; }
  bool is_atom(Elem x) const { return x != 0 && (x & (x - 1)) == 0; }
  bool contains(Elem x) const { return (x & ~one()) == 0; }

  std::optional<std::size_t> atom_index(const std::string& label) const;
  /// Sorted, comma-joined labels of the atoms below x ("" for zero).
  std::string key(Elem x) const;
  /// Inverse of key(); throws UsageError on unknown labels.
  Elem parse_key(const std::string& key) const;
  Elem from_labels(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels(Elem x) const;

  bool operator==(const FinBool& o) const { return atoms_ == o.atoms_; }

 private:
  std::vector<std::string> atoms_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Homomorphism of finite Boolean algebras, stored as the image of each
/// source atom. Images are pairwise disjoint and join to one; zero images are
/// allowed (non-injective maps).
class BoolHom {
 public:
  /// Throws UsageError unless the images define a homomorphism.
  BoolHom(FinBool source, FinBool target, std::vector<Elem> atom_images);

  static BoolHom identity(const FinBool& b);
  /// after ∘ before. Throws UsageError if the middle algebras differ.
  static BoolHom compose(const BoolHom& after, const BoolHom& before);
  /// Inverse of an isomorphism; throws UsageError if f is not bijective.
  static BoolHom inverse(const BoolHom& f);

  const FinBool& source() const { return source_; }
  const FinBool& target() const { return target_; }
  const std::vector<Elem>& atom_images() const { return images_; }

  Elem operator()(Elem x) const;
  bool injective() const;

  bool operator==(const BoolHom& o) const {
    return source_ == o.source_ && target_ == o.target_ && images_ == o.images_;
  }

 private:
  FinBool source_;
  FinBool target_;
  std::vector<Elem> images_;
};

/// A Boolean subalgebra, represented by its atoms (a partition of the
/// ambient atom set into nonzero, pairwise disjoint masks), sorted.
struct Subalgebra {
  std::vector<Elem> atoms;

  /// Throws UsageError unless the blocks partition the atoms of b.
  static Subalgebra from_partition(const FinBool& b, const Partition& pi);
  /// Throws UsageError unless `elems` is closed under 0, 1, negation and meet.
  static Subalgebra from_elements(const FinBool& b, const std::vector<Elem>& elems);
  static Subalgebra whole(const FinBool& b);
  static Subalgebra trivial(const FinBool& b);

  bool is_valid_in(const FinBool& b) const;
  std::vector<Elem> elements() const;
  bool contains(Elem x) const;
  /// Inclusion of element sets.
  bool included_in(const Subalgebra& o) const;
  Partition partition(const FinBool& b) const;
  /// Atom-label partition, e.g. "a,b/c".
  std::string label(const FinBool& b) const;

  bool operator==(const Subalgebra&) const = default;
  auto operator<=>(const Subalgebra&) const = default;
};

/// Subalgebra generated by the union (common refinement).
Subalgebra sub_join(const Subalgebra& a, const Subalgebra& c);
/// Intersection.
Subalgebra sub_meet(const Subalgebra& a, const Subalgebra& c);

/// Subalgebra lattice of `base`, ordered by inclusion. `subs[i]` is the
/// subalgebra named by poset element i.
struct SubalgebraLattice {
  FinBool base;
  FinPoset poset;
  std::vector<Subalgebra> subs;

  std::size_t index_of(const Subalgebra& s) const;
};

/// Throws ResourceError above subalgebra_atom_cap() atoms.
SubalgebraLattice subalgebras(const FinBool& b);

/// Throws UsageError if pi is not a partition of b's atoms.
std::vector<Elem> subalgebra_of_partition(const FinBool& b, const Partition& pi);

/// f[A]. Throws UsageError if A is not a subalgebra of f's source.
Subalgebra direct_image(const BoolHom& f, const Subalgebra& a);

/// Optional tiebreak for two-atom algebras: (element of A, element of B)
/// that the lift must send to one another.
using LiftTiebreak = std::optional<std::pair<Elem, Elem>>;

/// An isomorphism f: A.base -> B.base with direct image equal to psi on
/// every subalgebra. Throws LogicError if none exists and UsageError if the
/// tiebreak names an impossible pair.
BoolHom lift_sub_iso(const SubalgebraLattice& a, const SubalgebraLattice& b, const PosetMap& psi,
                     const LiftTiebreak& tiebreak = std::nullopt);
/// All such isomorphisms (two for two-atom algebras, otherwise one).
std::vector<BoolHom> all_sub_iso_lifts(const SubalgebraLattice& a, const SubalgebraLattice& b,
                                       const PosetMap& psi);

/// Isomorphism pairing atoms in sorted-label order, if atom counts agree.
std::optional<BoolHom> bool_iso_search(const FinBool& a, const FinBool& b);
/// All isomorphisms a -> b (one per atom bijection), lexicographic.
std::vector<BoolHom> all_bool_isos(const FinBool& a, const FinBool& b);

}  // namespace pbdom
