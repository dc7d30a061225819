#pragma once

#include "pbdom/boolalg.hpp"
#include "pbdom/poset.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace pbdom {

/// Unvalidated description of a piecewise Boolean algebra, as read from JSON.
struct PbaSpec {
  struct Block {
    std::vector<std::string> atoms;
    /// atom-subset key (FinBool::key) -> carrier id. The keys of 0 and 1 may
    /// be omitted; they default to the zero and one of the algebra.
    std::map<std::string, std::string> labels;
  };
  std::vector<std::string> elements;
  std::string zero = "0";
  std::string one = "1";
  std::map<std::string, std::string> negation;
  std::vector<Block> blocks;
};

struct Violation {
  std::string condition;  ///< bounds, labels, coverage, negation, meet-agreement, closure, maximal-blocks
  std::string detail;
  std::vector<std::string> witness;
};

struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

/// Checks every axiom; never throws except ResourceError when the carrier is
/// too large for the closure check.
ValidationReport validate(const PbaSpec& spec);

inline constexpr std::size_t kMaxCliqueCarrier = 64;

/// One block: a Boolean algebra and the carrier element naming each of its
/// elements.
struct PbaBlock {
  FinBool alg;
  std::vector<std::size_t> carrier_of;          ///< indexed by Elem
  std::unordered_map<std::size_t, Elem> elem_of;  ///< carrier index -> Elem
  Bits members;                                  ///< carrier elements of the block

  std::optional<Elem> elem(std::size_t c) const;
};

/// A validated finite piecewise Boolean algebra. Immutable.
class PieceBool {
 public:
  /// Validates; throws StructuralError carrying the first violation.
  static PieceBool from_spec(const PbaSpec& spec);
  /// The algebra itself as a one-block piecewise Boolean algebra; elements
  /// named as by PbaBuilder.
  static PieceBool from_bool(const FinBool& b);

  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(std::size_t i) const { return ids_[i]; }
  std::optional<std::size_t> find(const std::string& id) const;
  std::size_t index(const std::string& id) const;

  std::size_t zero() const { return zero_; }
  std::size_t one() const { return one_; }
  std::size_t neg(std::size_t x) const { return neg_[x]; }

  const std::vector<PbaBlock>& blocks() const { return blocks_; }
  /// Blocks containing x.
  const Bits& blocks_of(std::size_t x) const { return blocks_of_[x]; }
  bool commeasurable(std::size_t x, std::size_t y) const { return blocks_of_[x].intersects(blocks_of_[y]); }
  /// Some block holding both, if any.
  std::optional<std::size_t> common_block(std::size_t x, std::size_t y) const;
  std::optional<std::size_t> meet(std::size_t x, std::size_t y) const;
  std::optional<std::size_t> join(std::size_t x, std::size_t y) const;

  PbaSpec to_spec() const;

 private:
  PieceBool() = default;

  std::vector<std::string> ids_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t zero_ = 0;
  std::size_t one_ = 0;
  std::vector<std::size_t> neg_;
  std::vector<PbaBlock> blocks_;
  std::vector<Bits> blocks_of_;
};

/// Builds specs block by block. Elements of a block are named by joining the
/// sorted atom labels with '+' ("0" and "1" for the bounds) unless renamed;
/// negation is read off the blocks.
class PbaBuilder {
 public:
  /// `names` maps atom-subset keys to carrier ids.
  PbaBuilder& block(std::vector<std::string> atoms, std::map<std::string, std::string> names = {});
  PbaSpec spec() const;
  PieceBool build() const { return PieceBool::from_spec(spec()); }

 private:
  std::vector<PbaSpec::Block> blocks_;
};

/// The poset of commeasurable Boolean subalgebras of P under inclusion.
struct SubDomain {
  SubDomain(FinPoset poset, std::vector<Bits> carrier,
            std::vector<std::pair<std::size_t, Subalgebra>> home);

  FinPoset poset;
  std::vector<Bits> carrier;  ///< element set of each subalgebra
  /// A block holding the subalgebra, and the subalgebra inside it.
  std::vector<std::pair<std::size_t, Subalgebra>> home;

  std::optional<std::size_t> find(const Bits& s) const;

 private:
  std::map<Bits, std::size_t> lookup_;
};

/// Throws ResourceError if a block exceeds subalgebra_atom_cap() atoms.
SubDomain sub(const PieceBool& p);

/// Morphism of piecewise Boolean algebras. Holds its endpoints by reference.
class PieceBoolHom {
 public:
  /// Throws UsageError unless every block maps homomorphically into a
  /// single block of the target.
  PieceBoolHom(const PieceBool& source, const PieceBool& target, PosetMap map);
  static PieceBoolHom identity(const PieceBool& p);
  static PieceBoolHom compose(const PieceBoolHom& after, const PieceBoolHom& before);

  const PieceBool& source() const { return *source_; }
  const PieceBool& target() const { return *target_; }
  const PosetMap& map() const { return map_; }
  std::size_t operator()(std::size_t x) const { return map_[x]; }
  bool is_iso() const;

 private:
  const PieceBool* source_;
  const PieceBool* target_;
  PosetMap map_;
};

/// Direct image B -> f[B] between the subalgebra domains.
PosetMap sub_on_hom(const PieceBoolHom& f, const SubDomain& s, const SubDomain& t);

struct TransitiveJoinedReport {
  bool transitive = true;
  bool joined = true;
  std::optional<std::array<std::size_t, 3>> intransitive;  ///< x <= y <= z, not x <= z
  std::optional<std::pair<std::size_t, std::size_t>> unjoined;  ///< no least upper bound
  bool verdict() const { return transitive && joined; }
};

/// Union order: x <= y iff some block holds both with x below y.
bool union_leq(const PieceBool& p, std::size_t x, std::size_t y);
TransitiveJoinedReport is_transitive_joined(const PieceBool& p);

/// Visits isomorphisms P -> Q (as carrier maps); return false to stop.
void for_each_pba_iso(const PieceBool& p, const PieceBool& q,
                      const std::function<bool(const PosetMap&)>& visit);
std::optional<PosetMap> pba_iso_search(const PieceBool& p, const PieceBool& q);

/// Every isomorphism f: P -> Q whose direct image on subalgebras is phi.
/// Throws UsageError if phi is not an order isomorphism.
std::vector<PosetMap> lift_domain_iso(const PieceBool& p, const SubDomain& sp, const PieceBool& q,
                                      const SubDomain& sq, const PosetMap& phi);

}  // namespace pbdom
