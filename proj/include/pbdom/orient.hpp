#pragma once

#include "pbdom/diagram.hpp"
#include "pbdom/orientation.hpp"
#include "pbdom/pba.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pbdom {

inline constexpr std::size_t kMaxOrientedAtoms = 20;

/// All 2^k orientations of a domain with k atoms: atom i (in index order)
/// gets "np" iff bit i of the counter is set. Maximal atoms are flagged.
/// Throws UsageError if l has no bottom, ResourceError above kMaxOrientedAtoms.
std::vector<Orientation> enumerate_orientations(const FinPoset& l);

/// Orientation of sub(P): for each nonmaximal atom B = {0,x,nx,1}, the one of
/// x, nx that is an atom of the first cover in each cover group; values are
/// carrier ids. Throws LogicError if the groups disagree or no such element
/// exists. Maximal atoms get the element with the lower index, flagged.
Orientation orient_sub(const PieceBool& p, const SubDomain& s);

/// Atoms B of sub(P) for which "x is an atom of every cover C" fails (some
/// cover has neither or the covers pick different elements).
std::vector<std::string> cover_dependent_atoms(const PieceBool& p, const SubDomain& s);

/// functor_from_domain, plus a check that flipping any atom edge breaks
/// either the orientation rule or the diagram axioms.
PBDiagram extend_to_diagram(const FinPoset& l, const Orientation& o);

/// For each nonmaximal atom a, the key of the element of F(a) sent to an atom
/// at the first cover of each cover group. Throws LogicError when that
/// element is missing, not unique, or differs between groups.
Orientation restrict_to_orientation(const PBDiagram& f);

/// True if every algebra of F is canonical_algebra of its base element.
bool is_canonical(const PBDiagram& f);

/// F transported onto the canonical algebras. `iso` is F -> diagram with
/// identity base map; it sends b_a (from restrict_to_orientation) to "p".
struct Normalized {
  PBDiagram diagram;
  DiagramMorphism iso;
};
Normalized normalize(const PBDiagram& f);

/// m: F -> G carried to nf.diagram -> ng.diagram.
DiagramMorphism transport(const DiagramMorphism& m, const Normalized& nf, const Normalized& ng);

/// (phi, eta) with eta given on atoms: eta[a]: F(a) -> F'(phi(a)) for the
/// canonical algebras.
struct OrientedDomainMorphism {
  PosetMap phi;
  std::map<std::size_t, BoolHom> eta;

  bool operator==(const OrientedDomainMorphism&) const = default;
};

/// Why m is not a morphism of oriented domains (l, o) -> (l2, o2), or nullopt.
std::optional<std::string> oriented_defect(const FinPoset& l, const Orientation& o,
                                           const FinPoset& l2, const Orientation& o2,
                                           const OrientedDomainMorphism& m);

/// Keeps phi and the atom components of m.
OrientedDomainMorphism restrict_morphism(const DiagramMorphism& m, const PBDiagram& f);

/// Extends the atom components to all elements: for b' = F(a <= x)(b),
/// eta_x(b') = G(phi a <= phi x)(eta_a(b)). F and G must be canonical.
/// Throws LogicError if eta_x is not well defined, not a homomorphism, or the
/// result is not natural.
DiagramMorphism extend_morphism(const OrientedDomainMorphism& m, const PBDiagram& f, const PBDiagram& g);

/// restrict(extend(l, o)) == o. Throws LogicError otherwise.
void verify_orientation_roundtrip(const FinPoset& l, const Orientation& o);
/// extend(restrict(F)) == F, after normalizing F if it is not canonical.
void verify_diagram_orientation_roundtrip(const PBDiagram& f);
/// restrict(extend(m)) == m.
void verify_oriented_morphism_roundtrip(const OrientedDomainMorphism& m, const PBDiagram& f,
                                        const PBDiagram& g);
/// extend(restrict(m)) == m, for canonical F and G.
void verify_diagram_morphism_roundtrip(const DiagramMorphism& m, const PBDiagram& f, const PBDiagram& g);

}  // namespace pbdom
