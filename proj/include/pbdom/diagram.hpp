#pragma once

#include "pbdom/boolalg.hpp"
#include "pbdom/orientation.hpp"
#include "pbdom/pba.hpp"
#include "pbdom/poset.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pbdom {

/// A Boolean algebra at every element of a domain and an injective
/// homomorphism along every cover. Shape is checked on construction;
/// the diagram axioms are checked by check_diagram().
class PBDiagram {
 public:
  /// `edges[k]` belongs to `base.cover_pairs()[k]`. Throws UsageError if the
  /// counts or the endpoint algebras do not line up.
  PBDiagram(FinPoset base, std::vector<FinBool> algebras, std::vector<BoolHom> edges);

  const FinPoset& base() const { return base_; }
  const FinBool& algebra(std::size_t x) const { return algebras_[x]; }
  const std::vector<FinBool>& algebras() const { return algebras_; }
  const std::vector<BoolHom>& edges() const { return edges_; }
  const BoolHom& edge(std::size_t lo, std::size_t hi) const;
  /// Composite along some chain of covers from x up to y (identity if x == y).
  /// Throws UsageError unless x <= y.
  BoolHom hom(std::size_t x, std::size_t y) const;

  bool operator==(const PBDiagram& o) const;

 private:
  FinPoset base_;
  std::vector<FinBool> algebras_;
  std::vector<BoolHom> edges_;
  std::map<FinPoset::Cover, std::size_t> edge_index_;
};

struct DiagramCheck {
  bool ok = true;
  std::string condition;  ///< injective, commutation, subobjects
  std::string detail;
};

/// Injective edges, commutation over all pairs of cover paths, and for each y
/// the map from the ideal of y to Sub(F(y)) an order isomorphism.
DiagramCheck check_diagram(const PBDiagram& f);

/// The algebra a domain element is realized by: {"*"} at the bottom,
/// {"p","np"} at atoms, and above that the modular atoms of the ideal.
FinBool canonical_algebra(const FinPoset& l, std::size_t x);

/// For x of height >= 2, the isomorphism from the ideal of x onto the
/// subalgebras of canonical_algebra(l, x): the subalgebra for z consists of
/// the sets S of modular atoms whose split, (join S) meet (join of the rest),
/// lies below z. Also defined (trivially) at heights 0 and 1.
std::map<std::size_t, Subalgebra> canonical_alpha(const FinPoset& l, std::size_t x);

/// The diagram over a domain fixed by an orientation: edges out of atoms send
/// b_a to an atom at the first cover of each group of covers (groups as in
/// cover_components) and are propagated to the other covers through common
/// upper bounds. Throws UsageError if l is not a domain or the orientation
/// misses an atom, LogicError if the result is not a valid diagram.
PBDiagram functor_from_domain(const FinPoset& l, const Orientation& o);

struct Colimit {
  PieceBool pba;
  /// cocone[x][e]: carrier element of the class of e in F(x).
  std::vector<std::vector<std::size_t>> cocone;
};

/// Disjoint union of the algebras modulo the equivalence generated by the
/// edges; blocks are the images of maximal elements. Throws LogicError if a
/// cocone map is not injective or the quotient is not a piecewise Boolean
/// algebra.
Colimit colim(const PBDiagram& f);

/// (phi, eta): monotone map of bases and eta[x]: F(x) -> G(phi(x)).
struct DiagramMorphism {
  PosetMap phi;
  std::vector<BoolHom> eta;

  bool operator==(const DiagramMorphism&) const = default;
};

/// Why m is not a morphism F -> G, or nullopt.
std::optional<std::string> morphism_defect(const PBDiagram& f, const PBDiagram& g,
                                           const DiagramMorphism& m);
DiagramMorphism identity_morphism(const PBDiagram& f);
DiagramMorphism compose(const DiagramMorphism& after, const DiagramMorphism& before);

struct PbooldDiagram {
  SubDomain sub;
  PBDiagram diagram;
  /// carrier[B][e]: the element of P named by e in F(B).
  std::vector<std::vector<std::size_t>> carrier;

  /// The element of F(B) naming the carrier element c.
  std::optional<Elem> elem(std::size_t b, std::size_t c) const;
};

/// Sub(P) with each subalgebra as its own algebra (atoms labelled by their
/// carrier ids) and inclusions as edges.
PbooldDiagram pboold(const PieceBool& p);
/// phi = sub_on_hom(f), eta_B = f restricted to B.
DiagramMorphism pboold_on_hom(const PieceBoolHom& f, const PbooldDiagram& s, const PbooldDiagram& t);
/// Carrier map induced on colimits. Throws LogicError if not well defined.
PosetMap colim_on_morphism(const DiagramMorphism& m, const Colimit& cf, const Colimit& cg);

struct Reconstruction {
  PBDiagram diagram;
  Colimit colimit;
  SubDomain sub;
  PosetMap f;  ///< x -> p_x[F(x)]
  PosetMap g;  ///< B -> meet of {x : B inside f(x)}
};

/// Builds P = colim(functor_from_domain(l, o)) and checks that f is an order
/// isomorphism onto Sub(P) with two-sided inverse g. Throws LogicError on
/// failure.
Reconstruction reconstruct_and_verify(const FinPoset& l, const Orientation& o);

/// b -> [b] from P into colim(pboold(P)); throws LogicError unless it is an
/// isomorphism.
PosetMap verify_pba_roundtrip(const PieceBool& p);

struct DiagramUnit {
  Colimit colimit;
  PbooldDiagram pboold;
  DiagramMorphism unit;  ///< F -> pboold(colim F)
};

/// (x -> p_x[F(x)], p_x) from F into pboold(colim F); throws LogicError unless
/// it is an isomorphism of diagrams.
DiagramUnit verify_diagram_roundtrip(const PBDiagram& f);

/// Naturality of b -> [b] along f: P -> Q. Throws LogicError on failure.
void verify_pba_naturality(const PieceBoolHom& f);
/// Naturality of the unit along m: F -> G. Throws LogicError on failure.
void verify_diagram_naturality(const PBDiagram& f, const PBDiagram& g, const DiagramMorphism& m);

}  // namespace pbdom
