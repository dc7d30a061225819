#pragma once

#include "pbdom/orient.hpp"
#include "pbdom/pba.hpp"
#include "pbdom/poset.hpp"

#include <string>
#include <vector>

namespace pbdom {

struct NamedPba {
  std::string name;
  PieceBool pba;
};

/// Two 8-element blocks sharing {0, 1, y, ny}: an orthomodular lattice.
PieceBool oml_pair();
/// Same shape as oml_pair, but the shared element is an atom of the first
/// block and a coatom of the second. Its subalgebra domain is isomorphic to
/// that of oml_pair although the two algebras are not.
PieceBool twisted_pair();
/// Three blocks, two of them sharing a four-element subalgebra in a way that
/// breaks transitivity of the union order.
PieceBool intransitive_triple();

/// Boolean algebras with 1-4 atoms, glued and relabelled blocks, the three
/// constructions above.
std::vector<NamedPba> corpus_pbas();

struct CorpusHom {
  std::string name;
  std::size_t source;  ///< index into the PBA list
  std::size_t target;
  PosetMap map;
};

/// Identities, an isomorphism, block inclusions and block collapses between
/// members of corpus_pbas() (indices refer to that list).
std::vector<CorpusHom> corpus_homs(const std::vector<NamedPba>& pbas);

struct NamedDomain {
  std::string name;
  FinPoset poset;
};

/// sub(P) for every corpus PBA, duals of partition lattices on 1-4 points,
/// and every domain among the posets with at most max_size elements.
std::vector<NamedDomain> corpus_domains(const std::vector<NamedPba>& pbas, int max_size);

/// Oriented-domain morphism on the dual of the 3-point partition lattice
/// sending every atom to the first atom and the top to itself. It meets the
/// atom, modularity and orientation conditions, yet no diagram morphism
/// extends it.
struct OrientedExample {
  FinPoset base;
  Orientation orientation;
  OrientedDomainMorphism morphism;
};
OrientedExample atom_merging_example();

/// Three 8-element blocks pairwise sharing one atom. Not a valid piecewise
/// Boolean algebra: the three shared atoms are pairwise commeasurable but lie
/// in no common block.
PbaSpec triangle_gluing_spec();
/// The poset such a gluing would have as its subalgebra domain: a bottom,
/// three shared and three private atoms, three tops.
FinPoset triangle_domain();

}  // namespace pbdom
