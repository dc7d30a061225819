#include "support.hpp"

#include "pbdom/corpus.hpp"
#include "pbdom/diagram.hpp"
#include "pbdom/error.hpp"
#include "pbdom/lattice.hpp"
#include "pbdom/orient.hpp"

#include <gtest/gtest.h>

using namespace pbdom;
using namespace pbtest;

namespace {

FinPoset vee() { return FinPoset({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}}); }

OrientedDomainMorphism identity_oriented(const FinPoset& l) {
  OrientedDomainMorphism m;
  m.phi = identity_map(l.size());
  for (std::size_t a : atoms(l)) m.eta.emplace(a, BoolHom::identity(canonical_algebra(l, a)));
  return m;
}

}  // namespace

TEST(Enumerate, OrientationCounts) {
  EXPECT_EQ(enumerate_orientations(FinPoset({"0"}, {})).size(), 1u);
  EXPECT_EQ(enumerate_orientations(vee()).size(), 4u);
  EXPECT_EQ(enumerate_orientations(partition_lattice(3).dual()).size(), 8u);
  auto os = enumerate_orientations(vee());
  EXPECT_EQ(os[0].maximal_defaults.size(), 2u);
}

TEST(Equality, IgnoresMaximalDefaults) {
  auto os = enumerate_orientations(vee());
  for (const auto& o : os) EXPECT_EQ(o, os.front());
  auto d3 = enumerate_orientations(partition_lattice(3).dual());
  EXPECT_FALSE(d3[0] == d3[1]);
}

TEST(OrientSub, EightElementAlgebra) {
  auto p = boolean_pba(3);
  auto s = sub(p);
  Orientation o = orient_sub(p, s);
  EXPECT_TRUE(o.maximal_defaults.empty());
  ASSERT_EQ(o.choice.size(), 3u);
  for (const auto& [atom, b] : o.choice) {
    // b is the atom of P inside B = {0, x, nx, 1}
    EXPECT_EQ(b.size(), 1u) << atom;
  }
  EXPECT_TRUE(cover_dependent_atoms(p, s).empty());
}

TEST(OrientSub, MaximalAtomsFlagged) {
  auto p4 = boolean_pba(2);
  Orientation o = orient_sub(p4, sub(p4));
  EXPECT_EQ(o.maximal_defaults.size(), 1u);
  auto g = glued_pair();
  EXPECT_EQ(orient_sub(g, sub(g)).maximal_defaults.size(), 2u);
}

TEST(OrientSub, CoverIndependentBelowFourAtoms) {
  for (const auto& [name, p] : corpus_pbas()) {
    if (name == "twisted-pair") continue;
    auto s = sub(p);
    EXPECT_NO_THROW(orient_sub(p, s)) << name;
    if (name != "bool4" && name != "intransitive") {
      EXPECT_TRUE(cover_dependent_atoms(p, s).empty()) << name;
    }
  }
}

TEST(OrientSub, SplitPairsInSixteenElementAlgebra) {
  // B = {0, a+b, c+d, 1} lies below ab/c/d (where a+b is an atom) and
  // below a/b/cd (where c+d is), so the element depends on the cover.
  auto p = boolean_pba(4);
  auto s = sub(p);
  auto dep = cover_dependent_atoms(p, s);
  EXPECT_EQ(dep.size(), 3u);
  for (const auto& id : dep) {
    std::size_t b = s.poset.index(id);
    std::size_t in_c = 0;
    for (std::size_t c : s.poset.upper_covers(b)) in_c += s.carrier[c].count() == 8;
    EXPECT_EQ(s.poset.upper_covers(b).size(), 2u) << id;
    EXPECT_EQ(in_c, 2u) << id;
  }
}

TEST(OrientSub, TwistedPairDependsOnCover) {
  // s is an atom of the first block and a coatom of the second
  auto p = twisted_pair();
  auto s = sub(p);
  EXPECT_FALSE(cover_dependent_atoms(p, s).empty());
  EXPECT_THROW(orient_sub(p, s), LogicError);
}

TEST(ExtendRestrict, RoundTripOnSmallDomains) {
  auto pbas = corpus_pbas();
  for (const auto& [name, l] : corpus_domains(pbas, 5))
    for (const auto& o : enumerate_orientations(l)) {
      PBDiagram f = extend_to_diagram(l, o);
      EXPECT_EQ(restrict_to_orientation(f), o) << name;
      EXPECT_NO_THROW(verify_diagram_orientation_roundtrip(f)) << name;
    }
  EXPECT_TRUE(restrict_to_orientation(extend_to_diagram(FinPoset({"0"}, {}), Orientation{})).choice.empty());
}

TEST(ExtendRestrict, PbooldMatchesOrientSub) {
  auto p = boolean_pba(3);
  auto d = pboold(p);
  EXPECT_EQ(restrict_to_orientation(d.diagram), orient_sub(p, d.sub));
}

TEST(Normalize, TransportsToCanonicalAlgebras) {
  for (const auto& [name, p] : corpus_pbas()) {
    if (name == "twisted-pair") continue;
    auto d = pboold(p);
    Normalized n = normalize(d.diagram);
    EXPECT_TRUE(is_canonical(n.diagram)) << name;
    EXPECT_FALSE(morphism_defect(d.diagram, n.diagram, n.iso).has_value()) << name;
    for (const auto& [atom, b] : restrict_to_orientation(n.diagram).choice) EXPECT_EQ(b, "p") << name;
  }
}

TEST(ExtendMorphism, Identity) {
  FinPoset l = partition_lattice(3).dual();
  for (const auto& o : enumerate_orientations(l)) {
    PBDiagram f = extend_to_diagram(l, o);
    auto m = identity_oriented(l);
    EXPECT_FALSE(oriented_defect(l, o, l, o, m).has_value());
    EXPECT_EQ(extend_morphism(m, f, f), identity_morphism(f));
  }
}

TEST(ExtendMorphism, AtomCollapseToBottom) {
  FinPoset l = vee();
  FinPoset l2({"0", "a"}, {{"0", "a"}});
  auto o = enumerate_orientations(l).front();
  auto o2 = enumerate_orientations(l2).front();
  OrientedDomainMorphism m;
  m.phi = {0, 1, 0};
  FinBool c({"p", "np"}), two({"*"});
  m.eta.emplace(1, BoolHom::identity(c));
  m.eta.emplace(2, BoolHom(c, two, {1, 0}));
  ASSERT_FALSE(oriented_defect(l, o, l2, o2, m).has_value());
  PBDiagram f = extend_to_diagram(l, o), g = extend_to_diagram(l2, o2);
  DiagramMorphism d = extend_morphism(m, f, g);
  EXPECT_EQ(d.eta[2].target().size(), 2u);
  EXPECT_FALSE(morphism_defect(f, g, d).has_value());
  EXPECT_EQ(restrict_morphism(d, f), m);
  EXPECT_NO_THROW(verify_diagram_morphism_roundtrip(d, f, g));
}

TEST(ExtendMorphism, HeightTwoPreservesMeetsInEveryCase) {
  // x = a v a' in dual Pi_3, with phi permuting the atoms: eta at the top is
  // checked on every pair of elements, covering the four cases of where the
  // pair comes from (same atom, two atoms, atom and complement, general).
  FinPoset l = partition_lattice(3).dual();
  auto at = atoms(l);
  Orientation o;
  for (std::size_t a : at) o.choice[l.id(a)] = "p";
  OrientedDomainMorphism m = identity_oriented(l);
  m.phi[at[0]] = at[1];
  m.phi[at[1]] = at[2];
  m.phi[at[2]] = at[0];
  ASSERT_FALSE(oriented_defect(l, o, l, o, m).has_value());
  PBDiagram f = extend_to_diagram(l, o);
  DiagramMorphism d = extend_morphism(m, f, f);
  const BoolHom& top = d.eta[*l.top()];
  const FinBool& b = f.algebra(*l.top());
  for (Elem x = 0; x <= b.one(); ++x)
    for (Elem y = 0; y <= b.one(); ++y) EXPECT_EQ(top(x & y), top(x) & top(y));
  EXPECT_TRUE(top.injective());
  EXPECT_NO_THROW(verify_oriented_morphism_roundtrip(m, f, f));
}

TEST(OrientedDefect, FlagsBrokenConditions) {
  FinPoset l = partition_lattice(3).dual();
  auto o = enumerate_orientations(l).front();
  auto m = identity_oriented(l);
  m.phi[*l.top()] = *l.bottom();
  EXPECT_TRUE(oriented_defect(l, o, l, o, m).has_value());
  m = identity_oriented(l);
  std::size_t a = atoms(l).front();
  FinBool c = canonical_algebra(l, a);
  m.eta.erase(a);
  m.eta.emplace(a, BoolHom(c, c, {0b10, 0b01}));  // swaps p and np
  EXPECT_TRUE(oriented_defect(l, o, l, o, m).has_value());
}

TEST(Counterexample, AtomMergingHasNoExtension) {
  auto ex = atom_merging_example();
  EXPECT_FALSE(oriented_defect(ex.base, ex.orientation, ex.base, ex.orientation, ex.morphism).has_value());
  PBDiagram f = extend_to_diagram(ex.base, ex.orientation);
  EXPECT_THROW(extend_morphism(ex.morphism, f, f), LogicError);
}
