#include "support.hpp"

#include "pbdom/error.hpp"
#include "pbdom/iso.hpp"
#include "pbdom/lattice.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

using namespace pbdom;
using namespace pbtest;

TEST(FinBool, KeysRoundTrip) {
  FinBool b = letters(4);
  for (Elem x = 0; x <= b.one(); ++x) EXPECT_EQ(b.parse_key(b.key(x)), x);
  EXPECT_EQ(b.key(0), "");
  EXPECT_EQ(b.key(b.one()), "a,b,c,d");
  EXPECT_THROW(b.parse_key("a,z"), UsageError);
  EXPECT_THROW(FinBool({}), UsageError);
  EXPECT_THROW(FinBool({"a", "a"}), UsageError);
}

TEST(FinBool, LabelWithCommaParsesAsAtom) {
  FinBool b({"{0,1}", "x"});
  EXPECT_EQ(b.parse_key("{0,1}"), b.atom(0));
}

TEST(BoolHom, ComposeInverseAndChecks) {
  FinBool a = letters(2), b = letters(3);
  BoolHom f(a, b, {0b011, 0b100});  // a -> a+b, b -> c
  EXPECT_TRUE(f.injective());
  EXPECT_EQ(f(0b11), 0b111u);
  EXPECT_THROW(BoolHom(a, b, {0b011, 0b001}), UsageError);
  EXPECT_THROW(BoolHom(a, b, {0b011}), UsageError);

  BoolHom swap(b, b, {0b010, 0b100, 0b001});
  BoolHom back = BoolHom::inverse(swap);
  EXPECT_EQ(BoolHom::compose(back, swap), BoolHom::identity(b));
  EXPECT_THROW(BoolHom::inverse(f), UsageError);
  EXPECT_THROW(BoolHom::compose(f, f), UsageError);
}

TEST(BoolHom, PreservesOperationsOnRandomMaps) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + trial % 4, m = 1 + (trial / 4) % 4;
    FinBool a = letters(n), b = letters(m);
    // random map of the target atoms onto the source atoms defines a hom
    std::vector<Elem> img(n, 0);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < m; ++t) img[pick(rng)] |= b.atom(t);
    BoolHom f(a, b, img);
    for (Elem x = 0; x <= a.one(); ++x) {
      EXPECT_EQ(f(a.neg(x)), b.neg(f(x)));
      for (Elem y = 0; y <= a.one(); ++y) {
        EXPECT_EQ(f(x & y), f(x) & f(y));
        EXPECT_EQ(f(x | y), f(x) | f(y));
      }
    }
  }
}

TEST(Subalgebras, CountsMatchClosureEnumeration) {
  EXPECT_EQ(subalgebras(letters(1)).subs.size(), 1u);
  EXPECT_EQ(subalgebras(letters(2)).subs.size(), 2u);
  EXPECT_EQ(subalgebras(letters(3)).subs.size(), 5u);
  for (unsigned n = 1; n <= 4; ++n)
    EXPECT_EQ(subalgebras(letters(static_cast<int>(n))).subs.size(), brute_subalgebra_count(n));
}

TEST(Subalgebras, DualToPartitionLattice) {
  for (int n = 1; n <= 5; ++n) {
    auto lat = subalgebras(letters(n));
    auto iso = poset_iso(lat.poset, partition_lattice(n).dual());
    EXPECT_TRUE(iso.has_value()) << n;
    EXPECT_EQ(lat.subs[*lat.poset.bottom()], Subalgebra::trivial(lat.base));
    EXPECT_EQ(lat.subs[*lat.poset.top()], Subalgebra::whole(lat.base));
  }
}

TEST(Subalgebras, CapAndEnvironmentOverride) {
  EXPECT_THROW(subalgebras(letters(7)), ResourceError);
  ::setenv("PBDOM_MAX_ATOMS", "3", 1);
  EXPECT_THROW(subalgebras(letters(4)), ResourceError);
  EXPECT_NO_THROW(subalgebras(letters(3)));
  ::setenv("PBDOM_MAX_ATOMS", "50", 1);  // cannot raise the cap
  EXPECT_EQ(subalgebra_atom_cap(), kMaxSubalgebraAtoms);
  ::unsetenv("PBDOM_MAX_ATOMS");
}

TEST(SubalgebraOfPartition, Examples) {
  FinBool b = letters(3);
  auto all = subalgebra_of_partition(b, Partition::parse("1/2/3"));
  EXPECT_EQ(all.size(), 8u);
  auto two = subalgebra_of_partition(b, Partition::parse("123"));
  EXPECT_EQ(std::set<Elem>(two.begin(), two.end()), (std::set<Elem>{0, b.one()}));
  auto ab_c = subalgebra_of_partition(b, Partition::parse("12/3"));
  EXPECT_EQ(std::set<Elem>(ab_c.begin(), ab_c.end()), (std::set<Elem>{0, 0b011, 0b100, 0b111}));
  EXPECT_THROW(subalgebra_of_partition(b, Partition::parse("12")), UsageError);
}

TEST(SubalgebraOfPartition, ReversesRefinement) {
  for (int n = 1; n <= 5; ++n) {
    FinBool b = letters(n);
    auto ps = set_partitions(n);
    for (const auto& p : ps)
      for (const auto& q : ps) {
        auto sp = Subalgebra::from_partition(b, p), sq = Subalgebra::from_partition(b, q);
        EXPECT_EQ(p.refines(q), sq.included_in(sp));
      }
  }
}

TEST(SubalgebraLattice, JoinAndMeetAgreeWithOrder) {
  auto lat = subalgebras(letters(4));
  for (std::size_t i = 0; i < lat.subs.size(); ++i)
    for (std::size_t j = 0; j < lat.subs.size(); ++j) {
      EXPECT_EQ(lat.index_of(sub_join(lat.subs[i], lat.subs[j])), join(lat.poset, i, j));
      EXPECT_EQ(lat.index_of(sub_meet(lat.subs[i], lat.subs[j])), meet(lat.poset, i, j));
    }
}

TEST(DirectImage, Examples) {
  FinBool two = letters(2), three = letters(3);
  for (const auto& s : subalgebras(three).subs) EXPECT_EQ(direct_image(BoolHom::identity(three), s), s);
  BoolHom f(two, three, {0b011, 0b100});
  auto img = direct_image(f, Subalgebra::whole(two));
  auto e = img.elements();
  EXPECT_EQ(std::set<Elem>(e.begin(), e.end()), (std::set<Elem>{0, 0b011, 0b100, 0b111}));
  BoolHom onto(three, two, {0b01, 0b10, 0});
  EXPECT_EQ(direct_image(onto, Subalgebra::whole(three)), Subalgebra::whole(two));
}

TEST(LiftSubIso, FourElementHasTwoLifts) {
  auto lat = subalgebras(FinBool({"p", "np"}));
  auto lifts = all_sub_iso_lifts(lat, lat, identity_map(lat.subs.size()));
  ASSERT_EQ(lifts.size(), 2u);
  EXPECT_EQ(lifts[0], BoolHom::identity(lat.base));
  EXPECT_EQ(lifts[1].atom_images(), (std::vector<Elem>{0b10, 0b01}));
  EXPECT_EQ(lift_sub_iso(lat, lat, identity_map(2), std::pair<Elem, Elem>{1, 2}), lifts[1]);
}

TEST(LiftSubIso, AtomThreeCycleIsUnique) {
  FinBool b = letters(3);
  auto lat = subalgebras(b);
  BoolHom cyc(b, b, {0b010, 0b100, 0b001});
  PosetMap psi(lat.subs.size());
  for (std::size_t i = 0; i < psi.size(); ++i) psi[i] = lat.index_of(direct_image(cyc, lat.subs[i]));
  EXPECT_EQ(lift_sub_iso(lat, lat, psi), cyc);
  // brute force: exactly one of the six atom permutations induces psi
  std::size_t hits = 0;
  for (const auto& g : all_bool_isos(b, b)) {
    bool same = true;
    for (std::size_t i = 0; i < psi.size(); ++i)
      if (lat.index_of(direct_image(g, lat.subs[i])) != psi[i]) same = false;
    hits += same;
  }
  EXPECT_EQ(hits, 1u);
  EXPECT_EQ(all_sub_iso_lifts(lat, lat, identity_map(5)).size(), 1u);
}

TEST(BoolIsoSearch, Examples) {
  EXPECT_TRUE(bool_iso_search(letters(3), FinBool({"x", "y", "z"})).has_value());
  EXPECT_FALSE(bool_iso_search(letters(2), letters(3)).has_value());
  EXPECT_EQ(*bool_iso_search(letters(3), letters(3)), BoolHom::identity(letters(3)));
  EXPECT_EQ(all_bool_isos(letters(3), letters(3)).size(), 6u);
}
