// Inputs on which published claims about these structures fail. The tests
// pin the observed behaviour.
#include "support.hpp"

#include "pbdom/corpus.hpp"
#include "pbdom/iso.hpp"

#include <gtest/gtest.h>

using namespace pbdom;
using namespace pbtest;

TEST(Counterexample, OmlAndTwistedPairShareTheirDomain) {
  PieceBool p = oml_pair(), q = twisted_pair();
  EXPECT_FALSE(pba_iso_search(p, q).has_value());
  auto sp = sub(p), sq = sub(q);
  auto isos = all_poset_isos(sp.poset, sq.poset);
  ASSERT_FALSE(isos.empty());
  for (const auto& phi : isos) EXPECT_TRUE(lift_domain_iso(p, sp, q, sq, phi).empty());
}

TEST(Counterexample, IntransitiveTripleHasUnliftableAutomorphisms) {
  // Permuting the atoms of the 16-element block by (c e)(d f) fixes the
  // shared four-element subalgebra but would send b1 to a1+x there, while the
  // 8-element block is left alone.
  PieceBool p = intransitive_triple();
  auto s = sub(p);
  std::size_t lifted = 0, unlifted = 0;
  for (const auto& phi : all_poset_isos(s.poset, s.poset)) {
    if (lift_domain_iso(p, s, p, s, phi).empty())
      ++unlifted;
    else
      ++lifted;
  }
  EXPECT_EQ(lifted, 8u);
  EXPECT_EQ(unlifted, 8u);
}
