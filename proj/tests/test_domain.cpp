#include "support.hpp"

#include "pbdom/corpus.hpp"
#include "pbdom/domain.hpp"
#include "pbdom/enumerate.hpp"
#include "pbdom/lattice.hpp"

#include <gtest/gtest.h>

using namespace pbdom;
using namespace pbtest;

namespace {

// Lattice of flats of the uniform matroid U(3,4): bottom, four points, six
// lines, top. Geometric, and no line is a modular coatom.
FinPoset u34_flats() {
  std::vector<std::string> ids{"0", "1", "2", "3", "4"};
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 1; i <= 4; ++i) covers.emplace_back("0", std::to_string(i));
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      std::string line = std::to_string(i) + std::to_string(j);
      ids.push_back(line);
      covers.emplace_back(std::to_string(i), line);
      covers.emplace_back(std::to_string(j), line);
      covers.emplace_back(line, "T");
    }
  ids.push_back("T");
  return FinPoset(ids, covers);
}

}  // namespace

TEST(Def31, Examples) {
  EXPECT_TRUE(check_def31(partition_lattice(3).dual()).verdict);
  FinPoset vee({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}});
  EXPECT_TRUE(check_def31(vee).verdict);
  auto r = check_def31(boolean_lattice(2));
  EXPECT_FALSE(r.verdict);
  EXPECT_FALSE(r.condition("4").holds);
  EXPECT_TRUE(r.condition("1").holds);
  EXPECT_TRUE(r.condition("3").holds);
}

TEST(Def31, MissingMeetsFailConditionTwo) {
  auto r = check_def31(antichain(2));
  EXPECT_FALSE(r.verdict);
  EXPECT_FALSE(r.condition("2").holds);
}

TEST(Prop42, Examples) {
  auto r = check_prop42(partition_lattice(4).dual());
  EXPECT_TRUE(r.verdict);
  FinPoset d4 = partition_lattice(4).dual();
  EXPECT_EQ(d4.lower_covers(*d4.top()).size(), 6u);
  EXPECT_TRUE(check_prop42(partition_lattice(5).dual()).verdict);
}

TEST(Prop42, CogeometricIdealWithoutModularAtom) {
  FinPoset flats = u34_flats();
  ASSERT_TRUE(is_geometric(flats));
  for (std::size_t c : coatoms(flats)) EXPECT_FALSE(is_modular_element(flats, c));
  auto r = check_prop42(flats.dual());
  EXPECT_FALSE(r.verdict);
  EXPECT_FALSE(r.condition("4'").holds);
  EXPECT_FALSE(r.condition("4'").witnesses.empty());
  EXPECT_FALSE(check_def31(flats.dual()).verdict);
}

TEST(Agree, SmallPosetsPartitionDualsBooleanLattices) {
  for (int k = 1; k <= 6; ++k)
    for (const auto& p : enumerate_posets(k)) EXPECT_NO_THROW(agree(p));
  for (int n = 1; n <= 5; ++n) EXPECT_TRUE(agree(partition_lattice(n).dual()));
  EXPECT_TRUE(agree(boolean_lattice(1)));
  for (int d = 2; d <= 4; ++d) EXPECT_FALSE(agree(boolean_lattice(d)));
  for (std::uint64_t seed = 0; seed < 30; ++seed) EXPECT_NO_THROW(agree(random_lattice(seed)));
}

TEST(Agree, SubOfEveryCorpusPbaIsADomain) {
  for (const auto& [name, p] : corpus_pbas()) EXPECT_TRUE(agree(sub(p).poset)) << name;
}

TEST(Prop42, CoverCountsInSubOfSixteenElementAlgebra) {
  FinPoset s = sub(boolean_pba(4)).poset;
  const std::size_t want[] = {0, 1, 3, 6};
  for (std::size_t x = 0; x < s.size(); ++x) {
    std::size_t h = height(s, x);
    if (h >= 1 && h <= 3) {
      EXPECT_EQ(s.lower_covers(x).size(), want[h]);
    }
  }
}

TEST(Def31, TriangleDomainPassesBothRoutes) {
  // A domain per the definition that is not the subalgebra domain of any
  // piecewise Boolean algebra; see the diagram tests.
  FinPoset t = triangle_domain();
  EXPECT_TRUE(check_def31(t).verdict);
  EXPECT_TRUE(check_prop42(t).verdict);
}
