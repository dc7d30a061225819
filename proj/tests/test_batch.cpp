#include "support.hpp"

#include "pbdom/batch.hpp"
#include "pbdom/corpus.hpp"
#include "pbdom/verify.hpp"

#include <gtest/gtest.h>

using namespace pbdom;
using namespace pbtest;

namespace {

bool same(const std::vector<Outcome>& a, const std::vector<Outcome>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].ok != b[i].ok || a[i].kind != b[i].kind || a[i].what != b[i].what) return false;
  return true;
}

void expect_same(const CriterionResult& s, const CriterionResult& p) {
  EXPECT_EQ(s.pass, p.pass) << s.id;
  EXPECT_EQ(s.checked, p.checked) << s.id;
  EXPECT_EQ(s.failures, p.failures) << s.id;
  EXPECT_EQ(s.witnesses, p.witnesses) << s.id;
}

}  // namespace

TEST(Batch, ErrorsAreClassified) {
  auto out = run_serial(5, [](std::size_t i) {
    switch (i) {
      case 1: throw LogicError("l");
      case 2: throw UsageError("u");
      case 3: throw StructuralError("s");
      case 4: throw ResourceError("r");
      default: break;
    }
  });
  EXPECT_TRUE(out[0].ok);
  EXPECT_EQ(out[1].kind, "logic");
  EXPECT_EQ(out[2].kind, "usage");
  EXPECT_EQ(out[3].kind, "structural");
  EXPECT_EQ(out[4].kind, "resource");
  EXPECT_EQ(out[4].what, "r");
}

TEST(Batch, ParallelMatchesSerialOnCorpus) {
  VerifyOptions opt;
  opt.max_size = 5;
  Corpus c = build_corpus(opt);
  auto work = [&](std::size_t i) {
    const auto& [d, o] = c.oriented[i];
    reconstruct_and_verify(c.domains[d].poset, o);
  };
  EXPECT_TRUE(same(run_serial(c.oriented.size(), work), run_parallel(c.oriented.size(), work)));

  expect_same(check_reconstruction(c, Exec::serial), check_reconstruction(c, Exec::parallel));
  expect_same(check_equivalence(c, Exec::serial), check_equivalence(c, Exec::parallel));
  expect_same(check_lifting(c, Exec::serial), check_lifting(c, Exec::parallel));
  expect_same(check_orientation_iso(c, Exec::serial), check_orientation_iso(c, Exec::parallel));
  expect_same(check_colimit_injectivity(c, Exec::serial), check_colimit_injectivity(c, Exec::parallel));
}

TEST(Batch, RecognizerDriverMatches) {
  VerifyOptions s, p;
  s.max_size = p.max_size = 5;
  s.exec = Exec::serial;
  expect_same(check_recognizer_agreement(s), check_recognizer_agreement(p));
}
