#pragma once

#include "pbdom/batch.hpp"
#include "pbdom/corpus.hpp"
#include "pbdom/enumerate.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pbdom {

struct VerifyOptions {
  int max_size = kMaxEnumeratedPoset;  ///< largest enumerated poset
  std::uint64_t seed = 0;               ///< random lattice seed
  Exec exec = Exec::parallel;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = true;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::vector<std::string> witnesses;  ///< first few failures
  double seconds = 0;
};

/// Corpus shared by the drivers below; building it once saves the
/// enumeration cost when several criteria run together.
struct Corpus {
  std::vector<NamedPba> pbas;
  std::vector<CorpusHom> homs;
  std::vector<NamedDomain> domains;
  /// (domain index, orientation) for every orientation of every domain.
  std::vector<std::pair<std::size_t, Orientation>> oriented;
};
Corpus build_corpus(const VerifyOptions& opt);

CriterionResult check_partition_facts();
CriterionResult check_modularity_facts();
CriterionResult check_subalgebra_correspondence(int max_atoms = 5);
CriterionResult check_recognizer_agreement(const VerifyOptions& opt);
CriterionResult check_height_cover_counts();
CriterionResult check_reconstruction(const Corpus& c, Exec exec);
CriterionResult check_equivalence(const Corpus& c, Exec exec);
CriterionResult check_lifting(const Corpus& c, Exec exec);
CriterionResult check_orientation_iso(const Corpus& c, Exec exec);
CriterionResult check_colimit_injectivity(const Corpus& c, Exec exec);

std::vector<CriterionResult> verify_all(const VerifyOptions& opt);

}  // namespace pbdom
