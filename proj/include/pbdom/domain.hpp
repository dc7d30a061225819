#pragma once

#include "pbdom/poset.hpp"

#include <string>
#include <vector>

namespace pbdom {

struct ConditionResult {
  std::string name;  ///< "1", "2", "3", "4", "4'", "4''"
  bool holds = true;
  std::string note;
  std::vector<std::string> witnesses;
};

struct DomainReport {
  std::string route;  ///< "def31" or "prop42"
  bool verdict = true;
  std::vector<ConditionResult> conditions;

  const ConditionResult& condition(const std::string& name) const;
};

/// Conditions (1)-(4): directed suprema and algebraicity (automatic for
/// finite posets), nonempty meets, and every principal ideal dual to a
/// partition lattice.
DomainReport check_def31(const FinPoset& l);

/// Conditions (1)-(3) together with (4'): every principal ideal cogeometric
/// with a modular atom when nontrivial, and (4''): an element of height
/// n <= 3 covers exactly n(n+1)/2 elements.
DomainReport check_prop42(const FinPoset& l);

/// Shared verdict of both routes. Throws LogicError if they disagree.
bool agree(const FinPoset& l);

/// check_def31(l).verdict.
bool is_domain(const FinPoset& l);

}  // namespace pbdom
