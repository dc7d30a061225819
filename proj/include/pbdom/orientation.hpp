#pragma once

#include "pbdom/poset.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace pbdom {

/// For each atom a of a domain, the designated element b_a of F(a), named by
/// its key in F(a) ("p" or "np" for the canonical algebra). Atoms that are
/// maximal carry an arbitrary choice and are listed in maximal_defaults;
/// equality ignores their choice.
struct Orientation {
  std::map<std::string, std::string> choice;
  std::set<std::string> maximal_defaults;

  bool operator==(const Orientation& o) const;
};

/// Upper covers of the atom `a`, grouped by the equivalence generated by
/// "have a common upper bound". Each group is sorted by index; groups are
/// ordered by their first element, which serves as the group's reference
/// cover.
std::vector<std::vector<std::size_t>> cover_components(const FinPoset& l, std::size_t a);

}  // namespace pbdom
