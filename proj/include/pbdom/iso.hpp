#pragma once

#include "pbdom/poset.hpp"

#include <functional>
#include <limits>
#include <optional>
#include <vector>

namespace pbdom {

/// Backtracking order-isomorphism search. Candidates are pruned by colour
/// refinement over the cover graph (seeded with up/down-set sizes and chain
/// lengths); elements are matched in an order that keeps each new element
/// adjacent to already matched ones where possible.
///
/// `visit` is called for every isomorphism found, in a fixed order; return
/// false from it to stop the search.
void for_each_poset_iso(const FinPoset& p, const FinPoset& q,
                        const std::function<bool(const PosetMap&)>& visit);

/// First isomorphism in search order, if any.
std::optional<PosetMap> poset_iso(const FinPoset& p, const FinPoset& q);

std::vector<PosetMap> all_poset_isos(const FinPoset& p, const FinPoset& q,
                                     std::size_t limit = std::numeric_limits<std::size_t>::max());

}  // namespace pbdom
