#include "pbdom/poset.hpp"

#include "pbdom/error.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace pbdom {

FinPoset::FinPoset(std::vector<std::string> ids,
                   const std::vector<std::pair<std::string, std::string>>& covers) {
  ids_ = std::move(ids);
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (ids_[i].empty()) throw StructuralError("empty element identifier");
    if (!index_.emplace(ids_[i], i).second)
      throw StructuralError("duplicate element identifier '" + ids_[i] + "'");
  }
  std::vector<Cover> idx;
  idx.reserve(covers.size());
  for (const auto& [lo, hi] : covers) {
    auto a = find(lo);
    auto b = find(hi);
    if (!a || !b)
      throw StructuralError("cover (" + lo + ", " + hi + ") names an unknown element");
    idx.emplace_back(*a, *b);
  }
  build(std::move(idx));
}

FinPoset FinPoset::from_indices(std::vector<std::string> ids, std::vector<Cover> covers) {
  FinPoset p;
  p.ids_ = std::move(ids);
  for (std::size_t i = 0; i < p.ids_.size(); ++i) {
    if (p.ids_[i].empty()) throw StructuralError("empty element identifier");
    if (!p.index_.emplace(p.ids_[i], i).second)
      throw StructuralError("duplicate element identifier '" + p.ids_[i] + "'");
  }
  for (const auto& [a, b] : covers)
    if (a >= p.ids_.size() || b >= p.ids_.size())
      throw StructuralError("cover index out of range");
  p.build(std::move(covers));
  return p;
}

FinPoset FinPoset::from_order(std::vector<std::string> ids,
                              const std::function<bool(std::size_t, std::size_t)>& leq) {
  const std::size_t n = ids.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq(a, a)) throw StructuralError("order is not reflexive at '" + ids[a] + "'");
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq(a, b) && leq(b, a))
        throw StructuralError("order is not antisymmetric on '" + ids[a] + "', '" + ids[b] + "'");
    }
  }
  std::vector<Cover> covers;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c) {
        if (c != a && c != b && leq(a, c) && leq(c, b)) cover = false;
      }
      if (cover) covers.emplace_back(a, b);
    }
  }
  FinPoset p = from_indices(std::move(ids), std::move(covers));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (p.leq(a, b) != leq(a, b)) throw StructuralError("order relation is not transitive");
  return p;
}

void FinPoset::build(std::vector<Cover> covers) {
  const std::size_t n = ids_.size();
  if (n == 0) throw StructuralError("poset has no elements");
  lower_.assign(n, {});
  upper_.assign(n, {});
  std::set<Cover> seen;
  for (const auto& c : covers) {
    if (c.first == c.second) throw StructuralError("self-cover on '" + ids_[c.first] + "'");
    if (!seen.insert(c).second)
      throw StructuralError("duplicate cover (" + ids_[c.first] + ", " + ids_[c.second] + ")");
    upper_[c.first].push_back(c.second);
    lower_[c.second].push_back(c.first);
  }
  covers_ = std::move(covers);
  for (auto& v : lower_) std::sort(v.begin(), v.end());
  for (auto& v : upper_) std::sort(v.begin(), v.end());

  // Kahn's algorithm, smallest index first, for a deterministic extension.
  std::vector<std::size_t> indeg(n);
  for (std::size_t x = 0; x < n; ++x) indeg[x] = lower_[x].size();
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t x = 0; x < n; ++x)
    if (indeg[x] == 0) ready.push(x);
  topo_.clear();
  while (!ready.empty()) {
    std::size_t x = ready.top();
    ready.pop();
    topo_.push_back(x);
    for (std::size_t y : upper_[x])
      if (--indeg[y] == 0) ready.push(y);
  }
  if (topo_.size() != n) throw StructuralError("cover relation contains a cycle");

  up_.assign(n, Bits(n));
  for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
    std::size_t x = *it;
    up_[x].set(x);
    for (std::size_t y : upper_[x]) up_[x] |= up_[y];
  }
  for (const auto& [a, b] : covers_) {
    for (std::size_t c : upper_[a]) {
      if (c != b && up_[c][b])
        throw StructuralError("cover (" + ids_[a] + ", " + ids_[b] +
                              ") is implied by other covers");
    }
  }
  down_.assign(n, Bits(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = up_[a].find_first(); b != Bits::npos; b = up_[a].find_next(b))
      down_[b].set(a);
}

std::optional<std::size_t> FinPoset::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FinPoset::index(const std::string& id) const {
  auto i = find(id);
  if (!i) throw UsageError("unknown element '" + id + "'");
  return *i;
}

bool FinPoset::covers(std::size_t lo, std::size_t hi) const {
  return std::binary_search(upper_[lo].begin(), upper_[lo].end(), hi);
}

std::vector<FinPoset::Cover> FinPoset::order() const {
  std::vector<Cover> out;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = up_[a].find_first(); b != Bits::npos; b = up_[a].find_next(b))
      out.emplace_back(a, b);
  return out;
}

std::vector<std::size_t> FinPoset::minimal() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(); ++x)
    if (lower_[x].empty()) out.push_back(x);
  return out;
}

std::vector<std::size_t> FinPoset::maximal() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(); ++x)
    if (upper_[x].empty()) out.push_back(x);
  return out;
}

std::optional<std::size_t> FinPoset::bottom() const {
  auto m = minimal();
  if (m.size() != 1) return std::nullopt;
  return m.front();
}

std::optional<std::size_t> FinPoset::top() const {
  auto m = maximal();
  if (m.size() != 1) return std::nullopt;
  return m.front();
}

FinPoset FinPoset::dual() const {
  std::vector<Cover> flipped;
  flipped.reserve(covers_.size());
  for (const auto& [a, b] : covers_) flipped.emplace_back(b, a);
  return from_indices(ids_, std::move(flipped));
}

FinPoset FinPoset::subposet(const std::vector<std::size_t>& elems) const {
  std::vector<std::string> ids;
  ids.reserve(elems.size());
  for (std::size_t e : elems) ids.push_back(ids_[e]);
  // Covers of an induced subposet: a < b with nothing of the subset between.
  Bits subset(size());
  for (std::size_t e : elems) subset.set(e);
  std::vector<Cover> covers;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    Bits above = up_[elems[i]] & subset;
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (i == j || !above[elems[j]]) continue;
      if ((above & down_[elems[j]]).count() == 2) covers.emplace_back(i, j);
    }
  }
  return from_indices(std::move(ids), std::move(covers));
}

FinPoset FinPoset::ideal(std::size_t x, std::vector<std::size_t>* embed) const {
  auto elems = members(down_[x]);
  if (embed) *embed = elems;
  return subposet(elems);
}

FinPoset FinPoset::interval(std::size_t lo, std::size_t hi, std::vector<std::size_t>* embed) const {
  auto elems = members(up_[lo] & down_[hi]);
  if (embed) *embed = elems;
  return subposet(elems);
}

std::vector<std::size_t> FinPoset::members(const Bits& b) {
  std::vector<std::size_t> out;
  out.reserve(b.count());
  for (std::size_t i = b.find_first(); i != Bits::npos; i = b.find_next(i)) out.push_back(i);
  return out;
}

bool is_monotone(const FinPoset& p, const FinPoset& q, const PosetMap& f) {
  if (f.size() != p.size()) return false;
  for (std::size_t x : f)
    if (x >= q.size()) return false;
  for (const auto& [a, b] : p.cover_pairs())
    if (!q.leq(f[a], f[b])) return false;
  return true;
}

bool is_order_iso(const FinPoset& p, const FinPoset& q, const PosetMap& f) {
  if (p.size() != q.size() || f.size() != p.size()) return false;
  std::vector<bool> hit(q.size(), false);
  for (std::size_t x : f) {
    if (x >= q.size() || hit[x]) return false;
    hit[x] = true;
  }
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.leq(a, b) != q.leq(f[a], f[b])) return false;
  return true;
}

PosetMap inverse_map(const PosetMap& f) {
  PosetMap inv(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) inv.at(f[i]) = i;
  return inv;
}

PosetMap compose(const PosetMap& after, const PosetMap& before) {
  PosetMap out(before.size());
  for (std::size_t i = 0; i < before.size(); ++i) out[i] = after.at(before[i]);
  return out;
}

}  // namespace pbdom
