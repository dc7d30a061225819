#include "pbdom/lattice.hpp"

#include "pbdom/error.hpp"
#include "pbdom/iso.hpp"

#include <algorithm>
#include <map>

namespace pbdom {
namespace {

// In a finite poset the set of common lower bounds is a down-set, so its
// greatest element (if any) is the one whose own down-set is the whole set.
std::optional<std::size_t> greatest_of_downset(const FinPoset& p, const Bits& lb) {
  const std::size_t c = lb.count();
  for (std::size_t g = lb.find_first(); g != Bits::npos; g = lb.find_next(g))
    if (p.down(g).count() == c) return g;
  return std::nullopt;
}

std::optional<std::size_t> least_of_upset(const FinPoset& p, const Bits& ub) {
  const std::size_t c = ub.count();
  for (std::size_t g = ub.find_first(); g != Bits::npos; g = ub.find_next(g))
    if (p.up(g).count() == c) return g;
  return std::nullopt;
}

}  // namespace

std::optional<std::size_t> meet(const FinPoset& p, std::span<const std::size_t> s) {
  if (s.empty()) throw UsageError("meet of an empty set");
  Bits lb = p.down(s[0]);
  for (std::size_t i = 1; i < s.size(); ++i) lb &= p.down(s[i]);
  return greatest_of_downset(p, lb);
}

std::optional<std::size_t> join(const FinPoset& p, std::span<const std::size_t> s) {
  if (s.empty()) throw UsageError("join of an empty set");
  Bits ub = p.up(s[0]);
  for (std::size_t i = 1; i < s.size(); ++i) ub &= p.up(s[i]);
  return least_of_upset(p, ub);
}

std::optional<std::size_t> meet(const FinPoset& p, std::size_t a, std::size_t b) {
  return greatest_of_downset(p, p.down(a) & p.down(b));
}

std::optional<std::size_t> join(const FinPoset& p, std::size_t a, std::size_t b) {
  return least_of_upset(p, p.up(a) & p.up(b));
}

std::size_t height(const FinPoset& p, std::size_t x) {
  const Bits& below = p.down(x);
  std::optional<std::size_t> least;
  for (std::size_t m = below.find_first(); m != Bits::npos; m = below.find_next(m))
    if (p.lower_covers(m).empty()) {
      if (least) throw StructuralError("no least element below '" + p.id(x) + "'");
      least = m;
    }
  std::vector<std::size_t> len(p.size(), 0);
  for (std::size_t y : p.linear_extension()) {
    if (!below[y]) continue;
    for (std::size_t z : p.lower_covers(y)) len[y] = std::max(len[y], len[z] + 1);
    if (y == x) break;
  }
  return len[x];
}

std::optional<LatticeOps> LatticeOps::of(const FinPoset& p) {
  auto bot = p.bottom();
  auto top = p.top();
  if (!bot || !top) return std::nullopt;
  LatticeOps ops;
  ops.n_ = p.size();
  ops.bottom_ = *bot;
  ops.top_ = *top;
  ops.meet_.resize(ops.n_ * ops.n_);
  ops.join_.resize(ops.n_ * ops.n_);
  for (std::size_t a = 0; a < ops.n_; ++a) {
    for (std::size_t b = a; b < ops.n_; ++b) {
      auto m = pbdom::meet(p, a, b);
      auto j = pbdom::join(p, a, b);
      if (!m || !j) return std::nullopt;
      ops.meet_[a * ops.n_ + b] = ops.meet_[b * ops.n_ + a] = *m;
      ops.join_[a * ops.n_ + b] = ops.join_[b * ops.n_ + a] = *j;
    }
  }
  return ops;
}

bool is_lattice(const FinPoset& p) { return LatticeOps::of(p).has_value(); }

std::optional<std::pair<std::size_t, std::size_t>> modularity_witness(const FinPoset& p,
                                                                      const LatticeOps& ops,
                                                                      std::size_t x) {
  for (std::size_t y = 0; y < p.size(); ++y) {
    std::size_t xy = ops.meet(x, y);
    const Bits& below = p.down(y);
    for (std::size_t a = below.find_first(); a != Bits::npos; a = below.find_next(a))
      if (ops.join(a, xy) != ops.meet(ops.join(a, x), y)) return std::make_pair(a, y);
  }
  return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> modularity_witness(const FinPoset& p,
                                                                      std::size_t x) {
  auto ops = LatticeOps::of(p);
  if (!ops) throw UsageError("modularity is only defined in a lattice");
  return modularity_witness(p, *ops, x);
}

bool is_modular_element(const FinPoset& p, std::size_t x) {
  return !modularity_witness(p, x).has_value();
}

std::vector<std::size_t> atoms(const FinPoset& p) {
  auto b = p.bottom();
  if (!b) return {};
  return p.upper_covers(*b);
}

std::vector<std::size_t> coatoms(const FinPoset& p) {
  auto t = p.top();
  if (!t) return {};
  return p.lower_covers(*t);
}

bool is_geometric(const FinPoset& p) {
  auto ops = LatticeOps::of(p);
  if (!ops) return false;
  auto at = atoms(p);
  for (std::size_t x = 0; x < p.size(); ++x) {
    std::size_t j = ops->bottom();
    for (std::size_t a : at)
      if (p.leq(a, x)) j = ops->join(j, a);
    if (j != x) return false;
  }
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.covers(ops->meet(x, y), x) && !p.covers(y, ops->join(x, y))) return false;
  return true;
}

bool is_cogeometric(const FinPoset& p) { return is_geometric(p.dual()); }

// ---------------------------------------------------------------------------
// Partitions

int Partition::ground_size() const {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.size());
  return n;
}

std::string Partition::label() const {
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += '/';
    for (int e : blocks[i]) out += std::to_string(e + 1);
  }
  return out;
}

bool Partition::refines(const Partition& coarser) const {
  std::map<int, std::size_t> where;
  for (std::size_t i = 0; i < coarser.blocks.size(); ++i)
    for (int e : coarser.blocks[i]) where[e] = i;
  for (const auto& b : blocks) {
    auto it = where.find(b.front());
    if (it == where.end()) return false;
    for (int e : b) {
      auto jt = where.find(e);
      if (jt == where.end() || jt->second != it->second) return false;
    }
  }
  return true;
}

Partition Partition::from_rgs(const std::vector<int>& rgs) {
  Partition p;
  for (std::size_t i = 0; i < rgs.size(); ++i) {
    auto k = static_cast<std::size_t>(rgs[i]);
    if (k >= p.blocks.size()) p.blocks.resize(k + 1);
    p.blocks[k].push_back(static_cast<int>(i));
  }
  return p;
}

Partition Partition::parse(const std::string& label) {
  Partition p;
  std::vector<int> seen;
  p.blocks.emplace_back();
  for (char c : label) {
    if (c == '/') {
      p.blocks.emplace_back();
      continue;
    }
    if (c < '1' || c > '9') throw UsageError("bad partition label '" + label + "'");
    p.blocks.back().push_back(c - '1');
    seen.push_back(c - '1');
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i] != static_cast<int>(i)) throw UsageError("bad partition label '" + label + "'");
  for (auto& b : p.blocks) {
    if (b.empty()) throw UsageError("bad partition label '" + label + "'");
    std::sort(b.begin(), b.end());
  }
  std::sort(p.blocks.begin(), p.blocks.end());
  return p;
}

std::vector<Partition> set_partitions(int n) {
  std::vector<Partition> out;
  if (n <= 0) return out;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::vector<int> maxp(static_cast<std::size_t>(n), 0);  // max of rgs[0..i-1]
  while (true) {
    out.push_back(Partition::from_rgs(rgs));
    int i = n - 1;
    while (i > 0 && rgs[i] > maxp[i]) --i;
    if (i == 0) break;
    ++rgs[i];
    for (int j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      maxp[j] = std::max(maxp[j - 1], rgs[j - 1]);
    }
  }
  return out;
}

std::uint64_t bell_number(int n) {
  // B(m+1) = sum_k C(m,k) B(k)
  std::vector<std::uint64_t> b{1};
  std::vector<std::uint64_t> row{1};  // binomials C(m, .)
  for (int m = 0; m < n; ++m) {
    std::uint64_t next = 0;
    for (int k = 0; k <= m; ++k) next += row[k] * b[k];
    b.push_back(next);
    std::vector<std::uint64_t> r(row.size() + 1, 1);
    for (std::size_t k = 1; k < row.size(); ++k) r[k] = row[k - 1] + row[k];
    row = std::move(r);
  }
  return b[static_cast<std::size_t>(n)];
}

FinPoset partition_lattice(int n) {
  if (n < 1 || n > kMaxPartitionLattice)
    throw UsageError("partition lattice size must be in 1.." + std::to_string(kMaxPartitionLattice));
  auto parts = set_partitions(n);
  std::map<Partition, std::size_t> index;
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    index.emplace(parts[i], i);
    ids.push_back(parts[i].label());
  }
  std::vector<FinPoset::Cover> covers;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& bl = parts[i].blocks;
    for (std::size_t a = 0; a < bl.size(); ++a)
      for (std::size_t b = a + 1; b < bl.size(); ++b) {
        Partition merged;
        for (std::size_t c = 0; c < bl.size(); ++c) {
          if (c == b) continue;
          merged.blocks.push_back(bl[c]);
          if (c == a) {
            auto& m = merged.blocks.back();
            m.insert(m.end(), bl[b].begin(), bl[b].end());
            std::sort(m.begin(), m.end());
          }
        }
        covers.emplace_back(i, index.at(merged));
      }
  }
  return FinPoset::from_indices(std::move(ids), std::move(covers));
}

std::optional<PartitionLatticeCert> recognize_partition_lattice(const FinPoset& p) {
  auto top = p.top();
  if (!top || !p.bottom()) return std::nullopt;
  int n = static_cast<int>(height(p, *top)) + 1;
  if (n > 20 || p.size() != bell_number(n)) return std::nullopt;
  if (n > kMaxPartitionLattice)
    throw ResourceError("partition lattice of size " + std::to_string(n) + " exceeds the bound");
  if (atoms(p).size() != static_cast<std::size_t>(n * (n - 1) / 2)) return std::nullopt;
  FinPoset pi = partition_lattice(n);
  auto f = poset_iso(p, pi);
  if (!f) return std::nullopt;
  auto parts = set_partitions(n);
  PartitionLatticeCert cert;
  cert.n = n;
  for (std::size_t x = 0; x < p.size(); ++x) cert.iso.push_back(parts[(*f)[x]]);
  return cert;
}

std::optional<int> recognize_partition_lattice_recursive(const FinPoset& p) {
  if (p.size() == 1) return 1;
  if (!is_geometric(p)) return std::nullopt;
  auto ops = LatticeOps::of(p);
  std::size_t top = ops->top();
  int n = static_cast<int>(height(p, top)) + 1;
  bool modular_coatom = false;
  for (std::size_t c : coatoms(p))
    if (!modularity_witness(p, *ops, c)) {
      modular_coatom = true;
      break;
    }
  if (!modular_coatom) return std::nullopt;
  auto at = atoms(p);
  if (n <= 4 && at.size() != static_cast<std::size_t>(n * (n - 1) / 2)) return std::nullopt;
  for (std::size_t a : at) {
    auto r = recognize_partition_lattice_recursive(p.interval(a, top));
    if (!r || *r != n - 1) return std::nullopt;
  }
  return n;
}

}  // namespace pbdom
