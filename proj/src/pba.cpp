#include "pbdom/pba.hpp"

#include "pbdom/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace pbdom {
namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

std::string join_ids(const std::vector<std::string>& ids, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += sep;
    out += ids[i];
  }
  return out;
}

// Index form shared by validate() and PieceBool::from_spec().
struct Indexed {
  std::vector<std::string> ids;
  std::unordered_map<std::string, std::size_t> index;
  std::size_t zero = kNone, one = kNone;
  std::vector<std::size_t> neg;
  std::vector<PbaBlock> blocks;
};

// Fills `out` as far as the spec allows, recording problems in `r`. Returns
// false if the structure is too broken for the remaining checks.
bool index_spec(const PbaSpec& s, Indexed& out, ValidationReport& r) {
  auto fail = [&](std::string cond, std::string detail, std::vector<std::string> w = {}) {
    r.valid = false;
    r.violations.push_back({std::move(cond), std::move(detail), std::move(w)});
  };
  out.ids = s.elements;
  for (std::size_t i = 0; i < out.ids.size(); ++i) {
    if (out.ids[i].empty()) fail("labels", "empty element identifier");
    if (!out.index.emplace(out.ids[i], i).second)
      fail("labels", "duplicate element identifier", {out.ids[i]});
  }
  auto find = [&](const std::string& id) {
    auto it = out.index.find(id);
    return it == out.index.end() ? kNone : it->second;
  };
  out.zero = find(s.zero);
  out.one = find(s.one);
  if (out.zero == kNone) fail("bounds", "zero is not an element", {s.zero});
  if (out.one == kNone) fail("bounds", "one is not an element", {s.one});
  if (out.zero != kNone && out.zero == out.one) fail("bounds", "zero equals one", {s.zero});
  out.neg.assign(out.ids.size(), kNone);
  for (const auto& [x, nx] : s.negation) {
    std::size_t a = find(x), b = find(nx);
    if (a == kNone || b == kNone) {
      fail("negation", "negation mentions an unknown element", {x, nx});
      continue;
    }
    out.neg[a] = b;
  }
  for (std::size_t i = 0; i < out.ids.size(); ++i)
    if (out.neg[i] == kNone) fail("negation", "negation undefined", {out.ids[i]});
  if (!r.valid) return false;

  for (std::size_t bi = 0; bi < s.blocks.size(); ++bi) {
    const auto& sb = s.blocks[bi];
    const std::string where = "block " + std::to_string(bi);
    std::optional<FinBool> alg;
    try {
      alg.emplace(sb.atoms);
    } catch (const UsageError& e) {
      fail("labels", where + ": " + e.what());
      continue;
    }
    std::vector<std::size_t> carrier(alg->size(), kNone);
    bool ok = true;
    for (const auto& [key, id] : sb.labels) {
      Elem e;
      try {
        e = alg->parse_key(key);
      } catch (const UsageError& ex) {
        fail("labels", where + ": " + ex.what(), {key});
        ok = false;
        continue;
      }
      std::size_t c = find(id);
      if (c == kNone) {
        fail("labels", where + ": label names an unknown element", {key, id});
        ok = false;
        continue;
      }
      carrier[e] = c;
    }
    if (carrier[alg->zero()] == kNone) carrier[alg->zero()] = out.zero;
    if (carrier[alg->one()] == kNone) carrier[alg->one()] = out.one;
    for (Elem e = 0; e < alg->size(); ++e)
      if (carrier[e] == kNone) {
        fail("labels", where + ": element has no label", {alg->key(e)});
        ok = false;
      }
    if (!ok) continue;
    if (carrier[alg->zero()] != out.zero || carrier[alg->one()] != out.one)
      fail("bounds", where + ": bounds of the block are not 0 and 1",
           {out.ids[carrier[alg->zero()]], out.ids[carrier[alg->one()]]});
    PbaBlock blk{*alg, carrier, {}, Bits(out.ids.size())};
    for (Elem e = 0; e < alg->size(); ++e) {
      if (!blk.elem_of.emplace(carrier[e], e).second) {
        fail("labels", where + ": two elements share a label",
             {out.ids[carrier[e]], alg->key(blk.elem_of[carrier[e]]), alg->key(e)});
        ok = false;
      }
      blk.members.set(carrier[e]);
    }
    if (ok) out.blocks.push_back(std::move(blk));
  }
  if (s.blocks.empty()) fail("coverage", "no blocks");
  return r.valid;
}

// Maximal cliques of a graph on <= 64 vertices (Bron-Kerbosch with pivot).
void maximal_cliques(const std::vector<std::uint64_t>& adj, std::uint64_t r, std::uint64_t p,
                     std::uint64_t x, const std::function<void(std::uint64_t)>& emit) {
  if (!p && !x) {
    emit(r);
    return;
  }
  std::uint64_t px = p | x;
  int best = -1;
  std::size_t pivot = 0;
  for (std::size_t u = 0; u < 64; ++u)
    if (px >> u & 1) {
      int c = __builtin_popcountll(p & adj[u]);
      if (c > best) {
        best = c;
        pivot = u;
      }
    }
  std::uint64_t cand = p & ~adj[pivot];
  for (std::size_t v = 0; v < 64; ++v) {
    if (!(cand >> v & 1)) continue;
    std::uint64_t vb = std::uint64_t{1} << v;
    maximal_cliques(adj, r | vb, p & adj[v], x & adj[v], emit);
    p &= ~vb;
    x |= vb;
  }
}

}  // namespace

ValidationReport validate(const PbaSpec& s) {
  ValidationReport r;
  Indexed ix;
  if (!index_spec(s, ix, r)) return r;
  auto fail = [&](std::string cond, std::string detail, std::vector<std::string> w = {}) {
    r.valid = false;
    r.violations.push_back({std::move(cond), std::move(detail), std::move(w)});
  };
  const std::size_t n = ix.ids.size();
  const auto& ids = ix.ids;

  Bits covered(n);
  for (const auto& b : ix.blocks) covered |= b.members;
  for (std::size_t x = 0; x < n; ++x)
    if (!covered[x]) fail("coverage", "element lies in no block", {ids[x]});

  for (std::size_t bi = 0; bi < ix.blocks.size(); ++bi) {
    const auto& b = ix.blocks[bi];
    for (Elem e = 0; e < b.alg.size(); ++e) {
      std::size_t x = b.carrier_of[e], nx = b.carrier_of[b.alg.neg(e)];
      if (ix.neg[x] != nx)
        fail("negation", "block " + std::to_string(bi) + " complements differently",
             {ids[x], ids[ix.neg[x]], ids[nx]});
    }
  }

  for (std::size_t i = 0; i < ix.blocks.size(); ++i)
    for (std::size_t j = i + 1; j < ix.blocks.size(); ++j) {
      const auto& bi = ix.blocks[i];
      const auto& bj = ix.blocks[j];
      auto shared = FinPoset::members(bi.members & bj.members);
      for (std::size_t x : shared)
        for (std::size_t y : shared) {
          if (y < x) continue;
          std::size_t mi = bi.carrier_of[bi.elem_of.at(x) & bi.elem_of.at(y)];
          std::size_t mj = bj.carrier_of[bj.elem_of.at(x) & bj.elem_of.at(y)];
          if (mi != mj)
            fail("meet-agreement",
                 "blocks " + std::to_string(i) + " and " + std::to_string(j) + " disagree on a meet",
                 {ids[x], ids[y], ids[mi], ids[mj]});
        }
    }
  if (!r.valid) return r;

  if (n > kMaxCliqueCarrier)
    throw ResourceError("closure check is capped at " + std::to_string(kMaxCliqueCarrier) +
                        " elements");
  std::vector<std::uint64_t> adj(64, 0);
  std::vector<std::uint64_t> block_mask;
  for (const auto& b : ix.blocks) {
    std::uint64_t m = 0;
    for (std::size_t x : FinPoset::members(b.members)) m |= std::uint64_t{1} << x;
    block_mask.push_back(m);
    for (std::size_t x : FinPoset::members(b.members)) adj[x] |= m & ~(std::uint64_t{1} << x);
  }
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  maximal_cliques(adj, 0, all, 0, [&](std::uint64_t clique) {
    for (std::uint64_t m : block_mask)
      if ((clique & ~m) == 0) return;
    std::vector<std::string> w;
    for (std::size_t x = 0; x < n; ++x)
      if (clique >> x & 1) w.push_back(ids[x]);
    fail("closure", "pairwise commeasurable elements lie in no common block", std::move(w));
  });

  for (std::size_t i = 0; i < ix.blocks.size(); ++i)
    for (std::size_t j = 0; j < ix.blocks.size(); ++j) {
      if (i == j) continue;
      if (ix.blocks[i].members.is_subset_of(ix.blocks[j].members) &&
          (i < j || ix.blocks[i].members != ix.blocks[j].members))
        fail("maximal-blocks",
             "block " + std::to_string(i) + " is contained in block " + std::to_string(j));
    }
  return r;
}

std::optional<Elem> PbaBlock::elem(std::size_t c) const {
  auto it = elem_of.find(c);
  if (it == elem_of.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------
// PieceBool

PieceBool PieceBool::from_spec(const PbaSpec& spec) {
  ValidationReport r = validate(spec);
  if (!r.valid) {
    const auto& v = r.violations.front();
    std::string msg = "invalid piecewise Boolean algebra (" + v.condition + "): " + v.detail;
    if (!v.witness.empty()) msg += " [" + join_ids(v.witness, ", ") + "]";
    throw StructuralError(msg);
  }
  Indexed ix;
  index_spec(spec, ix, r);
  PieceBool p;
  p.ids_ = std::move(ix.ids);
  p.index_ = std::move(ix.index);
  p.zero_ = ix.zero;
  p.one_ = ix.one;
  p.neg_ = std::move(ix.neg);
  p.blocks_ = std::move(ix.blocks);
  p.blocks_of_.assign(p.ids_.size(), Bits(p.blocks_.size()));
  for (std::size_t b = 0; b < p.blocks_.size(); ++b)
    for (std::size_t x : FinPoset::members(p.blocks_[b].members)) p.blocks_of_[x].set(b);
  return p;
}

PieceBool PieceBool::from_bool(const FinBool& b) {
  return PbaBuilder().block(b.atoms()).build();
}

std::optional<std::size_t> PieceBool::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t PieceBool::index(const std::string& id) const {
  auto i = find(id);
  if (!i) throw UsageError("unknown element '" + id + "'");
  return *i;
}

std::optional<std::size_t> PieceBool::common_block(std::size_t x, std::size_t y) const {
  Bits both = blocks_of_[x] & blocks_of_[y];
  std::size_t b = both.find_first();
  if (b == Bits::npos) return std::nullopt;
  return b;
}

std::optional<std::size_t> PieceBool::meet(std::size_t x, std::size_t y) const {
  auto b = common_block(x, y);
  if (!b) return std::nullopt;
  const auto& blk = blocks_[*b];
  return blk.carrier_of[blk.elem_of.at(x) & blk.elem_of.at(y)];
}

std::optional<std::size_t> PieceBool::join(std::size_t x, std::size_t y) const {
  auto b = common_block(x, y);
  if (!b) return std::nullopt;
  const auto& blk = blocks_[*b];
  return blk.carrier_of[blk.elem_of.at(x) | blk.elem_of.at(y)];
}

PbaSpec PieceBool::to_spec() const {
  PbaSpec s;
  s.elements = ids_;
  s.zero = ids_[zero_];
  s.one = ids_[one_];
  for (std::size_t x = 0; x < size(); ++x) s.negation[ids_[x]] = ids_[neg_[x]];
  for (const auto& b : blocks_) {
    PbaSpec::Block sb;
    sb.atoms = b.alg.atoms();
    for (Elem e = 0; e < b.alg.size(); ++e) sb.labels[b.alg.key(e)] = ids_[b.carrier_of[e]];
    s.blocks.push_back(std::move(sb));
  }
  return s;
}

// ---------------------------------------------------------------------------
// PbaBuilder

PbaBuilder& PbaBuilder::block(std::vector<std::string> atoms, std::map<std::string, std::string> names) {
  FinBool alg(atoms);
  PbaSpec::Block b;
  b.atoms = std::move(atoms);
  for (Elem e = 0; e < alg.size(); ++e) {
    std::string key = alg.key(e);
    auto it = names.find(key);
    if (it != names.end())
      b.labels[key] = it->second;
    else if (e == alg.zero())
      b.labels[key] = "0";
    else if (e == alg.one())
      b.labels[key] = "1";
    else
      b.labels[key] = join_ids(alg.labels(e), "+");
  }
  blocks_.push_back(std::move(b));
  return *this;
}

PbaSpec PbaBuilder::spec() const {
  PbaSpec s;
  std::set<std::string> seen;
  auto add = [&](const std::string& id) {
    if (seen.insert(id).second) s.elements.push_back(id);
  };
  add("0");
  add("1");
  for (const auto& b : blocks_) {
    FinBool alg(b.atoms);
    for (Elem e = 0; e < alg.size(); ++e) add(b.labels.at(alg.key(e)));
    for (Elem e = 0; e < alg.size(); ++e)
      s.negation.emplace(b.labels.at(alg.key(e)), b.labels.at(alg.key(alg.neg(e))));
  }
  s.blocks = blocks_;
  return s;
}

// ---------------------------------------------------------------------------
// Sub

SubDomain::SubDomain(FinPoset poset, std::vector<Bits> carrier,
                     std::vector<std::pair<std::size_t, Subalgebra>> home)
    : poset(std::move(poset)), carrier(std::move(carrier)), home(std::move(home)) {
  for (std::size_t i = 0; i < this->carrier.size(); ++i) lookup_.emplace(this->carrier[i], i);
}

std::optional<std::size_t> SubDomain::find(const Bits& s) const {
  auto it = lookup_.find(s);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

SubDomain sub(const PieceBool& p) {
  std::map<Bits, std::pair<std::size_t, Subalgebra>> found;
  for (std::size_t bi = 0; bi < p.blocks().size(); ++bi) {
    const auto& b = p.blocks()[bi];
    if (b.alg.atom_count() > subalgebra_atom_cap())
      throw ResourceError("block with " + std::to_string(b.alg.atom_count()) +
                          " atoms exceeds the subalgebra cap");
    for (const auto& pi : set_partitions(static_cast<int>(b.alg.atom_count()))) {
      Subalgebra s = Subalgebra::from_partition(b.alg, pi);
      Bits c(p.size());
      for (Elem e : s.elements()) c.set(b.carrier_of[e]);
      found.emplace(std::move(c), std::make_pair(bi, std::move(s)));
    }
  }
  std::vector<const std::pair<const Bits, std::pair<std::size_t, Subalgebra>>*> order;
  for (const auto& kv : found) order.push_back(&kv);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
    std::size_t ca = a->first.count(), cb = b->first.count();
    if (ca != cb) return ca < cb;
    return FinPoset::members(a->first) < FinPoset::members(b->first);
  });
  std::vector<std::string> ids;
  std::vector<Bits> carrier;
  std::vector<std::pair<std::size_t, Subalgebra>> home;
  for (auto* kv : order) {
    std::vector<std::string> names;
    for (std::size_t x : FinPoset::members(kv->first)) names.push_back(p.id(x));
    ids.push_back("{" + join_ids(names, ",") + "}");
    carrier.push_back(kv->first);
    home.push_back(kv->second);
  }
  std::vector<FinPoset::Cover> covers;
  for (std::size_t i = 0; i < carrier.size(); ++i)
    for (std::size_t j = 0; j < carrier.size(); ++j)
      if (carrier[j].count() == 2 * carrier[i].count() && carrier[i].is_subset_of(carrier[j]))
        covers.emplace_back(i, j);
  return SubDomain(FinPoset::from_indices(std::move(ids), std::move(covers)), std::move(carrier),
                   std::move(home));
}

// ---------------------------------------------------------------------------
// Morphisms

PieceBoolHom::PieceBoolHom(const PieceBool& source, const PieceBool& target, PosetMap map)
    : source_(&source), target_(&target), map_(std::move(map)) {
  if (map_.size() != source.size()) throw UsageError("morphism must map every element");
  for (std::size_t y : map_)
    if (y >= target.size()) throw UsageError("morphism image outside the target");
  if (map_[source.zero()] != target.zero() || map_[source.one()] != target.one())
    throw UsageError("morphism does not preserve 0 and 1");
  for (std::size_t bi = 0; bi < source.blocks().size(); ++bi) {
    const auto& b = source.blocks()[bi];
    Bits into(target.blocks().size());
    into.set();
    for (std::size_t x : FinPoset::members(b.members)) into &= target.blocks_of(map_[x]);
    std::size_t ti = into.find_first();
    if (ti == Bits::npos)
      throw UsageError("block " + std::to_string(bi) + " is not mapped into a single block");
    const auto& t = target.blocks()[ti];
    for (Elem e = 0; e < b.alg.size(); ++e) {
      Elem fe = *t.elem(map_[b.carrier_of[e]]);
      if (map_[b.carrier_of[b.alg.neg(e)]] != t.carrier_of[t.alg.neg(fe)])
        throw UsageError("morphism does not preserve negation at '" + source.id(b.carrier_of[e]) + "'");
      for (Elem g = e + 1; g < b.alg.size(); ++g) {
        Elem fg = *t.elem(map_[b.carrier_of[g]]);
        if (map_[b.carrier_of[e & g]] != t.carrier_of[fe & fg])
          throw UsageError("morphism does not preserve meets at '" + source.id(b.carrier_of[e]) +
                           "', '" + source.id(b.carrier_of[g]) + "'");
      }
    }
  }
}

PieceBoolHom PieceBoolHom::identity(const PieceBool& p) {
  PosetMap m(p.size());
  std::iota(m.begin(), m.end(), 0);
  return PieceBoolHom(p, p, std::move(m));
}

PieceBoolHom PieceBoolHom::compose(const PieceBoolHom& after, const PieceBoolHom& before) {
  if (&before.target() != &after.source()) throw UsageError("morphisms are not composable");
  return PieceBoolHom(before.source(), after.target(), pbdom::compose(after.map_, before.map_));
}

bool PieceBoolHom::is_iso() const {
  if (source_->size() != target_->size()) return false;
  std::vector<bool> hit(target_->size(), false);
  for (std::size_t y : map_) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  try {
    PieceBoolHom inv(*target_, *source_, inverse_map(map_));
  } catch (const UsageError&) {
    return false;
  }
  return true;
}

PosetMap sub_on_hom(const PieceBoolHom& f, const SubDomain& s, const SubDomain& t) {
  PosetMap out(s.carrier.size());
  for (std::size_t i = 0; i < s.carrier.size(); ++i) {
    Bits img(f.target().size());
    for (std::size_t x : FinPoset::members(s.carrier[i])) img.set(f(x));
    auto j = t.find(img);
    if (!j) throw LogicError("direct image of a subalgebra is not a subalgebra");
    out[i] = *j;
  }
  return out;
}

bool union_leq(const PieceBool& p, std::size_t x, std::size_t y) {
  Bits both = p.blocks_of(x) & p.blocks_of(y);
  for (std::size_t b = both.find_first(); b != Bits::npos; b = both.find_next(b)) {
    const auto& blk = p.blocks()[b];
    Elem ex = blk.elem_of.at(x), ey = blk.elem_of.at(y);
    if ((ex & ~ey) == 0) return true;
  }
  return false;
}

TransitiveJoinedReport is_transitive_joined(const PieceBool& p) {
  const std::size_t n = p.size();
  std::vector<Bits> up(n, Bits(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (union_leq(p, x, y)) up[x].set(y);
  TransitiveJoinedReport r;
  for (std::size_t x = 0; x < n && r.transitive; ++x)
    for (std::size_t y : FinPoset::members(up[x])) {
      Bits missing = up[y] - up[x];
      if (missing.any()) {
        r.transitive = false;
        r.intransitive = std::array<std::size_t, 3>{x, y, missing.find_first()};
        break;
      }
    }
  for (std::size_t x = 0; x < n && r.joined; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      Bits ub = up[x] & up[y];
      bool least = false;
      for (std::size_t z : FinPoset::members(ub))
        if (ub.is_subset_of(up[z])) {
          least = true;
          break;
        }
      if (!least) {
        r.joined = false;
        r.unjoined = std::make_pair(x, y);
        break;
      }
    }
  return r;
}

// ---------------------------------------------------------------------------
// Isomorphisms

namespace {

// Partial carrier bijection with an undo log.
struct PartialBijection {
  PosetMap fwd, bwd;
  std::vector<std::size_t> log;

  PartialBijection(std::size_t n, std::size_t m) : fwd(n, kNone), bwd(m, kNone) {}

  bool assign(std::size_t a, std::size_t b) {
    if (fwd[a] == b) return true;
    if (fwd[a] != kNone || bwd[b] != kNone) return false;
    fwd[a] = b;
    bwd[b] = a;
    log.push_back(a);
    return true;
  }
  void rollback(std::size_t mark) {
    while (log.size() > mark) {
      std::size_t a = log.back();
      log.pop_back();
      bwd[fwd[a]] = kNone;
      fwd[a] = kNone;
    }
  }
  bool complete() const {
    return std::none_of(fwd.begin(), fwd.end(), [](std::size_t v) { return v == kNone; });
  }
};

// Applies an atom bijection of one block onto another; false on conflict.
bool apply_block_map(PartialBijection& f, const PbaBlock& src, const PbaBlock& tgt, const BoolHom& h) {
  for (Elem e = 0; e < src.alg.size(); ++e)
    if (!f.assign(src.carrier_of[e], tgt.carrier_of[h(e)])) return false;
  return true;
}

}  // namespace

void for_each_pba_iso(const PieceBool& p, const PieceBool& q,
                      const std::function<bool(const PosetMap&)>& visit) {
  if (p.size() != q.size() || p.blocks().size() != q.blocks().size()) return;
  auto sizes = [](const PieceBool& x) {
    std::vector<std::size_t> v;
    for (const auto& b : x.blocks()) v.push_back(b.alg.atom_count());
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sizes(p) != sizes(q)) return;
  const std::size_t nb = p.blocks().size();
  PartialBijection f(p.size(), q.size());
  std::vector<bool> used(nb, false);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == nb) return f.complete() ? visit(f.fwd) : true;
    const auto& src = p.blocks()[i];
    for (std::size_t j = 0; j < nb; ++j) {
      if (used[j] || q.blocks()[j].alg.atom_count() != src.alg.atom_count()) continue;
      const auto& tgt = q.blocks()[j];
      used[j] = true;
      for (const auto& h : all_bool_isos(src.alg, tgt.alg)) {
        std::size_t mark = f.log.size();
        if (apply_block_map(f, src, tgt, h) && !rec(i + 1)) {
          f.rollback(mark);
          used[j] = false;
          return false;
        }
        f.rollback(mark);
      }
      used[j] = false;
    }
    return true;
  };
  rec(0);
}

std::optional<PosetMap> pba_iso_search(const PieceBool& p, const PieceBool& q) {
  std::optional<PosetMap> out;
  for_each_pba_iso(p, q, [&](const PosetMap& m) {
    out = m;
    return false;
  });
  return out;
}

std::vector<PosetMap> lift_domain_iso(const PieceBool& p, const SubDomain& sp, const PieceBool& q,
                                      const SubDomain& sq, const PosetMap& phi) {
  if (!is_order_iso(sp.poset, sq.poset, phi))
    throw UsageError("map is not an order isomorphism of subalgebra domains");
  const std::size_t nb = p.blocks().size();
  // per block: target block and candidate Boolean isomorphisms
  std::vector<std::size_t> target(nb);
  std::vector<std::vector<BoolHom>> cands(nb);
  for (std::size_t i = 0; i < nb; ++i) {
    const auto& src = p.blocks()[i];
    std::size_t mi = *sp.find(src.members);
    const Bits& img = sq.carrier[phi[mi]];
    std::size_t j = 0;
    while (j < q.blocks().size() && q.blocks()[j].members != img) ++j;
    if (j == q.blocks().size()) throw LogicError("maximal subalgebra mapped to a non-block");
    const auto& tgt = q.blocks()[j];
    target[i] = j;
    SubalgebraLattice la = subalgebras(src.alg);
    SubalgebraLattice lb = subalgebras(tgt.alg);
    PosetMap psi(la.subs.size());
    for (std::size_t k = 0; k < la.subs.size(); ++k) {
      Bits c(p.size());
      for (Elem e : la.subs[k].elements()) c.set(src.carrier_of[e]);
      const Bits& d = sq.carrier[phi[*sp.find(c)]];
      std::vector<Elem> elems;
      for (std::size_t y : FinPoset::members(d)) elems.push_back(*tgt.elem(y));
      psi[k] = lb.index_of(Subalgebra::from_elements(tgt.alg, elems));
    }
    cands[i] = all_sub_iso_lifts(la, lb, psi);
  }
  std::vector<PosetMap> out;
  PartialBijection f(p.size(), q.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == nb) {
      if (!f.complete()) return;
      PieceBoolHom h(p, q, f.fwd);
      if (sub_on_hom(h, sp, sq) == phi) out.push_back(f.fwd);
      return;
    }
    for (const auto& h : cands[i]) {
      std::size_t mark = f.log.size();
      if (apply_block_map(f, p.blocks()[i], q.blocks()[target[i]], h)) rec(i + 1);
      f.rollback(mark);
    }
  };
  rec(0);
  return out;
}

}  // namespace pbdom
