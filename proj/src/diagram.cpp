#include "pbdom/diagram.hpp"

#include "pbdom/domain.hpp"
#include "pbdom/error.hpp"
#include "pbdom/lattice.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <set>

namespace pbdom {

// ---------------------------------------------------------------------------
// Orientation helpers

bool Orientation::operator==(const Orientation& o) const {
  if (maximal_defaults != o.maximal_defaults) return false;
  if (choice.size() != o.choice.size()) return false;
  for (const auto& [atom, key] : choice) {
    auto it = o.choice.find(atom);
    if (it == o.choice.end()) return false;
    if (!maximal_defaults.count(atom) && it->second != key) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> cover_components(const FinPoset& l, std::size_t a) {
  const auto& ys = l.upper_covers(a);
  std::vector<std::size_t> parent(ys.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < ys.size(); ++i)
    for (std::size_t j = i + 1; j < ys.size(); ++j)
      if (l.up(ys[i]).intersects(l.up(ys[j]))) parent[root(j)] = root(i);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < ys.size(); ++i) groups[root(i)].push_back(ys[i]);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [r, g] : groups) {
    std::sort(g.begin(), g.end());
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// PBDiagram

PBDiagram::PBDiagram(FinPoset base, std::vector<FinBool> algebras, std::vector<BoolHom> edges)
    : base_(std::move(base)), algebras_(std::move(algebras)), edges_(std::move(edges)) {
  if (algebras_.size() != base_.size())
    throw UsageError("diagram needs one algebra per base element");
  const auto& cp = base_.cover_pairs();
  if (edges_.size() != cp.size()) throw UsageError("diagram needs one edge per cover");
  for (std::size_t k = 0; k < cp.size(); ++k) {
    if (!(edges_[k].source() == algebras_[cp[k].first]) ||
        !(edges_[k].target() == algebras_[cp[k].second]))
      throw UsageError("edge " + base_.id(cp[k].first) + " < " + base_.id(cp[k].second) +
                       " does not connect the algebras at its ends");
    edge_index_[cp[k]] = k;
  }
}

const BoolHom& PBDiagram::edge(std::size_t lo, std::size_t hi) const {
  auto it = edge_index_.find({lo, hi});
  if (it == edge_index_.end()) throw UsageError("not a cover");
  return edges_[it->second];
}

BoolHom PBDiagram::hom(std::size_t x, std::size_t y) const {
  if (!base_.leq(x, y)) throw UsageError("hom needs x <= y");
  if (x == y) return BoolHom::identity(algebras_[x]);
  for (std::size_t z : base_.lower_covers(y))
    if (base_.leq(x, z)) return BoolHom::compose(edge(z, y), hom(x, z));
  throw LogicError("no cover path");
}

bool PBDiagram::operator==(const PBDiagram& o) const {
  return base_.ids() == o.base_.ids() && base_.cover_pairs() == o.base_.cover_pairs() &&
         algebras_ == o.algebras_ && edges_ == o.edges_;
}

DiagramCheck check_diagram(const PBDiagram& f) {
  const FinPoset& l = f.base();
  const std::size_t n = l.size();
  const auto& cp = l.cover_pairs();
  for (std::size_t k = 0; k < cp.size(); ++k)
    if (!f.edges()[k].injective())
      return {false, "injective", l.id(cp[k].first) + " < " + l.id(cp[k].second)};

  // t[x][y] = composite x -> y, checked against every cover path
  std::vector<std::vector<std::optional<BoolHom>>> t(n, std::vector<std::optional<BoolHom>>(n));
  for (std::size_t x = 0; x < n; ++x) {
    t[x][x] = BoolHom::identity(f.algebra(x));
    for (std::size_t y : l.linear_extension()) {
      if (!l.lt(x, y)) continue;
      for (std::size_t z : l.lower_covers(y)) {
        if (!l.leq(x, z)) continue;
        BoolHom c = BoolHom::compose(f.edge(z, y), *t[x][z]);
        if (!t[x][y])
          t[x][y] = std::move(c);
        else if (!(*t[x][y] == c))
          return {false, "commutation", l.id(x) + " -> " + l.id(y) + " via " + l.id(z)};
      }
    }
  }

  for (std::size_t y = 0; y < n; ++y) {
    auto below = FinPoset::members(l.down(y));
    if (below.size() != bell_number(static_cast<int>(f.algebra(y).atom_count())))
      return {false, "subobjects",
              l.id(y) + ": ideal size differs from the number of subalgebras"};
    std::vector<Subalgebra> img;
    for (std::size_t x : below) img.push_back(direct_image(*t[x][y], Subalgebra::whole(f.algebra(x))));
    for (std::size_t i = 0; i < below.size(); ++i)
      for (std::size_t j = 0; j < below.size(); ++j) {
        if (i != j && img[i] == img[j])
          return {false, "subobjects",
                  l.id(y) + ": " + l.id(below[i]) + " and " + l.id(below[j]) + " have the same image"};
        if (l.leq(below[i], below[j]) != img[i].included_in(img[j]))
          return {false, "subobjects",
                  l.id(y) + ": order between " + l.id(below[i]) + " and " + l.id(below[j]) +
                      " is not reflected"};
      }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Canonical realization

namespace {

struct Realization {
  FinBool alg;
  std::map<std::size_t, Subalgebra> alpha;
};

Realization realize(const FinPoset& l, std::size_t x) {
  const std::size_t h = height(l, x);
  if (h == 0) {
    FinBool b({"*"});
    return {b, {{x, Subalgebra::trivial(b)}}};
  }
  if (h == 1) {
    FinBool b({"p", "np"});
    std::map<std::size_t, Subalgebra> alpha;
    for (std::size_t z : FinPoset::members(l.down(x)))
      alpha[z] = z == x ? Subalgebra::whole(b) : Subalgebra::trivial(b);
    if (alpha.size() != 2) throw UsageError(l.id(x) + " is not an atom of a domain");
    return {b, alpha};
  }

  std::vector<std::size_t> embed;
  FinPoset down = l.ideal(x, &embed);
  auto ops = LatticeOps::of(down);
  if (!ops) throw UsageError("ideal of " + l.id(x) + " is not a lattice");
  std::vector<std::size_t> mods;
  std::vector<std::string> labels;
  for (std::size_t a : atoms(down))
    if (!modularity_witness(down, *ops, a)) {
      mods.push_back(a);
      labels.push_back(l.id(embed[a]));
    }
  if (mods.size() != h + 1)
    throw LogicError("ideal of " + l.id(x) + " has " + std::to_string(mods.size()) +
                     " modular atoms, expected " + std::to_string(h + 1));
  FinBool b(labels);
  const std::size_t m = mods.size();
  const Elem full = b.one();
  std::vector<std::size_t> j(std::size_t{1} << m);
  j[0] = ops->bottom();
  for (Elem s = 1; s <= full; ++s) {
    std::size_t low = static_cast<std::size_t>(std::countr_zero(s));
    j[s] = ops->join(j[s & (s - 1)], mods[low]);
  }

  std::map<std::size_t, Subalgebra> alpha;
  std::vector<Subalgebra> local(down.size());
  for (std::size_t z = 0; z < down.size(); ++z) {
    std::vector<Elem> elems{0, full};
    for (Elem s = 1; s < full; ++s)
      if (down.leq(ops->meet(j[s], j[full ^ s]), z)) elems.push_back(s);
    try {
      local[z] = Subalgebra::from_elements(b, elems);
    } catch (const UsageError& e) {
      throw LogicError("split sets below " + down.id(z) + " are not a subalgebra: " + e.what());
    }
    alpha[embed[z]] = local[z];
  }
  if (down.size() != bell_number(static_cast<int>(m)))
    throw LogicError("ideal of " + l.id(x) + " has the wrong size");
  for (std::size_t u = 0; u < down.size(); ++u)
    for (std::size_t v = 0; v < down.size(); ++v)
      if ((u != v && local[u] == local[v]) || down.leq(u, v) != local[u].included_in(local[v]))
        throw LogicError("split map on the ideal of " + l.id(x) + " is not an order isomorphism");
  return {b, alpha};
}

// Composite x -> y along the first cover path.
BoolHom path_hom(const FinPoset& l, const std::vector<std::optional<BoolHom>>& edges,
                 const std::map<FinPoset::Cover, std::size_t>& idx, const std::vector<FinBool>& algs,
                 std::size_t x, std::size_t y) {
  if (x == y) return BoolHom::identity(algs[x]);
  for (std::size_t z : l.lower_covers(y))
    if (l.leq(x, z)) {
      const auto& e = edges[idx.at({z, y})];
      if (!e) throw LogicError("edge " + l.id(z) + " < " + l.id(y) + " not yet defined");
      return BoolHom::compose(*e, path_hom(l, edges, idx, algs, x, z));
    }
  throw LogicError("no cover path");
}

// Edge lo < hi for height(lo) >= 2: the lift of the subalgebra isomorphism
// alpha_hi o alpha_lo^-1 restricted to alpha_hi(lo).
BoolHom lift_edge(const Realization& rlo, const Realization& rhi, std::size_t lo) {
  const FinBool& a = rlo.alg;
  const FinBool& y = rhi.alg;
  const Subalgebra& bsub = rhi.alpha.at(lo);
  std::vector<std::string> blabels;
  for (Elem u : bsub.atoms) blabels.push_back(y.key(u));
  FinBool bp(blabels);
  SubalgebraLattice la = subalgebras(a);
  SubalgebraLattice lb = subalgebras(bp);
  PosetMap psi(la.subs.size(), la.subs.size());
  for (const auto& [z, s] : rlo.alpha) {
    const Subalgebra& t = rhi.alpha.at(z);
    Subalgebra tp;
    for (Elem v : t.atoms) {
      Elem mask = 0;
      for (std::size_t i = 0; i < bsub.atoms.size(); ++i)
        if ((bsub.atoms[i] & ~v) == 0) mask |= Elem{1} << i;
      tp.atoms.push_back(mask);
    }
    std::sort(tp.atoms.begin(), tp.atoms.end());
    psi[la.index_of(s)] = lb.index_of(tp);
  }
  BoolHom g = lift_sub_iso(la, lb, psi);
  std::vector<Elem> images;
  for (Elem gi : g.atom_images()) {
    Elem img = 0;
    for (std::size_t k = 0; k < bsub.atoms.size(); ++k)
      if (gi & (Elem{1} << k)) img |= bsub.atoms[k];
    images.push_back(img);
  }
  return BoolHom(a, y, std::move(images));
}

// Minimal elements of a nonempty set, lowest index first.
std::optional<std::size_t> first_minimal(const FinPoset& l, const Bits& s) {
  for (std::size_t z = s.find_first(); z != Bits::npos; z = s.find_next(z))
    if ((l.down(z) & s).count() == 1) return z;
  return std::nullopt;
}

}  // namespace

FinBool canonical_algebra(const FinPoset& l, std::size_t x) { return realize(l, x).alg; }

std::map<std::size_t, Subalgebra> canonical_alpha(const FinPoset& l, std::size_t x) {
  return realize(l, x).alpha;
}

PBDiagram functor_from_domain(const FinPoset& l, const Orientation& o) {
  if (!is_domain(l)) throw UsageError("base poset is not a domain");
  const std::size_t n = l.size();
  const std::size_t bot = *l.bottom();
  std::vector<Realization> r;
  std::vector<FinBool> algs;
  std::vector<std::size_t> h(n);
  for (std::size_t x = 0; x < n; ++x) {
    r.push_back(realize(l, x));
    algs.push_back(r.back().alg);
    h[x] = height(l, x);
  }
  auto at = atoms(l);
  std::set<std::string> atom_ids;
  for (std::size_t a : at) {
    atom_ids.insert(l.id(a));
    auto it = o.choice.find(l.id(a));
    if (it == o.choice.end()) throw UsageError("orientation misses atom " + l.id(a));
    if (it->second != "p" && it->second != "np")
      throw UsageError("orientation value for " + l.id(a) + " must be p or np");
  }
  for (const auto& [k, v] : o.choice)
    if (!atom_ids.count(k)) throw UsageError("orientation names non-atom " + k);

  const auto& cp = l.cover_pairs();
  std::map<FinPoset::Cover, std::size_t> idx;
  for (std::size_t k = 0; k < cp.size(); ++k) idx[cp[k]] = k;
  std::vector<std::optional<BoolHom>> edges(cp.size());
  for (std::size_t k = 0; k < cp.size(); ++k) {
    auto [lo, hi] = cp[k];
    if (lo == bot)
      edges[k] = BoolHom(algs[lo], algs[hi], {algs[hi].one()});
    else if (h[lo] >= 2)
      edges[k] = lift_edge(r[lo], r[hi], lo);
  }

  for (std::size_t a : at) {
    if (l.is_maximal(a)) continue;
    const FinBool& fa = algs[a];
    const Elem b = o.choice.at(l.id(a)) == "p" ? fa.atom(0) : fa.atom(1);
    auto set_edge = [&](std::size_t y, Elem w) {
      std::vector<Elem> im(2);
      im[b == 1 ? 0 : 1] = w;
      im[b == 1 ? 1 : 0] = algs[y].neg(w);
      edges[idx.at({a, y})] = BoolHom(fa, algs[y], std::move(im));
    };
    for (const auto& comp : cover_components(l, a)) {
      const std::size_t ref = comp.front();
      std::optional<Elem> u;
      for (Elem v : r[ref].alpha.at(a).atoms)
        if (algs[ref].is_atom(v)) u = v;
      if (!u) throw LogicError("no atom of " + l.id(ref) + " splits " + l.id(a));
      set_edge(ref, *u);
      std::vector<std::size_t> done{ref};
      while (done.size() < comp.size()) {
        bool progress = false;
        for (std::size_t y : comp) {
          if (std::find(done.begin(), done.end(), y) != done.end()) continue;
          for (std::size_t y2 : done) {
            Bits ub = l.up(y) & l.up(y2);
            if (ub.none()) continue;
            std::size_t z = *first_minimal(l, ub);
            Elem target = path_hom(l, edges, idx, algs, y2, z)((*edges[idx.at({a, y2})])(b));
            BoolHom yz = path_hom(l, edges, idx, algs, y, z);
            std::optional<Elem> w;
            for (Elem v = 0; v <= algs[y].one(); ++v)
              if (yz(v) == target) w = v;
            const Subalgebra& sy = r[y].alpha.at(a);
            if (!w || std::find(sy.atoms.begin(), sy.atoms.end(), *w) == sy.atoms.end())
              throw LogicError("cannot carry the orientation of " + l.id(a) + " from " + l.id(y2) +
                               " to " + l.id(y) + " through " + l.id(z));
            set_edge(y, *w);
            done.push_back(y);
            progress = true;
            break;
          }
          if (progress) break;
        }
        if (!progress) throw LogicError("cover group of " + l.id(a) + " is not connected");
      }
    }
  }

  std::vector<BoolHom> es;
  for (std::size_t k = 0; k < cp.size(); ++k) {
    if (!edges[k]) throw LogicError("edge " + l.id(cp[k].first) + " < " + l.id(cp[k].second) + " undefined");
    es.push_back(std::move(*edges[k]));
  }
  PBDiagram f(l, std::move(algs), std::move(es));
  auto chk = check_diagram(f);
  if (!chk.ok) throw LogicError("built diagram fails " + chk.condition + ": " + chk.detail);
  return f;
}

// ---------------------------------------------------------------------------
// Colimit

Colimit colim(const PBDiagram& f) {
  const FinPoset& l = f.base();
  const std::size_t n = l.size();
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t x = 0; x < n; ++x) offset[x + 1] = offset[x] + f.algebra(x).size();
  std::vector<std::size_t> parent(offset[n]);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  const auto& cp = l.cover_pairs();
  for (std::size_t k = 0; k < cp.size(); ++k) {
    auto [lo, hi] = cp[k];
    const BoolHom& e = f.edges()[k];
    for (Elem v = 0; v <= f.algebra(lo).one(); ++v) {
      std::size_t a = root(offset[lo] + v), b = root(offset[hi] + e(v));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  // class numbering in first-seen order with 0 and 1 first
  std::map<std::size_t, std::size_t> cls;
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, Elem>> rep;
  auto add = [&](std::size_t x, Elem v) {
    std::size_t c = root(offset[x] + v);
    if (cls.emplace(c, names.size()).second) {
      rep.emplace_back(x, v);
      names.push_back("");
    }
    return cls[c];
  };
  std::size_t zero = add(0, 0);
  std::size_t one = add(0, f.algebra(0).one());
  if (zero == one) throw LogicError("colimit identifies 0 and 1");
  std::vector<std::vector<std::size_t>> cocone(n);
  for (std::size_t x = 0; x < n; ++x) {
    const FinBool& b = f.algebra(x);
    std::set<std::size_t> seen;
    for (Elem v = 0; v <= b.one(); ++v) {
      std::size_t c = add(x, v);
      if (!seen.insert(c).second)
        throw LogicError("cocone map at " + l.id(x) + " is not injective");
      cocone[x].push_back(c);
    }
  }
  if (cocone[0][0] != zero) throw LogicError("zero classes differ");

  // names: prefer an atom of the base holding the class
  auto at = atoms(l);
  for (std::size_t c = 0; c < names.size(); ++c) {
    if (c == zero) { names[c] = "0"; continue; }
    if (c == one) { names[c] = "1"; continue; }
    std::optional<std::pair<std::size_t, Elem>> where;
    for (std::size_t a : at)
      for (Elem v = 0; v <= f.algebra(a).one() && !where; ++v)
        if (cocone[a][v] == c) where = {a, v};
    if (!where) where = rep[c];
    names[c] = l.id(where->first) + ":" + f.algebra(where->first).key(where->second);
    std::replace(names[c].begin(), names[c].end(), ',', ';');
  }
  {
    std::set<std::string> uniq(names.begin(), names.end());
    if (uniq.size() != names.size()) {
      for (std::size_t c = 0; c < names.size(); ++c)
        if (c != zero && c != one) names[c] += "#" + std::to_string(c);
    }
  }

  PbaSpec spec;
  spec.elements = names;
  std::vector<std::optional<std::size_t>> neg(names.size());
  for (std::size_t x = 0; x < n; ++x) {
    const FinBool& b = f.algebra(x);
    for (Elem v = 0; v <= b.one(); ++v) {
      std::size_t c = cocone[x][v], nc = cocone[x][b.neg(v)];
      if (neg[c] && *neg[c] != nc) throw LogicError("colimit negation is not well defined");
      neg[c] = nc;
    }
  }
  for (std::size_t c = 0; c < names.size(); ++c) spec.negation[names[c]] = names[*neg[c]];
  for (std::size_t x : l.maximal()) {
    // neutral atom labels: the algebra's own labels may contain commas
    const FinBool& b = f.algebra(x);
    PbaSpec::Block blk;
    for (std::size_t i = 0; i < b.atom_count(); ++i) blk.atoms.push_back("e" + std::to_string(i));
    FinBool plain(blk.atoms);
    for (Elem v = 0; v <= b.one(); ++v) blk.labels[plain.key(v)] = names[cocone[x][v]];
    spec.blocks.push_back(std::move(blk));
  }
  try {
    return Colimit{PieceBool::from_spec(spec), std::move(cocone)};
  } catch (const StructuralError& e) {
    throw LogicError(std::string("colimit is not a piecewise Boolean algebra: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Morphisms

std::optional<std::string> morphism_defect(const PBDiagram& f, const PBDiagram& g,
                                           const DiagramMorphism& m) {
  const FinPoset& l = f.base();
  if (m.phi.size() != l.size() || m.eta.size() != l.size()) return "wrong number of components";
  for (std::size_t x : m.phi)
    if (x >= g.base().size()) return "phi leaves the target base";
  if (!is_monotone(l, g.base(), m.phi)) return "phi is not monotone";
  for (std::size_t x = 0; x < l.size(); ++x)
    if (!(m.eta[x].source() == f.algebra(x)) || !(m.eta[x].target() == g.algebra(m.phi[x])))
      return "eta at " + l.id(x) + " has the wrong type";
  for (auto [lo, hi] : l.cover_pairs()) {
    BoolHom a = BoolHom::compose(m.eta[hi], f.edge(lo, hi));
    BoolHom b = BoolHom::compose(g.hom(m.phi[lo], m.phi[hi]), m.eta[lo]);
    if (!(a == b)) return "square at " + l.id(lo) + " < " + l.id(hi) + " does not commute";
  }
  return std::nullopt;
}

DiagramMorphism identity_morphism(const PBDiagram& f) {
  DiagramMorphism m;
  for (std::size_t x = 0; x < f.base().size(); ++x) {
    m.phi.push_back(x);
    m.eta.push_back(BoolHom::identity(f.algebra(x)));
  }
  return m;
}

DiagramMorphism compose(const DiagramMorphism& after, const DiagramMorphism& before) {
  DiagramMorphism m;
  m.phi = compose(after.phi, before.phi);
  for (std::size_t x = 0; x < before.phi.size(); ++x)
    m.eta.push_back(BoolHom::compose(after.eta[before.phi[x]], before.eta[x]));
  return m;
}

// ---------------------------------------------------------------------------
// Sub-algebra diagram of a piecewise Boolean algebra

std::optional<Elem> PbooldDiagram::elem(std::size_t b, std::size_t c) const {
  const auto& row = carrier[b];
  for (std::size_t e = 0; e < row.size(); ++e)
    if (row[e] == c) return static_cast<Elem>(e);
  return std::nullopt;
}

PbooldDiagram pboold(const PieceBool& p) {
  SubDomain s = sub(p);
  const std::size_t n = s.poset.size();
  std::vector<FinBool> algs;
  std::vector<std::vector<std::size_t>> carrier(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [bi, sa] = s.home[i];
    const PbaBlock& blk = p.blocks()[bi];
    std::vector<std::string> labels;
    for (Elem u : sa.atoms) labels.push_back(p.id(blk.carrier_of[u]));
    algs.emplace_back(labels);
    for (Elem e = 0; e < (Elem{1} << sa.atoms.size()); ++e) {
      Elem m = 0;
      for (std::size_t k = 0; k < sa.atoms.size(); ++k)
        if (e & (Elem{1} << k)) m |= sa.atoms[k];
      carrier[i].push_back(blk.carrier_of[m]);
    }
  }
  std::vector<BoolHom> edges;
  for (auto [lo, hi] : s.poset.cover_pairs()) {
    std::vector<Elem> im;
    for (std::size_t k = 0; k < algs[lo].atom_count(); ++k) {
      std::size_t c = carrier[lo][std::size_t{1} << k];
      auto it = std::find(carrier[hi].begin(), carrier[hi].end(), c);
      if (it == carrier[hi].end()) throw LogicError("subalgebra inclusion leaves its target");
      im.push_back(static_cast<Elem>(it - carrier[hi].begin()));
    }
    edges.emplace_back(algs[lo], algs[hi], std::move(im));
  }
  FinPoset base = s.poset;
  return PbooldDiagram{std::move(s), PBDiagram(std::move(base), std::move(algs), std::move(edges)),
                       std::move(carrier)};
}

DiagramMorphism pboold_on_hom(const PieceBoolHom& f, const PbooldDiagram& s, const PbooldDiagram& t) {
  DiagramMorphism m;
  m.phi = sub_on_hom(f, s.sub, t.sub);
  for (std::size_t b = 0; b < m.phi.size(); ++b) {
    const FinBool& src = s.diagram.algebra(b);
    std::vector<Elem> im;
    for (std::size_t k = 0; k < src.atom_count(); ++k) {
      auto e = t.elem(m.phi[b], f(s.carrier[b][std::size_t{1} << k]));
      if (!e) throw LogicError("image of an atom is not in the image subalgebra");
      im.push_back(*e);
    }
    m.eta.emplace_back(src, t.diagram.algebra(m.phi[b]), std::move(im));
  }
  return m;
}

PosetMap colim_on_morphism(const DiagramMorphism& m, const Colimit& cf, const Colimit& cg) {
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  PosetMap out(cf.pba.size(), unset);
  for (std::size_t x = 0; x < cf.cocone.size(); ++x)
    for (std::size_t e = 0; e < cf.cocone[x].size(); ++e) {
      std::size_t a = cf.cocone[x][e];
      std::size_t b = cg.cocone[m.phi[x]][m.eta[x](static_cast<Elem>(e))];
      if (out[a] == unset)
        out[a] = b;
      else if (out[a] != b)
        throw LogicError("induced map on colimits is not well defined at " + cf.pba.id(a));
    }
  for (std::size_t a = 0; a < out.size(); ++a)
    if (out[a] == unset) throw LogicError("colimit element " + cf.pba.id(a) + " has no representative");
  return out;
}

// ---------------------------------------------------------------------------
// Round trips

namespace {

Bits image_bits(const Colimit& c, std::size_t x) {
  Bits b(c.pba.size());
  for (std::size_t e : c.cocone[x]) b.set(e);
  return b;
}

struct PbaUnit {
  PbooldDiagram d;
  Colimit c;
  PosetMap map;
};

PbaUnit pba_unit(const PieceBool& p) {
  PbooldDiagram d = pboold(p);
  Colimit c = colim(d.diagram);
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  PosetMap map(p.size(), unset);
  for (std::size_t b = 0; b < d.carrier.size(); ++b)
    for (std::size_t e = 0; e < d.carrier[b].size(); ++e) {
      std::size_t x = d.carrier[b][e], y = c.cocone[b][e];
      if (map[x] == unset)
        map[x] = y;
      else if (map[x] != y)
        throw LogicError("element " + p.id(x) + " has two classes in the colimit");
    }
  for (std::size_t x = 0; x < map.size(); ++x)
    if (map[x] == unset) throw LogicError("element " + p.id(x) + " lies in no subalgebra");
  return {std::move(d), std::move(c), std::move(map)};
}

PieceBoolHom checked_hom(const PieceBool& a, const PieceBool& b, PosetMap map, const char* what) {
  try {
    return PieceBoolHom(a, b, std::move(map));
  } catch (const UsageError& e) {
    throw LogicError(std::string(what) + " is not a homomorphism: " + e.what());
  }
}

}  // namespace

Reconstruction reconstruct_and_verify(const FinPoset& l, const Orientation& o) {
  PBDiagram f = functor_from_domain(l, o);
  Colimit c = colim(f);
  SubDomain s = sub(c.pba);
  const std::size_t n = l.size();
  PosetMap fm(n), gm(s.poset.size());
  std::vector<Bits> fb;
  for (std::size_t x = 0; x < n; ++x) {
    fb.push_back(image_bits(c, x));
    auto i = s.find(fb.back());
    if (!i) throw LogicError("image of " + l.id(x) + " is not a subalgebra of the colimit");
    fm[x] = *i;
  }
  if (!is_order_iso(l, s.poset, fm)) throw LogicError("x -> image is not an order isomorphism");
  for (std::size_t b = 0; b < s.poset.size(); ++b) {
    std::vector<std::size_t> xs;
    for (std::size_t x = 0; x < n; ++x)
      if (s.carrier[b].is_subset_of(fb[x])) xs.push_back(x);
    auto m = xs.empty() ? std::nullopt : meet(l, xs);
    if (!m) throw LogicError("subalgebra " + s.poset.id(b) + " has no meet of containing elements");
    gm[b] = *m;
  }
  for (std::size_t x = 0; x < n; ++x)
    if (gm[fm[x]] != x) throw LogicError("g o f differs from the identity at " + l.id(x));
  for (std::size_t b = 0; b < gm.size(); ++b)
    if (fm[gm[b]] != b) throw LogicError("f o g differs from the identity at " + s.poset.id(b));
  return Reconstruction{std::move(f), std::move(c), std::move(s), std::move(fm), std::move(gm)};
}

PosetMap verify_pba_roundtrip(const PieceBool& p) {
  PbaUnit u = pba_unit(p);
  PieceBoolHom h = checked_hom(p, u.c.pba, u.map, "b -> [b]");
  if (!h.is_iso()) throw LogicError("b -> [b] is not an isomorphism");
  return u.map;
}

DiagramUnit verify_diagram_roundtrip(const PBDiagram& f) {
  Colimit c = colim(f);
  PbooldDiagram d = pboold(c.pba);
  DiagramMorphism m;
  const FinPoset& l = f.base();
  for (std::size_t x = 0; x < l.size(); ++x) {
    auto b = d.sub.find(image_bits(c, x));
    if (!b) throw LogicError("image of " + l.id(x) + " is not a subalgebra of the colimit");
    m.phi.push_back(*b);
    std::vector<Elem> im;
    for (std::size_t k = 0; k < f.algebra(x).atom_count(); ++k) {
      auto e = d.elem(*b, c.cocone[x][std::size_t{1} << k]);
      if (!e) throw LogicError("cocone leaves the image subalgebra");
      im.push_back(*e);
    }
    try {
      m.eta.emplace_back(f.algebra(x), d.diagram.algebra(*b), std::move(im));
    } catch (const UsageError& e) {
      throw LogicError(std::string("unit component is not a homomorphism: ") + e.what());
    }
    if (!m.eta.back().injective() ||
        f.algebra(x).atom_count() != d.diagram.algebra(*b).atom_count())
      throw LogicError("unit component at " + l.id(x) + " is not an isomorphism");
  }
  if (!is_order_iso(l, d.sub.poset, m.phi)) throw LogicError("unit is not an order isomorphism of bases");
  if (auto why = morphism_defect(f, d.diagram, m)) throw LogicError("unit is not a morphism: " + *why);
  return DiagramUnit{std::move(c), std::move(d), std::move(m)};
}

void verify_pba_naturality(const PieceBoolHom& f) {
  PbaUnit up = pba_unit(f.source());
  PbaUnit uq = pba_unit(f.target());
  DiagramMorphism m = pboold_on_hom(f, up.d, uq.d);
  if (auto why = morphism_defect(up.d.diagram, uq.d.diagram, m))
    throw LogicError("induced diagram morphism is invalid: " + *why);
  PosetMap cm = colim_on_morphism(m, up.c, uq.c);
  checked_hom(up.c.pba, uq.c.pba, cm, "induced colimit map");
  for (std::size_t b = 0; b < f.source().size(); ++b)
    if (cm[up.map[b]] != uq.map[f(b)])
      throw LogicError("naturality square fails at " + f.source().id(b));
}

void verify_diagram_naturality(const PBDiagram& f, const PBDiagram& g, const DiagramMorphism& m) {
  if (auto why = morphism_defect(f, g, m)) throw UsageError("not a diagram morphism: " + *why);
  DiagramUnit uf = verify_diagram_roundtrip(f);
  DiagramUnit ug = verify_diagram_roundtrip(g);
  PosetMap cm = colim_on_morphism(m, uf.colimit, ug.colimit);
  PieceBoolHom h = checked_hom(uf.colimit.pba, ug.colimit.pba, cm, "induced colimit map");
  DiagramMorphism pm = pboold_on_hom(h, uf.pboold, ug.pboold);
  if (!(compose(pm, uf.unit) == compose(ug.unit, m)))
    throw LogicError("unit naturality square does not commute");
}

}  // namespace pbdom
