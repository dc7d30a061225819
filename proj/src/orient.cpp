#include "pbdom/orient.hpp"

#include "pbdom/domain.hpp"
#include "pbdom/error.hpp"
#include "pbdom/lattice.hpp"

#include <algorithm>

namespace pbdom {
namespace {

std::vector<std::size_t> pair_of(const PieceBool& p, const SubDomain& s, std::size_t b) {
  std::vector<std::size_t> out;
  for (std::size_t c : FinPoset::members(s.carrier[b]))
    if (c != p.zero() && c != p.one()) out.push_back(c);
  if (out.size() != 2) throw UsageError("sub(P) element " + s.poset.id(b) + " is not an atom");
  return out;
}

std::vector<std::size_t> atoms_of(const PieceBool& p, const SubDomain& s, std::size_t c) {
  const auto& [bi, sa] = s.home[c];
  std::vector<std::size_t> out;
  for (Elem u : sa.atoms) out.push_back(p.blocks()[bi].carrier_of[u]);
  return out;
}

// Candidates among xs that are atoms of cover c.
std::vector<std::size_t> atom_candidates(const std::vector<std::size_t>& xs,
                                         const std::vector<std::size_t>& cover_atoms) {
  std::vector<std::size_t> out;
  for (std::size_t x : xs)
    if (std::find(cover_atoms.begin(), cover_atoms.end(), x) != cover_atoms.end()) out.push_back(x);
  return out;
}

BoolHom wrap_hom(const FinBool& a, const FinBool& b, std::vector<Elem> im, const std::string& what) {
  try {
    return BoolHom(a, b, std::move(im));
  } catch (const UsageError& e) {
    throw LogicError(what + " is not a homomorphism: " + e.what());
  }
}

}  // namespace

std::vector<Orientation> enumerate_orientations(const FinPoset& l) {
  if (!l.bottom()) throw UsageError("poset has no least element");
  auto at = atoms(l);
  if (at.size() > kMaxOrientedAtoms)
    throw ResourceError("too many atoms to enumerate orientations (" + std::to_string(at.size()) + ")");
  std::vector<Orientation> out;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << at.size()); ++c) {
    Orientation o;
    for (std::size_t i = 0; i < at.size(); ++i) {
      o.choice[l.id(at[i])] = (c >> i) & 1 ? "np" : "p";
      if (l.is_maximal(at[i])) o.maximal_defaults.insert(l.id(at[i]));
    }
    out.push_back(std::move(o));
  }
  return out;
}

Orientation orient_sub(const PieceBool& p, const SubDomain& s) {
  const FinPoset& l = s.poset;
  Orientation o;
  for (std::size_t b : atoms(l)) {
    auto xs = pair_of(p, s, b);
    if (l.is_maximal(b)) {
      o.choice[l.id(b)] = p.id(std::min(xs[0], xs[1]));
      o.maximal_defaults.insert(l.id(b));
      continue;
    }
    std::optional<std::size_t> pick;
    for (const auto& comp : cover_components(l, b)) {
      auto cand = atom_candidates(xs, atoms_of(p, s, comp.front()));
      if (cand.size() != 1)
        throw LogicError("no unique atom of " + l.id(comp.front()) + " inside " + l.id(b));
      if (pick && *pick != cand[0])
        throw LogicError("orientation of " + l.id(b) + " depends on the cover: " + p.id(*pick) +
                         " vs " + p.id(cand[0]) + " at " + l.id(comp.front()));
      pick = cand[0];
    }
    o.choice[l.id(b)] = p.id(*pick);
  }
  return o;
}

std::vector<std::string> cover_dependent_atoms(const PieceBool& p, const SubDomain& s) {
  const FinPoset& l = s.poset;
  std::vector<std::string> out;
  for (std::size_t b : atoms(l)) {
    if (l.is_maximal(b)) continue;
    auto xs = pair_of(p, s, b);
    std::optional<std::size_t> pick;
    bool bad = false;
    for (std::size_t c : l.upper_covers(b)) {
      auto cand = atom_candidates(xs, atoms_of(p, s, c));
      if (cand.size() != 1 || (pick && *pick != cand[0])) bad = true;
      if (cand.size() == 1) pick = cand[0];
    }
    if (bad) out.push_back(l.id(b));
  }
  return out;
}

PBDiagram extend_to_diagram(const FinPoset& l, const Orientation& o) {
  PBDiagram f = functor_from_domain(l, o);
  const auto& cp = l.cover_pairs();
  for (std::size_t a : atoms(l)) {
    if (l.is_maximal(a)) continue;
    const FinBool& fa = f.algebra(a);
    const Elem b = fa.parse_key(o.choice.at(l.id(a)));
    std::vector<std::size_t> refs;
    for (const auto& comp : cover_components(l, a)) refs.push_back(comp.front());
    for (std::size_t y : l.upper_covers(a)) {
      const BoolHom& e = f.edge(a, y);
      BoolHom flipped(fa, f.algebra(y), {e.atom_images()[1], e.atom_images()[0]});
      if (std::find(refs.begin(), refs.end(), y) != refs.end()) {
        if (!f.algebra(y).is_atom(flipped(b))) continue;
        throw LogicError("flipping " + l.id(a) + " < " + l.id(y) + " keeps the orientation rule");
      }
      std::vector<BoolHom> edges = f.edges();
      for (std::size_t k = 0; k < cp.size(); ++k)
        if (cp[k] == FinPoset::Cover{a, y}) edges[k] = flipped;
      PBDiagram alt(l, f.algebras(), std::move(edges));
      if (check_diagram(alt).ok)
        throw LogicError("orientation does not determine the edge " + l.id(a) + " < " + l.id(y));
    }
  }
  return f;
}

Orientation restrict_to_orientation(const PBDiagram& f) {
  const FinPoset& l = f.base();
  Orientation o;
  for (std::size_t a : atoms(l)) {
    const FinBool& fa = f.algebra(a);
    if (fa.atom_count() != 2) throw LogicError("algebra at atom " + l.id(a) + " is not four-element");
    if (l.is_maximal(a)) {
      o.choice[l.id(a)] = fa.key(fa.atom(0));
      o.maximal_defaults.insert(l.id(a));
      continue;
    }
    std::optional<Elem> pick;
    for (const auto& comp : cover_components(l, a)) {
      const std::size_t r = comp.front();
      const BoolHom& e = f.edge(a, r);
      std::vector<Elem> cand;
      for (Elem v : {fa.atom(0), fa.atom(1)})
        if (f.algebra(r).is_atom(e(v))) cand.push_back(v);
      if (cand.size() != 1)
        throw LogicError("no unique element of F(" + l.id(a) + ") goes to an atom of F(" + l.id(r) + ")");
      if (pick && *pick != cand[0])
        throw LogicError("orientation of " + l.id(a) + " depends on the cover group at " + l.id(r));
      pick = cand[0];
    }
    o.choice[l.id(a)] = fa.key(*pick);
  }
  return o;
}

bool is_canonical(const PBDiagram& f) {
  for (std::size_t x = 0; x < f.base().size(); ++x)
    if (!(f.algebra(x) == canonical_algebra(f.base(), x))) return false;
  return true;
}

Normalized normalize(const PBDiagram& f) {
  const FinPoset& l = f.base();
  if (!is_domain(l)) throw UsageError("base poset is not a domain");
  const std::size_t n = l.size();
  Orientation o = restrict_to_orientation(f);
  std::vector<FinBool> algs;
  DiagramMorphism iso;
  for (std::size_t x = 0; x < n; ++x) {
    FinBool c = canonical_algebra(l, x);
    const FinBool& a = f.algebra(x);
    if (a.atom_count() != c.atom_count())
      throw LogicError("algebra at " + l.id(x) + " has the wrong number of atoms");
    const std::size_t h = height(l, x);
    iso.phi.push_back(x);
    if (h == 0) {
      iso.eta.emplace_back(a, c, std::vector<Elem>{c.one()});
    } else if (h == 1) {
      Elem b = a.parse_key(o.choice.at(l.id(x)));
      std::vector<Elem> im(2);
      im[b == 1 ? 0 : 1] = c.atom(0);
      im[b == 1 ? 1 : 0] = c.atom(1);
      iso.eta.emplace_back(a, c, std::move(im));
    } else {
      auto alpha = canonical_alpha(l, x);
      SubalgebraLattice la = subalgebras(a);
      SubalgebraLattice lc = subalgebras(c);
      PosetMap psi(la.subs.size(), la.subs.size());
      for (const auto& [z, s] : alpha)
        psi[la.index_of(direct_image(f.hom(z, x), Subalgebra::whole(f.algebra(z))))] = lc.index_of(s);
      if (std::count(psi.begin(), psi.end(), la.subs.size()))
        throw LogicError("subobjects at " + l.id(x) + " do not cover Sub(F(x))");
      iso.eta.push_back(lift_sub_iso(la, lc, psi));
    }
    algs.push_back(std::move(c));
  }
  std::vector<BoolHom> edges;
  for (auto [lo, hi] : l.cover_pairs())
    edges.push_back(BoolHom::compose(iso.eta[hi],
                                     BoolHom::compose(f.edge(lo, hi), BoolHom::inverse(iso.eta[lo]))));
  return Normalized{PBDiagram(l, std::move(algs), std::move(edges)), std::move(iso)};
}

DiagramMorphism transport(const DiagramMorphism& m, const Normalized& nf, const Normalized& ng) {
  DiagramMorphism out;
  out.phi = m.phi;
  for (std::size_t x = 0; x < m.phi.size(); ++x)
    out.eta.push_back(BoolHom::compose(ng.iso.eta[m.phi[x]],
                                       BoolHom::compose(m.eta[x], BoolHom::inverse(nf.iso.eta[x]))));
  return out;
}

std::optional<std::string> oriented_defect(const FinPoset& l, const Orientation& o,
                                           const FinPoset& l2, const Orientation& o2,
                                           const OrientedDomainMorphism& m) {
  if (m.phi.size() != l.size()) return "phi has the wrong size";
  for (std::size_t y : m.phi)
    if (y >= l2.size()) return "phi leaves the target";
  if (!is_monotone(l, l2, m.phi)) return "phi is not monotone";
  auto bot = l.bottom(), bot2 = l2.bottom();
  if (!bot || !bot2) return "bases need least elements";
  if (m.phi[*bot] != *bot2) return "phi does not preserve the bottom";
  auto at = atoms(l);
  for (std::size_t a : at) {
    const std::size_t y = m.phi[a];
    if (y != *bot2 && !l2.covers(*bot2, y))
      return "atom " + l.id(a) + " goes to " + l2.id(y) + ", neither an atom nor bottom";
    auto it = m.eta.find(a);
    if (it == m.eta.end()) return "no eta at atom " + l.id(a);
    if (!(it->second.source() == canonical_algebra(l, a)) ||
        !(it->second.target() == canonical_algebra(l2, y)))
      return "eta at " + l.id(a) + " has the wrong type";
    if (y != *bot2 && !l2.is_maximal(y)) {
      Elem b = it->second.source().parse_key(o.choice.at(l.id(a)));
      Elem b2 = it->second.target().parse_key(o2.choice.at(l2.id(y)));
      if (it->second(b) != b2) return "eta at " + l.id(a) + " does not preserve the orientation";
    }
  }
  for (const auto& [a, e] : m.eta)
    if (std::find(at.begin(), at.end(), a) == at.end()) return "eta given at a non-atom";
  for (std::size_t x = 0; x < l.size(); ++x) {
    std::vector<std::size_t> emb, emb2;
    FinPoset down = l.ideal(x, &emb);
    FinPoset down2 = l2.ideal(m.phi[x], &emb2);
    for (std::size_t a : atoms(down)) {
      if (!is_modular_element(down, a)) continue;
      auto it = std::find(emb2.begin(), emb2.end(), m.phi[emb[a]]);
      if (it == emb2.end()) return "phi is not monotone";
      if (!is_modular_element(down2, static_cast<std::size_t>(it - emb2.begin())))
        return "modular atom " + l.id(emb[a]) + " below " + l.id(x) + " is not sent to a modular element";
    }
  }
  return std::nullopt;
}

OrientedDomainMorphism restrict_morphism(const DiagramMorphism& m, const PBDiagram& f) {
  OrientedDomainMorphism out;
  out.phi = m.phi;
  for (std::size_t a : atoms(f.base())) out.eta.emplace(a, m.eta[a]);
  return out;
}

DiagramMorphism extend_morphism(const OrientedDomainMorphism& m, const PBDiagram& f, const PBDiagram& g) {
  const FinPoset& l = f.base();
  if (m.phi.size() != l.size()) throw UsageError("phi has the wrong size");
  if (!is_monotone(l, g.base(), m.phi)) throw UsageError("phi is not monotone");
  DiagramMorphism out;
  out.phi = m.phi;
  auto at = atoms(l);
  for (std::size_t x = 0; x < l.size(); ++x) {
    const FinBool& src = f.algebra(x);
    const FinBool& dst = g.algebra(m.phi[x]);
    const std::size_t h = height(l, x);
    if (h == 0) {
      out.eta.push_back(wrap_hom(src, dst, {dst.one()}, "eta at the bottom"));
    } else if (h == 1) {
      auto it = m.eta.find(x);
      if (it == m.eta.end()) throw UsageError("no eta at atom " + l.id(x));
      if (!(it->second.source() == src) || !(it->second.target() == dst))
        throw UsageError("eta at " + l.id(x) + " has the wrong type");
      out.eta.push_back(it->second);
    } else {
      std::vector<std::optional<Elem>> val(src.size());
      for (std::size_t a : at) {
        if (!l.leq(a, x)) continue;
        BoolHom fa = f.hom(a, x);
        BoolHom ga = g.hom(m.phi[a], m.phi[x]);
        const BoolHom& ea = m.eta.at(a);
        for (Elem b = 0; b <= f.algebra(a).one(); ++b) {
          Elem bp = fa(b), v = ga(ea(b));
          if (val[bp] && *val[bp] != v)
            throw LogicError("eta at " + l.id(x) + " is not well defined on " + src.key(bp));
          val[bp] = v;
        }
      }
      std::vector<Elem> im;
      for (std::size_t i = 0; i < src.atom_count(); ++i) {
        if (!val[src.atom(i)]) throw LogicError("eta at " + l.id(x) + " is not determined on an atom");
        im.push_back(*val[src.atom(i)]);
      }
      BoolHom e = wrap_hom(src, dst, std::move(im), "eta at " + l.id(x));
      for (Elem v = 0; v <= src.one(); ++v)
        if (val[v] && e(v) != *val[v])
          throw LogicError("eta at " + l.id(x) + " does not extend to a homomorphism");
      out.eta.push_back(std::move(e));
    }
  }
  if (auto why = morphism_defect(f, g, out)) throw LogicError("extended morphism is not natural: " + *why);
  return out;
}

void verify_orientation_roundtrip(const FinPoset& l, const Orientation& o) {
  if (!(restrict_to_orientation(extend_to_diagram(l, o)) == o))
    throw LogicError("restrict(extend(o)) differs from o");
}

void verify_diagram_orientation_roundtrip(const PBDiagram& f) {
  const PBDiagram g = is_canonical(f) ? f : normalize(f).diagram;
  if (!(extend_to_diagram(g.base(), restrict_to_orientation(g)) == g))
    throw LogicError("extend(restrict(F)) differs from F");
}

void verify_oriented_morphism_roundtrip(const OrientedDomainMorphism& m, const PBDiagram& f,
                                        const PBDiagram& g) {
  if (!(restrict_morphism(extend_morphism(m, f, g), f) == m))
    throw LogicError("restrict(extend(m)) differs from m");
}

void verify_diagram_morphism_roundtrip(const DiagramMorphism& m, const PBDiagram& f, const PBDiagram& g) {
  if (!(extend_morphism(restrict_morphism(m, f), f, g) == m))
    throw LogicError("extend(restrict(m)) differs from m");
}

}  // namespace pbdom
