#include "pbdom/boolalg.hpp"

#include "pbdom/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <numeric>

namespace pbdom {

std::size_t subalgebra_atom_cap() {
  std::size_t cap = kMaxSubalgebraAtoms;
  if (const char* env = std::getenv("PBDOM_MAX_ATOMS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v < cap) cap = v;
  }
  return cap;
}

// ---------------------------------------------------------------------------
// FinBool

FinBool::FinBool(std::vector<std::string> atom_labels) : atoms_(std::move(atom_labels)) {
  if (atoms_.empty()) throw UsageError("a Boolean algebra needs at least one atom");
  if (atoms_.size() > kMaxBoolAtoms)
    throw UsageError("too many atoms (" + std::to_string(atoms_.size()) + ")");
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i].empty()) throw UsageError("empty atom label");
    if (!index_.emplace(atoms_[i], i).second)
      throw UsageError("duplicate atom label '" + atoms_[i] + "'");
  }
}

std::optional<std::size_t> FinBool::atom_index(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> FinBool::labels(Elem x) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    if (x & atom(i)) out.push_back(atoms_[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::string FinBool::key(Elem x) const {
  std::string out;
  for (const auto& l : labels(x)) {
    if (!out.empty()) out += ',';
    out += l;
  }
  return out;
}

Elem FinBool::from_labels(const std::vector<std::string>& labels) const {
  Elem x = 0;
  for (const auto& l : labels) {
    auto i = atom_index(l);
    if (!i) throw UsageError("unknown atom '" + l + "'");
    x |= atom(*i);
  }
  return x;
}

Elem FinBool::parse_key(const std::string& key) const {
  std::vector<std::string> parts;
  if (key.empty()) return 0;
  if (auto i = atom_index(key)) return atom(*i);
  std::size_t start = 0;
  while (true) {
    std::size_t comma = key.find(',', start);
    parts.push_back(key.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return from_labels(parts);
}

// ---------------------------------------------------------------------------
// BoolHom

BoolHom::BoolHom(FinBool source, FinBool target, std::vector<Elem> atom_images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(atom_images)) {
  if (images_.size() != source_.atom_count())
    throw UsageError("homomorphism needs one image per source atom");
  Elem seen = 0;
  for (Elem y : images_) {
    if (!target_.contains(y)) throw UsageError("atom image outside the target algebra");
    if (seen & y) throw UsageError("atom images overlap");
    seen |= y;
  }
  if (seen != target_.one()) throw UsageError("atom images do not join to one");
}

BoolHom BoolHom::identity(const FinBool& b) {
  std::vector<Elem> im;
  for (std::size_t i = 0; i < b.atom_count(); ++i) im.push_back(b.atom(i));
  return BoolHom(b, b, std::move(im));
}

BoolHom BoolHom::compose(const BoolHom& after, const BoolHom& before) {
  if (!(before.target() == after.source()))
    throw UsageError("homomorphisms are not composable");
  std::vector<Elem> im;
  for (Elem y : before.images_) im.push_back(after(y));
  return BoolHom(before.source(), after.target(), std::move(im));
}

BoolHom BoolHom::inverse(const BoolHom& f) {
  if (f.source_.atom_count() != f.target_.atom_count() || !f.injective())
    throw UsageError("homomorphism is not invertible");
  std::vector<Elem> im(f.target_.atom_count(), 0);
  for (std::size_t i = 0; i < f.images_.size(); ++i) {
    Elem y = f.images_[i];
    if (!f.target_.is_atom(y)) throw UsageError("homomorphism is not invertible");
    im[static_cast<std::size_t>(std::countr_zero(y))] = f.source_.atom(i);
  }
  return BoolHom(f.target_, f.source_, std::move(im));
}

Elem BoolHom::operator()(Elem x) const {
  Elem y = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (x & (Elem{1} << i)) y |= images_[i];
  return y;
}

bool BoolHom::injective() const {
  return std::none_of(images_.begin(), images_.end(), [](Elem y) { return y == 0; });
}

// ---------------------------------------------------------------------------
// Subalgebra

bool Subalgebra::is_valid_in(const FinBool& b) const {
  Elem seen = 0;
  for (Elem a : atoms) {
    if (a == 0 || !b.contains(a) || (seen & a)) return false;
    seen |= a;
  }
  return seen == b.one() && std::is_sorted(atoms.begin(), atoms.end());
}

Subalgebra Subalgebra::from_partition(const FinBool& b, const Partition& pi) {
  Subalgebra s;
  for (const auto& block : pi.blocks) {
    Elem m = 0;
    for (int e : block) {
      if (e < 0 || static_cast<std::size_t>(e) >= b.atom_count())
        throw UsageError("partition element out of range");
      m |= b.atom(static_cast<std::size_t>(e));
    }
    s.atoms.push_back(m);
  }
  std::sort(s.atoms.begin(), s.atoms.end());
  if (!s.is_valid_in(b)) throw UsageError("not a partition of the atoms");
  return s;
}

Subalgebra Subalgebra::from_elements(const FinBool& b, const std::vector<Elem>& elems) {
  std::vector<Elem> set(elems);
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  auto has = [&](Elem x) { return std::binary_search(set.begin(), set.end(), x); };
  for (Elem x : set)
    if (!b.contains(x)) throw UsageError("element outside the algebra");
  if (!has(b.zero()) || !has(b.one())) throw UsageError("element set lacks 0 or 1");
  for (Elem x : set) {
    if (!has(b.neg(x))) throw UsageError("element set not closed under negation");
    for (Elem y : set)
      if (!has(x & y)) throw UsageError("element set not closed under meet");
  }
  // atoms: minimal nonzero members
  Subalgebra s;
  for (Elem x : set) {
    if (x == 0) continue;
    bool minimal = true;
    for (Elem y : set)
      if (y != 0 && y != x && (y & ~x) == 0) minimal = false;
    if (minimal) s.atoms.push_back(x);
  }
  std::sort(s.atoms.begin(), s.atoms.end());
  return s;
}

Subalgebra Subalgebra::whole(const FinBool& b) {
  Subalgebra s;
  for (std::size_t i = 0; i < b.atom_count(); ++i) s.atoms.push_back(b.atom(i));
  return s;
}

Subalgebra Subalgebra::trivial(const FinBool& b) { return Subalgebra{{b.one()}}; }

std::vector<Elem> Subalgebra::elements() const {
  std::vector<Elem> out;
  const std::size_t k = atoms.size();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) {
    Elem x = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (s & (std::uint64_t{1} << i)) x |= atoms[i];
    out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Subalgebra::contains(Elem x) const {
  for (Elem a : atoms)
    if ((x & a) != 0 && (a & ~x) != 0) return false;
  return true;
}

bool Subalgebra::included_in(const Subalgebra& o) const {
  return std::all_of(atoms.begin(), atoms.end(), [&](Elem a) { return o.contains(a); });
}

Partition Subalgebra::partition(const FinBool& b) const {
  Partition p;
  for (Elem a : atoms) {
    std::vector<int> block;
    for (std::size_t i = 0; i < b.atom_count(); ++i)
      if (a & b.atom(i)) block.push_back(static_cast<int>(i));
    p.blocks.push_back(std::move(block));
  }
  std::sort(p.blocks.begin(), p.blocks.end());
  return p;
}

std::string Subalgebra::label(const FinBool& b) const {
  std::vector<std::string> parts;
  for (Elem a : atoms) parts.push_back(b.key(a));
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += '/';
    out += parts[i];
  }
  return out;
}

Subalgebra sub_join(const Subalgebra& a, const Subalgebra& c) {
  Subalgebra s;
  for (Elem x : a.atoms)
    for (Elem y : c.atoms)
      if (x & y) s.atoms.push_back(x & y);
  std::sort(s.atoms.begin(), s.atoms.end());
  return s;
}

Subalgebra sub_meet(const Subalgebra& a, const Subalgebra& c) {
  std::vector<Elem> blocks(a.atoms);
  for (Elem y : c.atoms) {
    Elem merged = y;
    std::vector<Elem> rest;
    for (Elem x : blocks) {
      if (x & merged)
        merged |= x;
      else
        rest.push_back(x);
    }
    rest.push_back(merged);
    blocks = std::move(rest);
  }
  std::sort(blocks.begin(), blocks.end());
  return Subalgebra{blocks};
}

// ---------------------------------------------------------------------------
// Subalgebra lattice

std::size_t SubalgebraLattice::index_of(const Subalgebra& s) const {
  auto it = std::lower_bound(subs.begin(), subs.end(), s, [](const Subalgebra& x, const Subalgebra& y) {
    if (x.atoms.size() != y.atoms.size()) return x.atoms.size() < y.atoms.size();
    return x.atoms < y.atoms;
  });
  if (it == subs.end() || !(*it == s)) throw UsageError("not a subalgebra of this algebra");
  return static_cast<std::size_t>(it - subs.begin());
}

namespace {

bool by_size_then_atoms(const Subalgebra& x, const Subalgebra& y) {
  if (x.atoms.size() != y.atoms.size()) return x.atoms.size() < y.atoms.size();
  return x.atoms < y.atoms;
}

}  // namespace

SubalgebraLattice subalgebras(const FinBool& b) {
  if (b.atom_count() > subalgebra_atom_cap())
    throw ResourceError("subalgebra enumeration is capped at " +
                        std::to_string(subalgebra_atom_cap()) + " atoms");
  std::vector<Subalgebra> subs;
  for (const auto& pi : set_partitions(static_cast<int>(b.atom_count())))
    subs.push_back(Subalgebra::from_partition(b, pi));
  std::sort(subs.begin(), subs.end(), by_size_then_atoms);
  std::vector<std::string> ids;
  for (const auto& s : subs) ids.push_back(s.label(b));
  std::vector<FinPoset::Cover> covers;
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = 0; j < subs.size(); ++j)
      if (subs[j].atoms.size() == subs[i].atoms.size() + 1 && subs[i].included_in(subs[j]))
        covers.emplace_back(i, j);
  FinPoset poset = FinPoset::from_indices(std::move(ids), std::move(covers));
  return SubalgebraLattice{b, std::move(poset), std::move(subs)};
}

std::vector<Elem> subalgebra_of_partition(const FinBool& b, const Partition& pi) {
  return Subalgebra::from_partition(b, pi).elements();
}

Subalgebra direct_image(const BoolHom& f, const Subalgebra& a) {
  if (!a.is_valid_in(f.source())) throw UsageError("not a subalgebra of the source");
  Subalgebra s;
  for (Elem x : a.atoms) {
    Elem y = f(x);
    if (y) s.atoms.push_back(y);
  }
  std::sort(s.atoms.begin(), s.atoms.end());
  return s;
}

// ---------------------------------------------------------------------------
// Lifting subalgebra-lattice isomorphisms

namespace {

bool induces(const BoolHom& f, const SubalgebraLattice& a, const SubalgebraLattice& b,
             const PosetMap& psi) {
  for (std::size_t i = 0; i < a.subs.size(); ++i)
    if (!(direct_image(f, a.subs[i]) == b.subs[psi[i]])) return false;
  return true;
}

void check_lattice_iso(const SubalgebraLattice& a, const SubalgebraLattice& b, const PosetMap& psi) {
  if (!is_order_iso(a.poset, b.poset, psi))
    throw UsageError("map is not an isomorphism of subalgebra lattices");
}

}  // namespace

std::vector<BoolHom> all_sub_iso_lifts(const SubalgebraLattice& a, const SubalgebraLattice& b,
                                       const PosetMap& psi) {
  check_lattice_iso(a, b, psi);
  const FinBool& A = a.base;
  const FinBool& B = b.base;
  if (A.atom_count() != B.atom_count())
    throw LogicError("isomorphic subalgebra lattices over algebras of different size");
  const std::size_t n = A.atom_count();
  std::vector<BoolHom> out;
  if (n == 1) {
    out.emplace_back(A, B, std::vector<Elem>{B.one()});
  } else if (n == 2) {
    out.emplace_back(A, B, std::vector<Elem>{B.atom(0), B.atom(1)});
    out.emplace_back(A, B, std::vector<Elem>{B.atom(1), B.atom(0)});
  } else {
    // {0, a, ~a, 1} determines the image of the atom a: the singleton side.
    std::vector<Elem> im(n);
    for (std::size_t i = 0; i < n; ++i) {
      Subalgebra s{{A.atom(i), A.neg(A.atom(i))}};
      std::sort(s.atoms.begin(), s.atoms.end());
      const Subalgebra& t = b.subs[psi[a.index_of(s)]];
      if (t.atoms.size() != 2) throw LogicError("lattice isomorphism does not preserve rank");
      int singles = 0;
      for (Elem y : t.atoms)
        if (B.is_atom(y)) {
          im[i] = y;
          ++singles;
        }
      if (singles != 1) throw LogicError("lattice isomorphism is not induced by an atom bijection");
    }
    try {
      out.emplace_back(A, B, std::move(im));
    } catch (const UsageError&) {
      throw LogicError("lattice isomorphism is not induced by an atom bijection");
    }
  }
  for (const auto& f : out)
    if (!induces(f, a, b, psi)) throw LogicError("lifted isomorphism does not induce the lattice map");
  return out;
}

BoolHom lift_sub_iso(const SubalgebraLattice& a, const SubalgebraLattice& b, const PosetMap& psi,
                     const LiftTiebreak& tiebreak) {
  auto lifts = all_sub_iso_lifts(a, b, psi);
  if (lifts.size() == 1 || !tiebreak) return lifts.front();
  for (const auto& f : lifts)
    if (f(tiebreak->first) == tiebreak->second) return f;
  throw UsageError("tiebreak names a pair no lift realizes");
}

std::optional<BoolHom> bool_iso_search(const FinBool& a, const FinBool& b) {
  if (a.atom_count() != b.atom_count()) return std::nullopt;
  const std::size_t n = a.atom_count();
  auto sorted = [n](const FinBool& x) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t i, std::size_t j) { return x.atoms()[i] < x.atoms()[j]; });
    return idx;
  };
  auto ia = sorted(a);
  auto ib = sorted(b);
  std::vector<Elem> im(n);
  for (std::size_t k = 0; k < n; ++k) im[ia[k]] = b.atom(ib[k]);
  return BoolHom(a, b, std::move(im));
}

std::vector<BoolHom> all_bool_isos(const FinBool& a, const FinBool& b) {
  std::vector<BoolHom> out;
  if (a.atom_count() != b.atom_count()) return out;
  std::vector<std::size_t> perm(a.atom_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<Elem> im;
    for (std::size_t i : perm) im.push_back(b.atom(i));
    out.emplace_back(a, b, std::move(im));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace pbdom
