#include "pbdom/verify.hpp"

#include "pbdom/diagram.hpp"
#include "pbdom/domain.hpp"
#include "pbdom/enumerate.hpp"
#include "pbdom/error.hpp"
#include "pbdom/iso.hpp"
#include "pbdom/lattice.hpp"
#include "pbdom/orient.hpp"

#include <chrono>
#include <functional>
#include <set>

namespace pbdom {
namespace {

constexpr std::size_t kMaxWitnesses = 5;

using Task = std::pair<std::string, std::function<void()>>;

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

CriterionResult started(int id, std::string title) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  return r;
}

void fail(CriterionResult& r, const std::string& what) {
  r.pass = false;
  ++r.failures;
  if (r.witnesses.size() < kMaxWitnesses) r.witnesses.push_back(what);
}

void expect(CriterionResult& r, bool cond, const std::string& what) {
  ++r.checked;
  if (!cond) fail(r, what);
}

CriterionResult run_tasks(int id, std::string title, const std::vector<Task>& tasks, Exec exec) {
  Timer t;
  CriterionResult r = started(id, std::move(title));
  auto out = run_batch(tasks.size(), [&](std::size_t i) { tasks[i].second(); }, exec);
  r.checked = tasks.size();
  for (std::size_t i = 0; i < out.size(); ++i)
    if (!out[i].ok) fail(r, tasks[i].first + ": [" + out[i].kind + "] " + out[i].what);
  r.seconds = t.seconds();
  return r;
}

// Bell numbers via the Bell triangle, independent of bell_number().
std::uint64_t bell_triangle(int n) {
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.back();
}

std::size_t by_label(const FinPoset& p, const std::string& label) { return p.index(label); }

PBDiagram extend_item(const Corpus& c, std::size_t i) {
  const auto& [d, o] = c.oriented[i];
  return extend_to_diagram(c.domains[d].poset, o);
}

std::string item_name(const Corpus& c, std::size_t i) {
  const auto& [d, o] = c.oriented[i];
  std::string s = c.domains[d].name + "[";
  bool first = true;
  for (const auto& [k, v] : o.choice) {
    s += (first ? "" : ",") + k + "=" + v;
    first = false;
  }
  return s + "]";
}

void check_colimit_blocks(const PBDiagram& f) {
  Colimit c = colim(f);
  auto maxs = f.base().maximal();
  const auto& blocks = c.pba.blocks();
  if (blocks.size() != maxs.size())
    throw LogicError(std::to_string(blocks.size()) + " blocks for " + std::to_string(maxs.size()) +
                     " maximal elements");
  std::set<Bits> seen;
  for (std::size_t k = 0; k < maxs.size(); ++k) {
    Bits img(c.pba.size());
    for (std::size_t e : c.cocone[maxs[k]]) img.set(e);
    if (img != blocks[k].members)
      throw LogicError("block " + std::to_string(k) + " is not the image of " + f.base().id(maxs[k]));
    if (!seen.insert(img).second) throw LogicError("two maximal elements share a block");
  }
}

}  // namespace

Corpus build_corpus(const VerifyOptions& opt) {
  Corpus c;
  c.pbas = corpus_pbas();
  c.homs = corpus_homs(c.pbas);
  c.domains = corpus_domains(c.pbas, opt.max_size);
  for (std::size_t d = 0; d < c.domains.size(); ++d)
    for (auto& o : enumerate_orientations(c.domains[d].poset)) c.oriented.emplace_back(d, std::move(o));
  return c;
}

CriterionResult check_partition_facts() {
  Timer t;
  CriterionResult r = started(1, "partition lattice sizes, atoms and coatoms");
  const std::uint64_t sizes[] = {1, 2, 5, 15};
  for (int n = 1; n <= 4; ++n)
    expect(r, partition_lattice(n).size() == sizes[n - 1], "|Pi_" + std::to_string(n) + "|");
  const FinPoset p5 = partition_lattice(5);
  expect(r, bell_triangle(5) == 52, "Bell triangle at 5");
  expect(r, p5.size() == bell_triangle(5), "|Pi_5| against the Bell triangle");
  const FinPoset p4 = partition_lattice(4);
  expect(r, atoms(p4).size() == 6, "Pi_4 atoms");
  expect(r, coatoms(p4).size() == 7, "Pi_4 coatoms");
  r.seconds = t.seconds();
  return r;
}

CriterionResult check_modularity_facts() {
  Timer t;
  CriterionResult r = started(2, "modular elements of small partition lattices");
  const FinPoset p4 = partition_lattice(4);
  for (const char* x : {"12/34", "13/24", "14/23"})
    expect(r, !is_modular_element(p4, by_label(p4, x)), std::string(x) + " should not be modular");
  {
    auto ops = LatticeOps::of(p4);
    std::size_t x = by_label(p4, "12/34"), a = by_label(p4, "13/2/4"), y = by_label(p4, "13/24");
    expect(r, p4.leq(a, y), "witness a <= y");
    expect(r, ops->join(a, ops->meet(x, y)) != ops->meet(ops->join(a, x), y),
           "witness pair breaks the modular identity for 12/34");
  }
  std::set<std::string> mods;
  for (std::size_t c : coatoms(p4))
    if (is_modular_element(p4, c)) mods.insert(p4.id(c));
  expect(r, mods == std::set<std::string>{"123/4", "124/3", "134/2", "1/234"}, "modular coatoms of Pi_4");
  for (int n : {3, 5}) {
    const FinPoset p = partition_lattice(n);
    std::size_t count = 0;
    for (std::size_t c : coatoms(p)) count += is_modular_element(p, c);
    expect(r, count == static_cast<std::size_t>(n), "modular coatoms of Pi_" + std::to_string(n));
    if (n == 3) expect(r, count == coatoms(p).size(), "all coatoms of Pi_3 modular");
  }
  r.seconds = t.seconds();
  return r;
}

CriterionResult check_subalgebra_correspondence(int max_atoms) {
  Timer t;
  CriterionResult r = started(3, "subalgebra lattices are dual partition lattices");
  for (int n = 1; n <= max_atoms; ++n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    FinBool b(labels);
    SubalgebraLattice lat = subalgebras(b);
    auto parts = set_partitions(n);
    std::vector<std::size_t> img;
    for (const auto& pi : parts)
      img.push_back(lat.index_of(Subalgebra::from_elements(b, subalgebra_of_partition(b, pi))));
    std::set<std::size_t> distinct(img.begin(), img.end());
    const std::string tag = "n=" + std::to_string(n);
    expect(r, distinct.size() == parts.size() && parts.size() == lat.subs.size(), tag + " bijection");
    bool reversing = true;
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = 0; j < parts.size(); ++j)
        if (parts[i].refines(parts[j]) != lat.poset.leq(img[j], img[i])) reversing = false;
    expect(r, reversing, tag + " order reversal");
  }
  r.seconds = t.seconds();
  return r;
}

CriterionResult check_recognizer_agreement(const VerifyOptions& opt) {
  std::vector<std::pair<std::string, FinPoset>> items;
  for (int k = 1; k <= std::min(opt.max_size, kMaxEnumeratedPoset); ++k) {
    auto ps = enumerate_posets(k);
    for (std::size_t i = 0; i < ps.size(); ++i)
      items.emplace_back("poset" + std::to_string(k) + "-" + std::to_string(i), std::move(ps[i]));
  }
  for (int n = 1; n <= 5; ++n) items.emplace_back("dual-partitions" + std::to_string(n), partition_lattice(n).dual());
  for (int d = 0; d <= 4; ++d) items.emplace_back("boolean-lattice" + std::to_string(d), boolean_lattice(d));
  auto rl = random_lattices(100, opt.seed);
  for (std::size_t i = 0; i < rl.size(); ++i) items.emplace_back("random" + std::to_string(i), std::move(rl[i]));
  std::vector<Task> tasks;
  for (const auto& [name, p] : items) tasks.emplace_back(name, [&p] { agree(p); });
  return run_tasks(4, "recognizer routes agree", tasks, opt.exec);
}

CriterionResult check_height_cover_counts() {
  Timer t;
  CriterionResult r = started(5, "elements of height n <= 3 cover n(n+1)/2 elements in sub(B16)");
  FinBool b({"a", "b", "c", "d"});
  SubDomain s = sub(PieceBool::from_bool(b));
  const std::size_t expected[] = {0, 1, 3, 6};
  std::size_t seen[4] = {0, 0, 0, 0};
  for (std::size_t x = 0; x < s.poset.size(); ++x) {
    std::size_t h = height(s.poset, x);
    if (h < 1 || h > 3) continue;
    ++seen[h];
    expect(r, s.poset.lower_covers(x).size() == expected[h], s.poset.id(x));
  }
  for (int h = 1; h <= 3; ++h) expect(r, seen[h] > 0, "some element of height " + std::to_string(h));
  r.seconds = t.seconds();
  return r;
}

CriterionResult check_reconstruction(const Corpus& c, Exec exec) {
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < c.oriented.size(); ++i)
    tasks.emplace_back(item_name(c, i), [&c, i] {
      const auto& [d, o] = c.oriented[i];
      reconstruct_and_verify(c.domains[d].poset, o);
    });
  return run_tasks(6, "reconstruction from oriented domains", tasks, exec);
}

CriterionResult check_equivalence(const Corpus& c, Exec exec) {
  std::vector<Task> tasks;
  for (const auto& p : c.pbas) {
    tasks.emplace_back("pba:" + p.name, [&p] { verify_pba_roundtrip(p.pba); });
    tasks.emplace_back("pboold:" + p.name, [&p] { verify_diagram_roundtrip(pboold(p.pba).diagram); });
  }
  for (std::size_t i = 0; i < c.oriented.size(); ++i)
    tasks.emplace_back("diagram:" + item_name(c, i), [&c, i] {
      PBDiagram f = extend_item(c, i);
      verify_diagram_roundtrip(f);
      verify_diagram_naturality(f, f, identity_morphism(f));
    });
  for (const auto& h : c.homs)
    tasks.emplace_back("hom:" + h.name, [&c, &h] {
      const PieceBool& p = c.pbas[h.source].pba;
      const PieceBool& q = c.pbas[h.target].pba;
      PieceBoolHom f(p, q, h.map);
      verify_pba_naturality(f);
      PbooldDiagram dp = pboold(p), dq = pboold(q);
      verify_diagram_naturality(dp.diagram, dq.diagram, pboold_on_hom(f, dp, dq));
    });
  return run_tasks(7, "equivalence round trips and naturality", tasks, exec);
}

CriterionResult check_lifting(const Corpus& c, Exec exec) {
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < c.pbas.size(); ++i)
    for (std::size_t j = 0; j < c.pbas.size(); ++j)
      tasks.emplace_back("lift:" + c.pbas[i].name + "->" + c.pbas[j].name, [&c, i, j] {
        const PieceBool& p = c.pbas[i].pba;
        const PieceBool& q = c.pbas[j].pba;
        SubDomain sp = sub(p), sq = sub(q);
        if (sp.poset.size() != sq.poset.size()) return;
        bool maximal_atom = false;
        for (std::size_t a : atoms(sp.poset)) maximal_atom = maximal_atom || sp.poset.is_maximal(a);
        std::size_t isos = 0, bad = 0;
        std::string first;
        for (const auto& phi : all_poset_isos(sp.poset, sq.poset)) {
          ++isos;
          auto lifts = lift_domain_iso(p, sp, q, sq, phi);
          bool ok = !lifts.empty() && ((lifts.size() == 1) == !maximal_atom);
          if (!ok && bad++ == 0) first = std::to_string(lifts.size()) + " lifts";
        }
        if (bad)
          throw LogicError(std::to_string(bad) + " of " + std::to_string(isos) +
                           " domain isomorphisms lift wrongly (first: " + first + ")");
      });
  return run_tasks(8, "domain isomorphisms lift to algebra isomorphisms", tasks, exec);
}

CriterionResult check_orientation_iso(const Corpus& c, Exec exec) {
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < c.oriented.size(); ++i) {
    tasks.emplace_back("orientation:" + item_name(c, i), [&c, i] {
      const auto& [d, o] = c.oriented[i];
      verify_orientation_roundtrip(c.domains[d].poset, o);
    });
    tasks.emplace_back("diagram:" + item_name(c, i), [&c, i] {
      PBDiagram f = extend_item(c, i);
      verify_diagram_orientation_roundtrip(f);
      DiagramMorphism id = identity_morphism(f);
      verify_diagram_morphism_roundtrip(id, f, f);
      verify_oriented_morphism_roundtrip(restrict_morphism(id, f), f, f);
    });
  }
  for (const auto& p : c.pbas)
    tasks.emplace_back("pboold:" + p.name, [&p] { verify_diagram_orientation_roundtrip(pboold(p.pba).diagram); });
  for (const auto& h : c.homs)
    tasks.emplace_back("hom:" + h.name, [&c, &h] {
      const PieceBool& p = c.pbas[h.source].pba;
      const PieceBool& q = c.pbas[h.target].pba;
      PieceBoolHom f(p, q, h.map);
      PbooldDiagram dp = pboold(p), dq = pboold(q);
      Normalized np = normalize(dp.diagram), nq = normalize(dq.diagram);
      DiagramMorphism m = transport(pboold_on_hom(f, dp, dq), np, nq);
      OrientedDomainMorphism om = restrict_morphism(m, np.diagram);
      if (auto why = oriented_defect(np.diagram.base(), restrict_to_orientation(np.diagram), nq.diagram.base(),
                                     restrict_to_orientation(nq.diagram), om))
        throw LogicError("restricted morphism is not an oriented morphism: " + *why);
      verify_oriented_morphism_roundtrip(om, np.diagram, nq.diagram);
      verify_diagram_morphism_roundtrip(m, np.diagram, nq.diagram);
    });
  tasks.emplace_back("atom-merging", [] {
    OrientedExample ex = atom_merging_example();
    if (auto why = oriented_defect(ex.base, ex.orientation, ex.base, ex.orientation, ex.morphism))
      throw UsageError("example is not an oriented morphism: " + *why);
    PBDiagram f = extend_to_diagram(ex.base, ex.orientation);
    verify_oriented_morphism_roundtrip(ex.morphism, f, f);
  });
  return run_tasks(9, "extend and restrict are mutually inverse", tasks, exec);
}

CriterionResult check_colimit_injectivity(const Corpus& c, Exec exec) {
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < c.oriented.size(); ++i)
    tasks.emplace_back(item_name(c, i), [&c, i] { check_colimit_blocks(extend_item(c, i)); });
  for (const auto& p : c.pbas)
    tasks.emplace_back("pboold:" + p.name, [&p] { check_colimit_blocks(pboold(p.pba).diagram); });
  return run_tasks(10, "cocone maps injective, blocks match maximal elements", tasks, exec);
}

std::vector<CriterionResult> verify_all(const VerifyOptions& opt) {
  std::vector<CriterionResult> out;
  out.push_back(check_partition_facts());
  out.push_back(check_modularity_facts());
  out.push_back(check_subalgebra_correspondence());
  out.push_back(check_recognizer_agreement(opt));
  out.push_back(check_height_cover_counts());
  Corpus c = build_corpus(opt);
  out.push_back(check_reconstruction(c, opt.exec));
  out.push_back(check_equivalence(c, opt.exec));
  out.push_back(check_lifting(c, opt.exec));
  out.push_back(check_orientation_iso(c, opt.exec));
  out.push_back(check_colimit_injectivity(c, opt.exec));
  return out;
}

}  // namespace pbdom
