#include "pbdom/corpus.hpp"

#include "pbdom/domain.hpp"
#include "pbdom/enumerate.hpp"
#include "pbdom/error.hpp"
#include "pbdom/lattice.hpp"

namespace pbdom {
namespace {

PieceBool boolean(int atoms) {
  std::vector<std::string> labels;
  for (int i = 0; i < atoms; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  return PieceBool::from_bool(FinBool(labels));
}

// Carrier map from (source id -> target id) pairs; 0 and 1 map to themselves.
PosetMap by_name(const PieceBool& p, const PieceBool& q,
                 const std::vector<std::pair<std::string, std::string>>& pairs) {
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  PosetMap m(p.size(), unset);
  m[p.zero()] = q.zero();
  m[p.one()] = q.one();
  for (const auto& [a, b] : pairs) m[p.index(a)] = q.index(b);
  for (std::size_t x = 0; x < m.size(); ++x)
    if (m[x] == unset) throw LogicError("corpus map leaves " + p.id(x) + " unassigned");
  return m;
}

}  // namespace

PieceBool oml_pair() {
  return PbaBuilder()
      .block({"y", "u1", "v1"}, {{"u1,v1", "ny"}})
      .block({"y", "u2", "v2"}, {{"u2,v2", "ny"}})
      .build();
}

PieceBool twisted_pair() {
  return PbaBuilder()
      .block({"s", "u1", "v1"}, {{"u1,v1", "ns"}})
      .block({"ns", "u2", "v2"}, {{"u2,v2", "s"}})
      .build();
}

PieceBool intransitive_triple() {
  return PbaBuilder()
      .block({"x", "a1", "b1"})
      .block({"c", "d", "e", "f"}, {{"c,d", "a1+x"}, {"e,f", "b1"}})
      .block({"g", "ng"})
      .build();
}

std::vector<NamedPba> corpus_pbas() {
  std::vector<NamedPba> out;
  for (int k = 1; k <= 4; ++k) out.push_back({"bool" + std::to_string(k), boolean(k)});
  out.push_back({"glued", PbaBuilder().block({"a", "na"}).block({"b", "nb"}).build()});
  out.push_back({"glued-relabelled", PbaBuilder().block({"u", "nu"}).block({"v", "nv"}).build()});
  out.push_back({"three-blocks", PbaBuilder().block({"a", "na"}).block({"b", "nb"}).block({"c", "nc"}).build()});
  out.push_back({"oml-pair", oml_pair()});
  out.push_back({"twisted-pair", twisted_pair()});
  out.push_back({"intransitive", intransitive_triple()});
  return out;
}

std::vector<CorpusHom> corpus_homs(const std::vector<NamedPba>& pbas) {
  auto at = [&](const std::string& name) {
    for (std::size_t i = 0; i < pbas.size(); ++i)
      if (pbas[i].name == name) return i;
    throw UsageError("corpus has no PBA named " + name);
  };
  std::vector<CorpusHom> out;
  for (std::size_t i = 0; i < pbas.size(); ++i) {
    PosetMap id(pbas[i].pba.size());
    for (std::size_t x = 0; x < id.size(); ++x) id[x] = x;
    out.push_back({"id:" + pbas[i].name, i, i, std::move(id)});
  }
  auto add = [&](const std::string& name, const std::string& s, const std::string& t,
                 const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::size_t si = at(s), ti = at(t);
    out.push_back({name, si, ti, by_name(pbas[si].pba, pbas[ti].pba, pairs)});
  };
  add("relabel", "glued", "glued-relabelled", {{"a", "u"}, {"na", "nu"}, {"b", "v"}, {"nb", "nv"}});
  add("block-inclusion", "bool2", "glued", {{"a", "a"}, {"b", "na"}});
  add("block-collapse", "glued", "bool2", {{"a", "a"}, {"na", "b"}, {"b", "0"}, {"nb", "1"}});
  add("bool3-onto-bool2", "bool3", "bool2",
      {{"a", "a"}, {"b", "b"}, {"c", "0"}, {"a+b", "1"}, {"a+c", "a"}, {"b+c", "b"}});
  add("bool2-into-bool3", "bool2", "bool3", {{"a", "a"}, {"b", "b+c"}});
  add("three-onto-glued", "three-blocks", "glued",
      {{"a", "a"}, {"na", "na"}, {"b", "b"}, {"nb", "nb"}, {"c", "0"}, {"nc", "1"}});
  add("glued-into-three", "glued", "three-blocks", {{"a", "a"}, {"na", "na"}, {"b", "b"}, {"nb", "nb"}});
  add("bool3-into-oml", "bool3", "oml-pair",
      {{"a", "y"}, {"b", "u1"}, {"c", "v1"}, {"a+b", "u1+y"}, {"a+c", "v1+y"}, {"b+c", "ny"}});
  return out;
}

std::vector<NamedDomain> corpus_domains(const std::vector<NamedPba>& pbas, int max_size) {
  std::vector<NamedDomain> out;
  for (const auto& p : pbas) out.push_back({"sub(" + p.name + ")", sub(p.pba).poset});
  for (int n = 1; n <= 4; ++n) out.push_back({"dual-partitions" + std::to_string(n), partition_lattice(n).dual()});
  for (int k = 1; k <= std::min(max_size, kMaxEnumeratedPoset); ++k) {
    auto ps = enumerate_posets(k);
    for (std::size_t i = 0; i < ps.size(); ++i)
      if (is_domain(ps[i]))
        out.push_back({"poset" + std::to_string(k) + "-" + std::to_string(i), std::move(ps[i])});
  }
  return out;
}

OrientedExample atom_merging_example() {
  FinPoset l = partition_lattice(3).dual();
  Orientation o;
  OrientedDomainMorphism m;
  auto at = atoms(l);
  m.phi.resize(l.size());
  for (std::size_t x = 0; x < l.size(); ++x) m.phi[x] = x;
  for (std::size_t a : at) {
    o.choice[l.id(a)] = "p";
    m.phi[a] = at.front();
    FinBool c({"p", "np"});
    m.eta.emplace(a, BoolHom::identity(c));
  }
  return {std::move(l), std::move(o), std::move(m)};
}

PbaSpec triangle_gluing_spec() {
  return PbaBuilder()
      .block({"a", "b", "c"})
      .block({"c", "d", "e"}, {{"d,e", "a+b"}})
      .block({"e", "f", "a"}, {{"a,f", "c+d"}, {"e,f", "b+c"}})
      .spec();
}

FinPoset triangle_domain() {
  return FinPoset({"0", "a", "c", "e", "b", "d", "f", "T1", "T2", "T3"},
                  {{"0", "a"}, {"0", "c"}, {"0", "e"}, {"0", "b"}, {"0", "d"}, {"0", "f"},
                   {"a", "T1"}, {"b", "T1"}, {"c", "T1"},
                   {"c", "T2"}, {"d", "T2"}, {"e", "T2"},
                   {"e", "T3"}, {"f", "T3"}, {"a", "T3"}});
}

}  // namespace pbdom
