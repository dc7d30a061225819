#include "pbdom/json_io.hpp"

#include "pbdom/error.hpp"

#include <fstream>

namespace pbdom {
namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw UsageError(std::string("JSON object lacks \"") + name + "\"");
  return j.at(name);
}

std::string str(const Json& j, const char* what) {
  if (!j.is_string()) throw UsageError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> strings(const Json& j, const char* what) {
  if (!j.is_array()) throw UsageError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(str(e, what));
  return out;
}

std::map<std::string, std::string> string_map(const Json& j, const char* what) {
  if (!j.is_object()) throw UsageError(std::string(what) + " must be an object");
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : j.items()) out[k] = str(v, what);
  return out;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Json poset_to_json(const FinPoset& p) {
  Json covers = Json::array();
  for (auto [lo, hi] : p.cover_pairs()) covers.push_back({p.id(lo), p.id(hi)});
  return Json{{"elements", p.ids()}, {"covers", covers}};
}

FinPoset poset_from_json(const Json& j) {
  auto ids = strings(field(j, "elements"), "elements");
  const Json& cj = field(j, "covers");
  if (!cj.is_array()) throw UsageError("covers must be an array");
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& c : cj) {
    auto pair = strings(c, "cover");
    if (pair.size() != 2) throw UsageError("a cover is a pair [lo, hi]");
    covers.emplace_back(pair[0], pair[1]);
  }
  return FinPoset(std::move(ids), covers);
}

Json bool_to_json(const FinBool& b) { return Json{{"atoms", b.atoms()}}; }

FinBool bool_from_json(const Json& j) { return FinBool(strings(field(j, "atoms"), "atoms")); }

Json elem_to_json(const FinBool& b, Elem x) { return Json(b.labels(x)); }

Json hom_to_json(const BoolHom& f) {
  Json im = Json::object();
  for (std::size_t i = 0; i < f.source().atom_count(); ++i)
    im[f.source().atoms()[i]] = f.target().labels(f.atom_images()[i]);
  return Json{{"source", bool_to_json(f.source())}, {"target", bool_to_json(f.target())}, {"atom_images", im}};
}

BoolHom hom_from_json(const Json& j) {
  FinBool s = bool_from_json(field(j, "source"));
  FinBool t = bool_from_json(field(j, "target"));
  const Json& im = field(j, "atom_images");
  if (!im.is_object()) throw UsageError("atom_images must be an object");
  std::vector<Elem> images(s.atom_count(), 0);
  std::vector<bool> seen(s.atom_count(), false);
  for (const auto& [k, v] : im.items()) {
    auto i = s.atom_index(k);
    if (!i) throw UsageError("atom_images names unknown source atom '" + k + "'");
    images[*i] = t.from_labels(strings(v, "atom image"));
    seen[*i] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw UsageError("atom_images misses source atom '" + s.atoms()[i] + "'");
  return BoolHom(std::move(s), std::move(t), std::move(images));
}

Json spec_to_json(const PbaSpec& s) {
  Json blocks = Json::array();
  for (const auto& b : s.blocks) {
    Json labels = Json::object();
    for (const auto& [k, v] : b.labels) labels[k] = v;
    blocks.push_back(Json{{"atoms_of_block", b.atoms}, {"element_labels", labels}});
  }
  Json neg = Json::object();
  for (const auto& [k, v] : s.negation) neg[k] = v;
  return Json{{"elements", s.elements}, {"zero", s.zero}, {"one", s.one}, {"negation", neg}, {"blocks", blocks}};
}

PbaSpec spec_from_json(const Json& j) {
  PbaSpec s;
  s.elements = strings(field(j, "elements"), "elements");
  if (j.contains("zero")) s.zero = str(j.at("zero"), "zero");
  if (j.contains("one")) s.one = str(j.at("one"), "one");
  s.negation = string_map(field(j, "negation"), "negation");
  const Json& bj = field(j, "blocks");
  if (!bj.is_array()) throw UsageError("blocks must be an array");
  for (const auto& b : bj) {
    PbaSpec::Block blk;
    blk.atoms = strings(field(b, "atoms_of_block"), "atoms_of_block");
    blk.labels = string_map(field(b, "element_labels"), "element_labels");
    s.blocks.push_back(std::move(blk));
  }
  return s;
}

Json pba_to_json(const PieceBool& p) { return spec_to_json(p.to_spec()); }

PieceBool pba_from_json(const Json& j) { return PieceBool::from_spec(spec_from_json(j)); }

Json orientation_to_json(const FinPoset& l, const Orientation& o) {
  Json choice = Json::object();
  for (const auto& [k, v] : o.choice) choice[k] = v;
  Json defaults = Json::array();
  for (const auto& k : o.maximal_defaults) defaults.push_back(k);
  return Json{{"poset", poset_to_json(l)}, {"choice", choice}, {"maximal_defaults", defaults}};
}

std::pair<FinPoset, Orientation> orientation_from_json(const Json& j) {
  FinPoset l = poset_from_json(field(j, "poset"));
  Orientation o;
  o.choice = string_map(field(j, "choice"), "choice");
  if (j.contains("maximal_defaults"))
    for (const auto& k : strings(j.at("maximal_defaults"), "maximal_defaults")) o.maximal_defaults.insert(k);
  for (const auto& k : o.maximal_defaults)
    if (!o.choice.count(k)) throw UsageError("maximal default '" + k + "' has no choice");
  return {std::move(l), std::move(o)};
}

Json diagram_to_json(const PBDiagram& f) {
  const FinPoset& l = f.base();
  Json algs = Json::object();
  for (std::size_t x = 0; x < l.size(); ++x) algs[l.id(x)] = bool_to_json(f.algebra(x));
  Json edges = Json::array();
  const auto& cp = l.cover_pairs();
  for (std::size_t k = 0; k < cp.size(); ++k)
    edges.push_back(Json{{"from", l.id(cp[k].first)}, {"to", l.id(cp[k].second)}, {"hom", hom_to_json(f.edges()[k])}});
  return Json{{"poset", poset_to_json(l)}, {"algebras", algs}, {"edges", edges}};
}

PBDiagram diagram_from_json(const Json& j) {
  FinPoset l = poset_from_json(field(j, "poset"));
  const Json& aj = field(j, "algebras");
  std::vector<FinBool> algs;
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (!aj.contains(l.id(x))) throw UsageError("no algebra for " + l.id(x));
    algs.push_back(bool_from_json(aj.at(l.id(x))));
  }
  std::map<FinPoset::Cover, BoolHom> byc;
  const Json& ej = field(j, "edges");
  if (!ej.is_array()) throw UsageError("edges must be an array");
  for (const auto& e : ej) {
    std::size_t lo = l.index(str(field(e, "from"), "from"));
    std::size_t hi = l.index(str(field(e, "to"), "to"));
    if (!l.covers(lo, hi)) throw UsageError("edge " + l.id(lo) + " -> " + l.id(hi) + " is not a cover");
    byc.insert_or_assign({lo, hi}, hom_from_json(field(e, "hom")));
  }
  std::vector<BoolHom> edges;
  for (const auto& c : l.cover_pairs()) {
    auto it = byc.find(c);
    if (it == byc.end()) throw UsageError("missing edge " + l.id(c.first) + " -> " + l.id(c.second));
    edges.push_back(it->second);
  }
  return PBDiagram(std::move(l), std::move(algs), std::move(edges));
}

Json report_to_json(const DomainReport& r) {
  Json conds = Json::array();
  for (const auto& c : r.conditions)
    conds.push_back(Json{{"condition", c.name}, {"holds", c.holds}, {"note", c.note}, {"witnesses", c.witnesses}});
  return Json{{"route", r.route}, {"verdict", r.verdict}, {"conditions", conds}};
}

Json validation_to_json(const ValidationReport& r) {
  Json vs = Json::array();
  for (const auto& v : r.violations)
    vs.push_back(Json{{"condition", v.condition}, {"detail", v.detail}, {"witness", v.witness}});
  return Json{{"valid", r.valid}, {"violations", vs}};
}

Json map_to_json(const FinPoset& from, const FinPoset& to, const PosetMap& f) {
  Json out = Json::object();
  for (std::size_t x = 0; x < f.size(); ++x) out[from.id(x)] = to.id(f[x]);
  return out;
}

}  // namespace pbdom
