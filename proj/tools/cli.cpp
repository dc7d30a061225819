#include "cli.hpp"

#include "pbdom/diagram.hpp"
#include "pbdom/domain.hpp"
#include "pbdom/enumerate.hpp"
#include "pbdom/error.hpp"
#include "pbdom/iso.hpp"
#include "pbdom/json_io.hpp"
#include "pbdom/lattice.hpp"
#include "pbdom/orient.hpp"
#include "pbdom/verify.hpp"

#include <CLI11.hpp>

namespace pbdom::cli {
namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;
constexpr int kLogic = 3;

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json carriers_json(const PieceBool& p, const SubDomain& s) {
  Json out = Json::object();
  for (std::size_t b = 0; b < s.poset.size(); ++b) {
    Json elems = Json::array();
    for (std::size_t c : FinPoset::members(s.carrier[b])) elems.push_back(p.id(c));
    out[s.poset.id(b)] = elems;
  }
  return out;
}

int check_domain(const std::string& path, const std::string& route, std::ostream& out) {
  FinPoset l = poset_from_json(read_json_file(path));
  Json j = Json::object();
  bool verdict;
  if (route == "def31") {
    auto r = check_def31(l);
    j = report_to_json(r);
    verdict = r.verdict;
  } else if (route == "prop42") {
    auto r = check_prop42(l);
    j = report_to_json(r);
    verdict = r.verdict;
  } else {
    auto a = check_def31(l);
    auto b = check_prop42(l);
    j["verdict"] = a.verdict && b.verdict;
    j["agree"] = a.verdict == b.verdict;
    j["reports"] = Json::array({report_to_json(a), report_to_json(b)});
    emit(out, j);
    if (a.verdict != b.verdict) return kLogic;
    return a.verdict ? kOk : kFalse;
  }
  emit(out, j);
  return verdict ? kOk : kFalse;
}

int sub_cmd(const std::string& path, std::ostream& out) {
  PieceBool p = pba_from_json(read_json_file(path));
  SubDomain s = sub(p);
  emit(out, Json{{"poset", poset_to_json(s.poset)}, {"carriers", carriers_json(p, s)}});
  return kOk;
}

int reconstruct_cmd(const std::string& poset_path, const std::string& orient_path, std::ostream& out) {
  FinPoset l = poset_from_json(read_json_file(poset_path));
  auto [ol, o] = orientation_from_json(read_json_file(orient_path));
  if (ol.ids() != l.ids() || ol.cover_pairs() != l.cover_pairs())
    throw UsageError("orientation belongs to a different poset");
  Reconstruction r = reconstruct_and_verify(l, o);
  emit(out, Json{{"pba", pba_to_json(r.colimit.pba)},
                 {"sub", poset_to_json(r.sub.poset)},
                 {"iso", map_to_json(l, r.sub.poset, r.f)},
                 {"inverse", map_to_json(r.sub.poset, l, r.g)}});
  return kOk;
}

int roundtrip_cmd(const std::string& path, std::ostream& out) {
  PieceBool p = pba_from_json(read_json_file(path));
  PosetMap m = verify_pba_roundtrip(p);
  Colimit c = colim(pboold(p).diagram);
  Json iso = Json::object();
  for (std::size_t x = 0; x < m.size(); ++x) iso[p.id(x)] = c.pba.id(m[x]);
  emit(out, Json{{"colimit", pba_to_json(c.pba)}, {"iso", iso}});
  return kOk;
}

int orient_cmd(const std::string& path, std::ostream& out) {
  PieceBool p = pba_from_json(read_json_file(path));
  SubDomain s = sub(p);
  emit(out, orientation_to_json(s.poset, orient_sub(p, s)));
  return kOk;
}

int extend_cmd(const std::string& poset_path, const std::string& orient_path, std::ostream& out) {
  FinPoset l = poset_from_json(read_json_file(poset_path));
  auto [ol, o] = orientation_from_json(read_json_file(orient_path));
  if (ol.ids() != l.ids() || ol.cover_pairs() != l.cover_pairs())
    throw UsageError("orientation belongs to a different poset");
  emit(out, diagram_to_json(extend_to_diagram(l, o)));
  return kOk;
}

int iso_cmd(const std::string& a, const std::string& b, std::ostream& out) {
  Json ja = read_json_file(a), jb = read_json_file(b);
  if (ja.contains("blocks") != jb.contains("blocks"))
    throw UsageError("iso needs two posets or two piecewise Boolean algebras");
  Json j = Json::object();
  bool found;
  if (ja.contains("blocks")) {
    PieceBool p = pba_from_json(ja), q = pba_from_json(jb);
    auto m = pba_iso_search(p, q);
    found = m.has_value();
    j["isomorphic"] = found;
    if (m) {
      Json mj = Json::object();
      for (std::size_t x = 0; x < m->size(); ++x) mj[p.id(x)] = q.id((*m)[x]);
      j["map"] = mj;
    }
  } else {
    FinPoset p = poset_from_json(ja), q = poset_from_json(jb);
    auto m = poset_iso(p, q);
    found = m.has_value();
    j["isomorphic"] = found;
    if (m) j["map"] = map_to_json(p, q, *m);
  }
  emit(out, j);
  return found ? kOk : kFalse;
}

int verify_all_cmd(int max_size, std::uint64_t seed, bool serial, std::ostream& out) {
  if (max_size < 1 || max_size > kMaxEnumeratedPoset)
    throw UsageError("--max-size must lie in 1.." + std::to_string(kMaxEnumeratedPoset));
  VerifyOptions opt;
  opt.max_size = max_size;
  opt.seed = seed;
  opt.exec = serial ? Exec::serial : Exec::parallel;
  auto results = verify_all(opt);
  Json crits = Json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    crits.push_back(Json{{"criterion", r.id},
                         {"title", r.title},
                         {"pass", r.pass},
                         {"checked", r.checked},
                         {"failures", r.failures},
                         {"witnesses", r.witnesses},
                         {"seconds", r.seconds}});
  }
  emit(out, Json{{"max_size", max_size}, {"seed", seed}, {"pass", all}, {"criteria", crits}});
  return all ? kOk : kFalse;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Piecewise Boolean algebras and their domains of subalgebras", "pbdom"};
  app.require_subcommand(1);

  std::string in1, in2, route = "both", orientation;
  int n = 0, max_size = kMaxEnumeratedPoset;
  std::uint64_t seed = 0;
  bool serial = false;

  auto* cd = app.add_subcommand("check-domain", "Run the domain recognizers on a poset");
  cd->add_option("poset", in1, "poset JSON")->required();
  cd->add_option("--route", route, "def31, prop42 or both")->check(CLI::IsMember({"def31", "prop42", "both"}));

  auto* sb = app.add_subcommand("sub", "Domain of commeasurable subalgebras of a PBA");
  sb->add_option("pba", in1, "PBA JSON")->required();

  auto* rc = app.add_subcommand("reconstruct", "Colimit of the diagram of an oriented domain");
  rc->add_option("poset", in1, "poset JSON")->required();
  rc->add_option("--orientation", orientation, "orientation JSON")->required();

  auto* rt = app.add_subcommand("roundtrip", "colim(pboold(P)) and the isomorphism to P");
  rt->add_option("pba", in1, "PBA JSON")->required();

  auto* gen = app.add_subcommand("gen", "Generate structures");
  gen->require_subcommand(1);
  auto* gpl = gen->add_subcommand("partition-lattice", "Partition lattice on N points");
  gpl->add_option("N", n)->required();
  auto* gba = gen->add_subcommand("boolean-algebra", "Boolean algebra with N atoms, as a PBA");
  gba->add_option("N", n)->required();
  auto* gbl = gen->add_subcommand("boolean-lattice", "Boolean lattice of dimension N");
  gbl->add_option("N", n)->required();
  auto* gps = gen->add_subcommand("posets", "All posets with K elements up to isomorphism");
  gps->add_option("K", n)->required();
  auto* grl = gen->add_subcommand("random-lattice", "Seeded random lattice");
  grl->add_option("--seed", seed);

  auto* ori = app.add_subcommand("orient", "Orientation of sub(P)");
  ori->add_option("pba", in1, "PBA JSON")->required();

  auto* ext = app.add_subcommand("extend", "Diagram of an oriented domain");
  ext->add_option("poset", in1, "poset JSON")->required();
  ext->add_option("orientation", in2, "orientation JSON")->required();

  auto* iso = app.add_subcommand("iso", "Isomorphism search between two posets or two PBAs");
  iso->add_option("a", in1)->required();
  iso->add_option("b", in2)->required();

  auto* va = app.add_subcommand("verify-all", "Run every acceptance property over the corpus");
  va->add_option("--max-size", max_size, "largest enumerated poset");
  va->add_option("--seed", seed, "random lattice seed");
  va->add_flag("--serial", serial, "use the serial batch driver");

  std::vector<const char*> argv{"pbdom"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*cd) return check_domain(in1, route, out);
    if (*sb) return sub_cmd(in1, out);
    if (*rc) return reconstruct_cmd(in1, orientation, out);
    if (*rt) return roundtrip_cmd(in1, out);
    if (*ori) return orient_cmd(in1, out);
    if (*ext) return extend_cmd(in1, in2, out);
    if (*iso) return iso_cmd(in1, in2, out);
    if (*va) return verify_all_cmd(max_size, seed, serial, out);
    if (*gpl) emit(out, poset_to_json(partition_lattice(n)));
    if (*gbl) emit(out, poset_to_json(boolean_lattice(n)));
    if (*grl) emit(out, poset_to_json(random_lattice(seed)));
    if (*gba) {
      if (n < 1) throw UsageError("a Boolean algebra needs at least one atom");
      std::vector<std::string> labels;
      for (int i = 1; i <= n; ++i) labels.push_back("a" + std::to_string(i));
      emit(out, pba_to_json(PieceBool::from_bool(FinBool(labels))));
    }
    if (*gps) {
      Json arr = Json::array();
      for (const auto& p : enumerate_posets(n)) arr.push_back(poset_to_json(p));
      emit(out, arr);
    }
    return kOk;
  } catch (const LogicError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kLogic;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace pbdom::cli
