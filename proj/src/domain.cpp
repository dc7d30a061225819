#include "pbdom/domain.hpp"

#include "pbdom/error.hpp"
#include "pbdom/lattice.hpp"

namespace pbdom {
namespace {

ConditionResult trivially(const std::string& name, const std::string& note) {
  return ConditionResult{name, true, note, {}};
}

ConditionResult directed_suprema() {
  return trivially("1", "finite poset: every directed subset contains its own supremum");
}

ConditionResult algebraic() {
  return trivially("3", "finite poset: every element is compact");
}

ConditionResult nonempty_infima(const FinPoset& l) {
  ConditionResult c{"2", true, "pairwise meets; finite meets follow by induction", {}};
  for (std::size_t a = 0; a < l.size() && c.holds; ++a)
    for (std::size_t b = a + 1; b < l.size(); ++b)
      if (!meet(l, a, b)) {
        c.holds = false;
        c.witnesses = {l.id(a), l.id(b)};
        break;
      }
  return c;
}

void finish(DomainReport& r) {
  r.verdict = true;
  for (const auto& c : r.conditions) r.verdict = r.verdict && c.holds;
}

}  // namespace

const ConditionResult& DomainReport::condition(const std::string& name) const {
  for (const auto& c : conditions)
    if (c.name == name) return c;
  throw UsageError("report has no condition '" + name + "'");
}

DomainReport check_def31(const FinPoset& l) {
  DomainReport r;
  r.route = "def31";
  r.conditions.push_back(directed_suprema());
  r.conditions.push_back(nonempty_infima(l));
  r.conditions.push_back(algebraic());
  ConditionResult c4{"4", true, "every principal ideal is dual to a partition lattice", {}};
  for (std::size_t x = 0; x < l.size(); ++x)
    if (!recognize_partition_lattice(l.ideal(x).dual())) {
      c4.holds = false;
      c4.witnesses.push_back(l.id(x));
    }
  r.conditions.push_back(std::move(c4));
  finish(r);
  return r;
}

DomainReport check_prop42(const FinPoset& l) {
  DomainReport r;
  r.route = "prop42";
  r.conditions.push_back(directed_suprema());
  r.conditions.push_back(nonempty_infima(l));
  r.conditions.push_back(algebraic());
  ConditionResult c4a{"4'", true, "every principal ideal is cogeometric with a modular atom", {}};
  for (std::size_t x = 0; x < l.size(); ++x) {
    FinPoset down = l.ideal(x);
    bool ok = is_cogeometric(down);
    if (ok && down.size() > 1) {
      auto ops = LatticeOps::of(down);
      ok = false;
      for (std::size_t a : atoms(down))
        if (!modularity_witness(down, *ops, a)) {
          ok = true;
          break;
        }
    }
    if (!ok) {
      c4a.holds = false;
      c4a.witnesses.push_back(l.id(x));
    }
  }
  r.conditions.push_back(std::move(c4a));
  ConditionResult c4b{"4''", true, "an element of height n <= 3 covers n(n+1)/2 elements", {}};
  for (std::size_t x = 0; x < l.size(); ++x) {
    std::size_t h;
    try {
      h = height(l, x);
    } catch (const StructuralError&) {
      c4b.holds = false;
      c4b.witnesses.push_back(l.id(x));
      continue;
    }
    if (h <= 3 && l.lower_covers(x).size() != h * (h + 1) / 2) {
      c4b.holds = false;
      c4b.witnesses.push_back(l.id(x));
    }
  }
  r.conditions.push_back(std::move(c4b));
  finish(r);
  return r;
}

bool agree(const FinPoset& l) {
  auto a = check_def31(l);
  auto b = check_prop42(l);
  if (a.verdict != b.verdict) {
    auto summary = [](const DomainReport& r) {
      std::string s = r.route + (r.verdict ? "=true" : "=false") + " (";
      for (const auto& c : r.conditions) s += " " + c.name + (c.holds ? ":ok" : ":fail");
      return s + " )";
    };
    throw LogicError("domain recognizers disagree: " + summary(a) + " vs " + summary(b));
  }
  return a.verdict;
}

bool is_domain(const FinPoset& l) { return check_def31(l).verdict; }

}  // namespace pbdom
