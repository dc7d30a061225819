#include "pbdom/iso.hpp"

#include <algorithm>
#include <map>

namespace pbdom {
namespace {

std::vector<std::size_t> chain_lengths_from_below(const FinPoset& p) {
  std::vector<std::size_t> r(p.size(), 0);
  for (std::size_t x : p.linear_extension())
    for (std::size_t y : p.lower_covers(x)) r[x] = std::max(r[x], r[y] + 1);
  return r;
}

std::vector<std::size_t> chain_lengths_from_above(const FinPoset& p) {
  std::vector<std::size_t> r(p.size(), 0);
  const auto& ext = p.linear_extension();
  for (auto it = ext.rbegin(); it != ext.rend(); ++it)
    for (std::size_t y : p.upper_covers(*it)) r[*it] = std::max(r[*it], r[y] + 1);
  return r;
}

// Colour refinement run jointly on both posets so colours are comparable.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine_colours(const FinPoset& p,
                                                                               const FinPoset& q) {
  std::map<std::vector<std::size_t>, std::size_t> dict;
  auto intern = [&](std::vector<std::size_t> sig) {
    auto [it, fresh] = dict.emplace(std::move(sig), dict.size());
    return it->second;
  };
  auto seed = [&](const FinPoset& s) {
    auto below = chain_lengths_from_below(s);
    auto above = chain_lengths_from_above(s);
    std::vector<std::size_t> c(s.size());
    for (std::size_t x = 0; x < s.size(); ++x)
      c[x] = intern({s.down(x).count(), s.up(x).count(), s.lower_covers(x).size(),
                     s.upper_covers(x).size(), below[x], above[x]});
    return c;
  };
  auto cp = seed(p);
  auto cq = seed(q);
  auto distinct = [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::vector<std::size_t> all(a);
    all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end());
    return static_cast<std::size_t>(std::unique(all.begin(), all.end()) - all.begin());
  };
  std::size_t classes = distinct(cp, cq);
  for (std::size_t round = 0; round < p.size() + q.size(); ++round) {
    dict.clear();
    auto step = [&](const FinPoset& s, const std::vector<std::size_t>& c) {
      std::vector<std::size_t> next(s.size());
      for (std::size_t x = 0; x < s.size(); ++x) {
        std::vector<std::size_t> lo, hi;
        for (std::size_t y : s.lower_covers(x)) lo.push_back(c[y]);
        for (std::size_t y : s.upper_covers(x)) hi.push_back(c[y]);
        std::sort(lo.begin(), lo.end());
        std::sort(hi.begin(), hi.end());
        std::vector<std::size_t> sig{c[x], lo.size()};
        sig.insert(sig.end(), lo.begin(), lo.end());
        sig.push_back(hi.size());
        sig.insert(sig.end(), hi.begin(), hi.end());
        next[x] = intern(std::move(sig));
      }
      return next;
    };
    auto np = step(p, cp);
    auto nq = step(q, cq);
    std::size_t now = distinct(np, nq);
    cp = std::move(np);
    cq = std::move(nq);
    if (now == classes) break;
    classes = now;
  }
  return {cp, cq};
}

class Search {
 public:
  Search(const FinPoset& p, const FinPoset& q, const std::function<bool(const PosetMap&)>& visit)
      : p_(p), q_(q), visit_(visit) {}

  void run() {
    if (p_.size() != q_.size() || p_.cover_pairs().size() != q_.cover_pairs().size()) return;
    auto [cp, cq] = refine_colours(p_, q_);
    auto hp = cp, hq = cq;
    std::sort(hp.begin(), hp.end());
    std::sort(hq.begin(), hq.end());
    if (hp != hq) return;
    colour_p_ = std::move(cp);
    colour_q_ = std::move(cq);
    plan_order();
    image_.assign(p_.size(), kUnset);
    used_.assign(q_.size(), false);
    dfs(0);
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  void plan_order() {
    const std::size_t n = p_.size();
    std::map<std::size_t, std::size_t> class_size;
    for (std::size_t c : colour_p_) ++class_size[c];
    std::vector<bool> placed(n, false);
    std::vector<bool> touching(n, false);
    order_.clear();
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = kUnset;
      auto better = [&](std::size_t x) {
        if (best == kUnset) return true;
        if (touching[x] != touching[best]) return static_cast<bool>(touching[x]);
        std::size_t sx = class_size[colour_p_[x]], sb = class_size[colour_p_[best]];
        if (sx != sb) return sx < sb;
        return x < best;
      };
      for (std::size_t x = 0; x < n; ++x)
        if (!placed[x] && better(x)) best = x;
      placed[best] = true;
      order_.push_back(best);
      for (std::size_t y : p_.lower_covers(best)) touching[y] = true;
      for (std::size_t y : p_.upper_covers(best)) touching[y] = true;
    }
  }

  bool consistent(std::size_t x, std::size_t c, std::size_t depth) const {
    for (std::size_t i = 0; i < depth; ++i) {
      std::size_t y = order_[i];
      std::size_t fy = image_[y];
      if (p_.leq(x, y) != q_.leq(c, fy) || p_.leq(y, x) != q_.leq(fy, c)) return false;
    }
    return true;
  }

  // Returns false once the visitor asked to stop.
  bool dfs(std::size_t depth) {
    if (depth == order_.size()) return visit_(image_);
    std::size_t x = order_[depth];
    for (std::size_t c = 0; c < q_.size(); ++c) {
      if (used_[c] || colour_q_[c] != colour_p_[x]) continue;
      if (!consistent(x, c, depth)) continue;
      image_[x] = c;
      used_[c] = true;
      bool go_on = dfs(depth + 1);
      used_[c] = false;
      image_[x] = kUnset;
      if (!go_on) return false;
    }
    return true;
  }

  const FinPoset& p_;
  const FinPoset& q_;
  const std::function<bool(const PosetMap&)>& visit_;
  std::vector<std::size_t> colour_p_, colour_q_;
  std::vector<std::size_t> order_;
  PosetMap image_;
  std::vector<bool> used_;
};

}  // namespace

void for_each_poset_iso(const FinPoset& p, const FinPoset& q,
                        const std::function<bool(const PosetMap&)>& visit) {
  Search(p, q, visit).run();
}

std::optional<PosetMap> poset_iso(const FinPoset& p, const FinPoset& q) {
  std::optional<PosetMap> found;
  for_each_poset_iso(p, q, [&](const PosetMap& m) {
    found = m;
    return false;
  });
  return found;
}

std::vector<PosetMap> all_poset_isos(const FinPoset& p, const FinPoset& q, std::size_t limit) {
  std::vector<PosetMap> out;
  if (limit == 0) return out;
  for_each_poset_iso(p, q, [&](const PosetMap& m) {
    out.push_back(m);
    return out.size() < limit;
  });
  return out;
}

}  // namespace pbdom
