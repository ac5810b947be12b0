#include "psgcr/largeness.hpp"

#include <map>

namespace psgcr {

namespace {

// lazily filled phi cache for one checker run
class PhiCache {
public:
  explicit PhiCache(const Psg& s) : s_(s), phis_(s.size()), have_(s.size(), false) {}

  const ElemSet& phi(ElemId a) {
    if (!have_[a]) {
      phis_[a] = s_.phi(a);
      have_[a] = true;
    }
    return phis_[a];
  }

  ElemSet sigma(const std::vector<ElemId>& fam) {
    ElemSet out = phi(fam[0]);
    for (size_t i = 1; i < fam.size(); ++i) out &= phi(fam[i]);
    return out;
  }

private:
  const Psg& s_;
  std::vector<ElemSet> phis_;
  std::vector<char> have_;
};

// t^{-1}A = {x in phi(t) : t*x in A}, cached per t
class TranslateCache {
public:
  TranslateCache(const Psg& s, const ElemSet& A)
      : s_(s), a_(A), sets_(s.size()), have_(s.size(), false) {}

  const ElemSet& inv(ElemId t) {
    if (!have_[t]) {
      ElemSet r(s_.size());
      for (ElemId x = 0; x < s_.size(); ++x) {
        auto p = s_.apply(t, x);
        if (p && a_.test(*p)) r.set(x);
      }
      sets_[t] = std::move(r);
      have_[t] = true;
    }
    return sets_[t];
  }

  ElemSet cover(const std::vector<ElemId>& G) {
    ElemSet out = inv(G[0]);
    for (size_t i = 1; i < G.size(); ++i) out |= inv(G[i]);
    return out;
  }

private:
  const Psg& s_;
  const ElemSet& a_;
  std::vector<ElemSet> sets_;
  std::vector<char> have_;
};

struct ThickScan {
  bool verdict = true;
  bool vacuous = true; // stays true only if every family was skipped
  std::optional<std::vector<ElemId>> blocking;
  std::vector<std::pair<std::vector<ElemId>, ElemId>> x_map;
};

// shared core of thick and piecewise syndetic: every F at the bound with
// nonempty sigma(F) must push into `target` by a common right factor
ThickScan thick_scan(const Psg& s, const ElemSet& target, int b, PhiCache& phis,
                     bool want_x_map) {
  ThickScan out;
  for_each_subset(s.size(), b, [&](const std::vector<ElemId>& F) {
    ElemSet sig = phis.sigma(F);
    if (sig.empty()) return true;
    out.vacuous = false;
    std::optional<ElemId> hit;
    sig.for_each([&](ElemId x) {
      if (hit) return;
      for (ElemId f : F) {
        auto p = s.apply(f, x);
        if (!p || !target.test(*p)) return;
      }
      hit = x;
    });
    if (!hit) {
      out.verdict = false;
      out.blocking = F;
      return false;
    }
    if (want_x_map) out.x_map.emplace_back(F, *hit);
    return true;
  });
  if (!out.verdict) out.vacuous = false;
  return out;
}

void echo_bound(LargenessReport& r, const char* name, long long v) {
  r.bounds.emplace_back(name, v);
}

} // namespace

void for_each_subset(size_t n, int max_size,
                     const std::function<bool(const std::vector<ElemId>&)>& visit) {
  std::vector<ElemId> cur;
  bool stop = false;
  // combinations of one size in lexicographic order
  std::function<void(ElemId, int)> rec = [&](ElemId lo, int want) {
    if (stop) return;
    if (want == 0) {
      if (!visit(cur)) stop = true;
      return;
    }
    for (ElemId i = lo; i + want <= n && !stop; ++i) {
      cur.push_back(i);
      rec(i + 1, want - 1);
      cur.pop_back();
    }
  };
  for (int k = 1; k <= max_size && !stop; ++k) rec(0, k);
}

LargenessReport is_thick(PsgPtr s, const ElemSet& A, int b) {
  if (b < 1) raise(Err::BadArgument, "thick: b must be positive");
  LargenessReport rep;
  rep.notion = "thick";
  echo_bound(rep, "b", b);
  PhiCache phis(*s);
  ThickScan scan = thick_scan(*s, A, b, phis, true);
  rep.verdict = scan.verdict;
  rep.vacuous = scan.vacuous;
  if (scan.blocking) rep.witness_family = std::move(scan.blocking);
  rep.x_map = std::move(scan.x_map);
  return rep;
}

LargenessReport is_syndetic(PsgPtr s, const ElemSet& A, int g_max) {
  if (g_max < 1) raise(Err::BadArgument, "syndetic: g_max must be positive");
  LargenessReport rep;
  rep.notion = "syndetic";
  echo_bound(rep, "g_max", g_max);
  TranslateCache trans(*s, A);
  ElemSet all = s->universe_set();
  for_each_subset(s->size(), g_max, [&](const std::vector<ElemId>& G) {
    if (all.is_subset_of(trans.cover(G))) {
      rep.verdict = true;
      rep.witness_family = G;
      return false;
    }
    return true;
  });
  return rep;
}

LargenessReport is_piecewise_syndetic(PsgPtr s, const ElemSet& A, int g_max,
                                      int b) {
  if (g_max < 1 || b < 1)
    raise(Err::BadArgument, "piecewise syndetic: bounds must be positive");
  LargenessReport rep;
  rep.notion = "piecewise-syndetic";
  echo_bound(rep, "g_max", g_max);
  echo_bound(rep, "b", b);
  PhiCache phis(*s);
  TranslateCache trans(*s, A);
  // distinct covers repeat across G; memoize the verdict per cover
  std::map<std::vector<uint64_t>, bool> seen;
  for_each_subset(s->size(), g_max, [&](const std::vector<ElemId>& G) {
    ElemSet cov = trans.cover(G);
    auto [it, fresh] = seen.try_emplace(cov.words(), false);
    if (fresh) it->second = thick_scan(*s, cov, b, phis, false).verdict;
    if (it->second) {
      ThickScan scan = thick_scan(*s, cov, b, phis, true);
      rep.verdict = true;
      rep.vacuous = scan.vacuous;
      rep.witness_family = G;
      rep.x_map = std::move(scan.x_map);
      return false;
    }
    return true;
  });
  return rep;
}

LargenessReport is_c_piecewise_syndetic(PsgPtr s, const ElemSet& A, int h_max,
                                        int t_bound) {
  if (h_max < 1 || t_bound < 1)
    raise(Err::BadArgument, "c-piecewise syndetic: bounds must be positive");
  LargenessReport rep;
  rep.notion = "c-piecewise-syndetic";
  echo_bound(rep, "h_max", h_max);
  echo_bound(rep, "t_bound", t_bound);
  PhiCache phis(*s);
  TranslateCache trans(*s, A);
  for_each_subset(s->size(), h_max, [&](const std::vector<ElemId>& H) {
    ElemSet cov = trans.cover(H);
    ElemSet sigH = phis.sigma(H);
    bool ok = true;
    bool vac = true;
    for_each_subset(s->size(), t_bound, [&](const std::vector<ElemId>& T) {
      ElemSet sigT = phis.sigma(T);
      if (sigT.empty()) return true;
      vac = false;
      std::vector<ElemId> core; // T intersect sigma(H)
      for (ElemId t : T)
        if (sigH.test(t)) core.push_back(t);
      bool found = false;
      sigT.for_each([&](ElemId x) {
        if (found) return;
        for (ElemId t : core) {
          auto p = s->apply(t, x);
          if (!p || !cov.test(*p)) return;
        }
        found = true;
      });
      if (!found) ok = false;
      return ok;
    });
    if (ok) {
      rep.verdict = true;
      rep.vacuous = vac;
      rep.witness_family = H;
      return false;
    }
    return true;
  });
  return rep;
}

std::optional<SeqPrefix> find_ip_r(PsgPtr s, const ElemSet& A, int r) {
  if (r < 1) raise(Err::BadArgument, "ip_r: r must be positive");
  return find_fp_sequence(std::move(s), A, r);
}

LargenessReport is_ip_r_star(PsgPtr s, const ElemSet& A, int r) {
  LargenessReport rep;
  rep.notion = "ip-r-star";
  echo_bound(rep, "r", r);
  auto avoid = find_ip_r(s, A.complement(), r);
  rep.verdict = !avoid.has_value();
  if (avoid) rep.avoiding_prefix = std::move(avoid);
  return rep;
}

} // namespace psgcr
