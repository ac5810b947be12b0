#include "psgcr/jcr.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "psgcr/parallel.hpp"

namespace psgcr {

namespace {

void require_pool_closed(const std::vector<SeqPrefix>& pool, int r) {
  if (!pool_r_closed(pool, r))
    raise(Err::PoolNotRClosed,
          "pool member shorter than radius " + std::to_string(r));
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

// subfamilies as index vectors, size ascending then lexicographic
std::vector<std::vector<size_t>> subfamilies(size_t n, int k) {
  std::vector<std::vector<size_t>> out;
  std::vector<size_t> cur;
  std::function<void(size_t, int)> rec = [&](size_t lo, int want) {
    if (want == 0) {
      out.push_back(cur);
      return;
    }
    for (size_t i = lo; i + want <= n; ++i) {
      cur.push_back(i);
      rec(i + 1, want - 1);
      cur.pop_back();
    }
  };
  for (int sz = 1; sz <= k && static_cast<size_t>(sz) <= n; ++sz) rec(0, sz);
  return out;
}

std::vector<SeqPrefix> pick(const std::vector<SeqPrefix>& pool,
                            const std::vector<size_t>& idx) {
  std::vector<SeqPrefix> out;
  out.reserve(idx.size());
  for (size_t i : idx) out.push_back(pool[i]);
  return out;
}

} // namespace

void require_well_formed(const Witness& w) {
  if (w.m < 1 || w.a.size() != static_cast<size_t>(w.m) + 1 ||
      w.t.size() != static_cast<size_t>(w.m))
    raise(Err::BadArgument, "witness shape: need m>=1, m+1 entries in a, m in t");
  for (size_t j = 0; j < w.t.size(); ++j)
    if (w.t[j] < 1 || (j > 0 && w.t[j] <= w.t[j - 1]))
      raise(Err::BadArgument, "witness indices must be strictly increasing and positive");
}

std::string Witness::str(const Psg& s) const {
  std::ostringstream os;
  os << "m=" << m << "; a=[";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ",";
    os << s.element(a[i]).str();
  }
  os << "]; t=[" << join_ints(t) << "]";
  return os.str();
}

const char* to_string(SearchStatus st) {
  switch (st) {
  case SearchStatus::Found: return "Found";
  case SearchStatus::ProvenEmpty: return "ProvenEmpty";
  case SearchStatus::BoundExhausted: return "BoundExhausted";
  }
  return "?";
}

std::optional<ElemId> interleaved_product(const Psg& s, const SeqPrefix& f,
                                          const Witness& w) {
  std::optional<ElemId> v = w.a[0];
  for (int j = 1; j <= w.m && v; ++j) {
    v = s.apply(*v, f.value(w.t[j - 1]));
    if (v) v = s.apply(*v, w.a[j]);
  }
  return v;
}

std::optional<CheckFailure> witness_check(const Psg& s, const ElemSet& A,
                                          const std::vector<ElemId>& L,
                                          const std::vector<SeqPrefix>& F,
                                          const Witness& w) {
  require_well_formed(w);
  if (L.empty()) raise(Err::EmptyFamily, "witness_check: L must be nonempty");
  for (const SeqPrefix& f : F)
    if (f.length() < w.max_t())
      raise(Err::PrefixTooShort, "family member of length " +
                                     std::to_string(f.length()) +
                                     " cannot supply index " +
                                     std::to_string(w.max_t()));
  ElemSet target = s.sigma(L);
  target &= A;
  for (size_t fi = 0; fi < F.size(); ++fi) {
    const SeqPrefix& f = F[fi];
    ElemId v = w.a[0];
    int factor = 1;
    bool dead = false;
    for (int j = 1; j <= w.m && !dead; ++j) {
      auto p = s.apply(v, f.value(w.t[j - 1]));
      ++factor;
      if (!p) {
        dead = true;
        break;
      }
      auto q = s.apply(*p, w.a[j]);
      ++factor;
      if (!q) {
        dead = true;
        break;
      }
      v = *q;
    }
    if (dead) return CheckFailure{fi, Err::UndefinedProduct, factor};
    if (!target.test(v)) return CheckFailure{fi, Err::NotInA, factor};
  }
  return std::nullopt;
}

namespace {

// emptiness certificate for ordered-union instances: in that family the
// value of a product is the union of its factors and every factor pair is
// order-separated, so the final product has the same minimum as a(1). A
// final value in sigma(L) therefore needs min a(1) > max(union L), while
// a(1)*f(t(1)) being defined needs max a(1) < min f(t(1)). When no ground
// value sits strictly between the two thresholds there is no opening a(1)
// for any m.
std::optional<std::string> ordered_union_empty_certificate(
    const Psg& s, const std::vector<ElemId>& L, const std::vector<SeqPrefix>& F,
    int r) {
  Rat max_l = s.ordered_max_value(L[0]);
  for (ElemId x : L) max_l = std::max(max_l, s.ordered_max_value(x));
  // best reachable threshold: max over t of min over f of min f(t)
  std::optional<Rat> m_star;
  for (int t = 1; t <= r; ++t) {
    Rat mn = s.ordered_min_value(F[0].value(t));
    for (const SeqPrefix& f : F)
      mn = std::min(mn, s.ordered_min_value(f.value(t)));
    if (!m_star || mn > *m_star) m_star = mn;
  }
  for (const Rat& v : s.ordered_ground())
    if (max_l < v && v < *m_star) return std::nullopt;
  return "interval-empty,maxL=" + max_l.str() + ",Mstar=" + m_star->str();
}

struct TupleSearch {
  const Psg& s;
  const std::vector<SeqPrefix>& F;
  const ElemSet& target;
  const std::vector<int>& t;
  int m;
  int workers;

  // depth-first over a(level+1), vals = running products per family member
  std::optional<Witness> dfs(int level, std::vector<ElemId>& vals,
                             std::vector<ElemId>& chosen) const {
    size_t n = s.size();
    if (level == m) { // choosing the closing a(m+1)
      for (ElemId cand = 0; cand < n; ++cand) {
        bool ok = true;
        for (ElemId v : vals) {
          auto p = s.apply(v, cand);
          if (!p || !target.test(*p)) {
            ok = false;
            break;
          }
        }
        if (ok) {
          Witness w;
          w.m = m;
          w.a = chosen;
          w.a.push_back(cand);
          w.t = t;
          return w;
        }
      }
      return std::nullopt;
    }
    std::vector<ElemId> next(vals.size());
    for (ElemId cand = 0; cand < n; ++cand) {
      bool ok = true;
      for (size_t fi = 0; fi < vals.size(); ++fi) {
        auto p = s.apply(vals[fi], cand);
        if (p) p = s.apply(*p, F[fi].value(t[level]));
        if (!p) {
          ok = false;
          break;
        }
        next[fi] = *p;
      }
      if (!ok) continue;
      chosen.push_back(cand);
      if (auto w = dfs(level + 1, next, chosen)) return w;
      chosen.pop_back();
    }
    return std::nullopt;
  }

  // roots = choices of a(1); split across workers, least root wins
  std::optional<Witness> run() const {
    size_t n = s.size();
    auto probe = [&](size_t a1) -> std::optional<Witness> {
      std::vector<ElemId> vals(F.size());
      for (size_t fi = 0; fi < F.size(); ++fi) {
        auto p = s.apply(static_cast<ElemId>(a1), F[fi].value(t[0]));
        if (!p) return std::nullopt;
        vals[fi] = *p;
      }
      std::vector<ElemId> chosen{static_cast<ElemId>(a1)};
      return dfs(1, vals, chosen);
    };
    auto hit = parallel_first<Witness>(n, workers, probe);
    if (!hit) return std::nullopt;
    return hit->second;
  }
};

} // namespace

SearchResult witness_search(PsgPtr s, const ElemSet& A,
                            const std::vector<ElemId>& L,
                            const std::vector<SeqPrefix>& F, int r, int m_max,
                            int workers, int min_max_t) {
  if (L.empty()) raise(Err::EmptyFamily, "witness_search: L must be nonempty");
  if (F.empty()) raise(Err::EmptyFamily, "witness_search: family must be nonempty");
  if (r < 1 || m_max < 1)
    raise(Err::BadArgument, "witness_search: r and m_max must be positive");
  require_pool_closed(F, r);

  SearchResult res;
  if (s->family() == Psg::Family::FinSetOrderedUnion) {
    if (auto cert = ordered_union_empty_certificate(*s, L, F, r)) {
      res.status = SearchStatus::ProvenEmpty;
      res.certificate = *cert;
      return res;
    }
  }

  ElemSet target = s->sigma(L);
  target &= A;

  std::vector<int> tuple;
  std::optional<Witness> found;
  // t-tuples of one size in lexicographic order
  std::function<void(int, int)> tuples = [&](int lo, int want) {
    if (found) return;
    if (want == 0) {
      if (tuple.back() < min_max_t) return;
      TupleSearch ts{*s, F, target, tuple, static_cast<int>(tuple.size()),
                     workers};
      found = ts.run();
      return;
    }
    for (int v = lo; v + want - 1 <= r && !found; ++v) {
      tuple.push_back(v);
      tuples(v + 1, want - 1);
      tuple.pop_back();
    }
  };
  for (int m = 1; m <= m_max && !found; ++m) tuples(1, m);

  if (found) {
    res.status = SearchStatus::Found;
    res.witness = std::move(found);
  }
  return res;
}

CrRadiusResult k_cr_radius(PsgPtr s, const ElemSet& A, int k,
                           const std::vector<ElemId>& L,
                           const std::vector<SeqPrefix>& pool, int m_max,
                           int r_max, const std::string& pool_id, int workers) {
  if (k < 1 || m_max < 1 || r_max < 1)
    raise(Err::BadArgument, "k_cr_radius: bounds must be positive");
  if (pool.empty()) raise(Err::EmptyFamily, "k_cr_radius: pool must be nonempty");
  require_pool_closed(pool, r_max);

  CrRadiusResult out;
  out.k = k;
  out.m_max = m_max;
  out.r_max = r_max;
  out.pool_id = pool_id;

  auto subs = subfamilies(pool.size(), k);
  std::vector<std::optional<Witness>> witnesses(subs.size());
  std::vector<int> exhausted(subs.size(), 0); // radius fully searched
  for (int r = 1; r <= r_max; ++r) {
    bool all_ok = true;
    for (size_t si = 0; si < subs.size(); ++si) {
      if (witnesses[si]) continue;
      auto fam = pick(pool, subs[si]);
      SearchResult sr =
          witness_search(s, A, L, fam, r, m_max, workers, exhausted[si] + 1);
      if (sr.status == SearchStatus::Found) {
        witnesses[si] = std::move(sr.witness);
        continue;
      }
      exhausted[si] = r;
      all_ok = false;
      if (r == r_max) {
        out.blocking = subs[si];
        out.blocking_status = sr.status;
        out.blocking_certificate = sr.certificate;
      }
      break;
    }
    if (all_ok) {
      out.r = r;
      for (size_t si = 0; si < subs.size(); ++si)
        out.per_family.emplace_back(subs[si], *witnesses[si]);
      return out;
    }
  }
  return out;
}

DaggerResult dagger_radius(PsgPtr s, int k, const std::vector<ElemId>& L,
                           const std::vector<SeqPrefix>& pool, int r_max) {
  if (k < 1 || r_max < 1)
    raise(Err::BadArgument, "dagger_radius: bounds must be positive");
  if (r_max > 31) raise(Err::BadArgument, "dagger_radius: r_max above index-mask width");
  if (L.empty()) raise(Err::EmptyFamily, "dagger_radius: L must be nonempty");
  if (pool.empty()) raise(Err::EmptyFamily, "dagger_radius: pool must be nonempty");
  require_pool_closed(pool, r_max);

  DaggerResult out;
  if (s->family() == Psg::Family::FinSetDisjointUnion) {
    std::set<int> ground;
    for (ElemId x : L)
      for (int v : std::get<SmallSet>(s->element(x).payload)) ground.insert(v);
    out.formula_bound = k * static_cast<int>(ground.size()) + 1;
  }

  ElemSet sig = s->sigma(L);
  std::vector<uint32_t> good(pool.size(), 0);
  for (size_t i = 0; i < pool.size(); ++i)
    for (int t = 1; t <= r_max; ++t)
      if (sig.test(pool[i].value(t))) good[i] |= 1u << (t - 1);

  int needed = 1;
  for (const auto& sub : subfamilies(pool.size(), k)) {
    uint32_t common = ~0u;
    for (size_t i : sub) common &= good[i];
    if (!common) {
      out.blocking = sub;
      return out;
    }
    needed = std::max(needed, __builtin_ctz(common) + 1);
  }
  out.r = needed;
  return out;
}

std::optional<int> has_ddagger(PsgPtr s, const std::vector<ElemId>& L,
                               const std::vector<SeqPrefix>& pool, int r_max) {
  if (r_max < 1) raise(Err::BadArgument, "has_ddagger: r_max must be positive");
  if (L.empty()) raise(Err::EmptyFamily, "has_ddagger: L must be nonempty");
  if (pool.empty()) raise(Err::EmptyFamily, "has_ddagger: pool must be nonempty");
  require_pool_closed(pool, r_max);
  ElemSet sig = s->sigma(L);
  for (int r = 1; r <= r_max; ++r) {
    bool ok = true;
    for (const SeqPrefix& f : pool)
      if (!sig.test(f.value(r))) {
        ok = false;
        break;
      }
    if (ok) return r;
  }
  return std::nullopt;
}

Witness dagger_to_witness(PsgPtr s, const std::vector<ElemId>& L,
                          const std::vector<SeqPrefix>& F, int t) {
  if (L.empty()) raise(Err::EmptyFamily, "dagger_to_witness: L must be nonempty");
  if (F.empty()) raise(Err::EmptyFamily, "dagger_to_witness: family must be nonempty");
  if (t < 1) raise(Err::BadArgument, "dagger_to_witness: t must be positive");
  for (const SeqPrefix& f : F)
    if (f.length() < t)
      raise(Err::PrefixTooShort, "family member shorter than index t");

  ElemSet sig_l = s->sigma(L);
  std::optional<ElemId> a;
  std::vector<ElemId> m_fam(L.size());
  for (ElemId cand = 0; cand < s->size() && !a; ++cand) {
    if (!sig_l.test(cand)) continue;
    for (size_t i = 0; i < L.size(); ++i) m_fam[i] = *s->apply(L[i], cand);
    ElemSet sig_m = s->sigma(m_fam);
    bool ok = true;
    for (const SeqPrefix& f : F)
      if (!sig_m.test(f.value(t))) {
        ok = false;
        break;
      }
    if (ok) a = cand;
  }
  if (!a)
    raise(Err::NoSuitableA,
          "no a in sigma(L) has every f(t) composable after L*a");

  std::vector<ElemId> P;
  for (ElemId x : L) {
    ElemId xa = *s->apply(x, *a);
    for (const SeqPrefix& f : F) {
      ElemId v = *s->apply(xa, f.value(t));
      if (std::find(P.begin(), P.end(), v) == P.end()) P.push_back(v);
    }
  }
  ElemSet sig_p = s->sigma(P);
  std::optional<ElemId> a2;
  for (ElemId cand = 0; cand < s->size(); ++cand)
    if (sig_p.test(cand)) {
      a2 = cand;
      break;
    }
  if (!a2) raise(Err::NoSuitableA2, "sigma of the closing family is empty");

  Witness w;
  w.m = 1;
  w.a = {*a, *a2};
  w.t = {t};
  return w;
}

Witness ps_to_1cr_witness(PsgPtr s, const ElemSet&,
                          const std::vector<ElemId>& H, ElemId x, ElemId s_elem,
                          const Witness& w) {
  require_well_formed(w);
  if (std::find(H.begin(), H.end(), s_elem) == H.end())
    raise(Err::BadArgument, "ps_to_1cr_witness: s must come from H");
  auto b1 = s->apply(s_elem, w.a.front());
  if (!b1) raise(Err::UndefinedComposition, "s*a(1) is undefined");
  auto bm1 = s->apply(w.a.back(), x);
  if (!bm1) raise(Err::UndefinedComposition, "a(m+1)*x is undefined");
  Witness out = w;
  out.a.front() = *b1;
  out.a.back() = *bm1;
  return out;
}

NormalForm normalize_commutative(PsgPtr s, const Witness& w,
                                 const std::vector<SeqPrefix>& F) {
  require_well_formed(w);
  if (!s->is_commutative())
    raise(Err::NotCommutative, "normalize_commutative needs a commutative instance");
  std::optional<ElemId> b = w.a[0];
  for (size_t j = 1; j < w.a.size() && b; ++j) b = s->apply(*b, w.a[j]);
  if (!b) raise(Err::UndefinedProduct, "product of the a entries is undefined");

  IndexSet h_mask = 0;
  for (int t : w.t) h_mask |= 1u << (t - 1);
  for (size_t fi = 0; fi < F.size(); ++fi) {
    auto lhs = interleaved_product(*s, F[fi], w);
    if (!lhs)
      raise(Err::UndefinedProduct,
            "interleaved product undefined for family member " + std::to_string(fi));
    auto rhs = s->apply(*b, F[fi].fp(h_mask));
    if (!rhs)
      raise(Err::UndefinedProduct,
            "collapsed product undefined for family member " + std::to_string(fi));
    if (*lhs != *rhs)
      raise(Err::WitnessInvalid,
            "collapsed product differs from the interleaved product");
  }
  NormalForm out;
  out.b = *b;
  out.H = w.t;
  return out;
}

LiftResult lift_commutative(PsgPtr s, ElemId b, const std::vector<int>& H,
                            const std::vector<SeqPrefix>& F,
                            const std::vector<SeqPrefix>& pool_aux) {
  if (!s->is_commutative())
    raise(Err::NotCommutative, "lift_commutative needs a commutative instance");
  if (H.empty()) raise(Err::EmptyIndexSet, "lift_commutative: H must be nonempty");
  for (size_t j = 0; j < H.size(); ++j)
    if (H[j] < 1 || (j > 0 && H[j] <= H[j - 1]))
      raise(Err::BadArgument, "lift_commutative: H must be strictly increasing");
  if (F.empty()) raise(Err::EmptyFamily, "lift_commutative: family must be nonempty");
  int r = H.back();
  require_pool_closed(F, r);

  // M = every increasing-index subproduct of a family member over [1..r]
  std::vector<ElemId> M;
  for (const SeqPrefix& f : F)
    for (IndexSet mask = 1; mask < (1u << r); ++mask) {
      ElemId v = f.fp(mask);
      if (std::find(M.begin(), M.end(), v) == M.end()) M.push_back(v);
    }
  ElemSet sig_m = s->sigma(M);

  std::optional<SeqPrefix> h;
  for (const SeqPrefix& g : pool_aux) {
    if (g.length() < r) continue;
    bool ok = true;
    for (IndexSet mask = 1; mask < (1u << r) && ok; ++mask)
      if (!sig_m.test(g.fp(mask))) ok = false;
    if (ok) {
      std::vector<ElemId> head(g.values().begin(), g.values().begin() + r);
      h.emplace(s, std::move(head));
      break;
    }
  }
  if (!h) h = find_fp_sequence(s, sig_m, r);
  if (!h)
    raise(Err::NoHSequence,
          "no length-" + std::to_string(r) + " prefix with FP inside sigma(M)");

  LiftResult out{{}, *h};
  out.w.m = static_cast<int>(H.size());
  out.w.t = H;
  out.w.a.push_back(b);
  for (int t : H) out.w.a.push_back(h->value(t));

  // the interleaved product must reproduce b * prod over H of f(t)*h(t)
  for (size_t fi = 0; fi < F.size(); ++fi) {
    auto lhs = interleaved_product(*s, F[fi], out.w);
    std::optional<ElemId> rhs = b;
    for (int t : H) {
      auto g = s->apply(F[fi].value(t), h->value(t));
      if (!g)
        raise(Err::UndefinedProduct,
              "f(t)*h(t) undefined for family member " + std::to_string(fi));
      if (rhs) rhs = s->apply(*rhs, *g);
    }
    if (!lhs || !rhs)
      raise(Err::UndefinedProduct,
            "lifted product undefined for family member " + std::to_string(fi));
    if (*lhs != *rhs)
      raise(Err::WitnessInvalid,
            "lifted product differs from the collapsed form");
  }
  return out;
}

ProbeReport partition_regularity_probe(PsgPtr s, const ElemSet& A1,
                                       const ElemSet& A2, int k,
                                       const std::vector<ElemId>& L,
                                       const std::vector<SeqPrefix>& pool,
                                       int m_max, int r_max, int workers) {
  ElemSet both = A1;
  both |= A2;
  ProbeReport rep{
      k_cr_radius(s, both, k, L, pool, m_max, r_max, "probe-union", workers),
      k_cr_radius(s, A1, k, L, pool, m_max, r_max, "probe-part1", workers),
      k_cr_radius(s, A2, k, L, pool, m_max, r_max, "probe-part2", workers)};
  return rep;
}

} // namespace psgcr
