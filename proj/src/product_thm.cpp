#include "psgcr/product_thm.hpp"

#include <algorithm>

#include "psgcr/jcr.hpp"
#include "psgcr/largeness.hpp"
#include "psgcr/parallel.hpp"

namespace psgcr {

namespace {

void require_index_set(const std::vector<int>& M) {
  if (M.empty()) raise(Err::EmptyIndexSet, "index set M is empty");
  for (size_t i = 0; i < M.size(); ++i) {
    if (M[i] < 1) raise(Err::BadArgument, "index sets are 1-based");
    if (i > 0 && M[i] <= M[i - 1])
      raise(Err::BadArgument, "index set M must be strictly increasing");
  }
}

// depth-first a-tuple search with t fixed; candidate order at every position
// is identity first, then the rest of the universe ascending, truncated at
// the cap. Positions alternate a(j), f-values, so pruning only needs the
// partial chain per pool member.
struct ThetaSearch {
  const Psg& s;
  const std::vector<SeqPrefix>& F;
  const ElemSet& target;
  const std::vector<int>& M;
  std::vector<ElemId> cands;
  int m = 0;

  std::optional<std::vector<ElemId>> found;

  bool close(const std::vector<std::optional<ElemId>>& chains,
             std::vector<ElemId>& a) {
    for (ElemId cand : cands) {
      bool ok = true;
      for (const auto& ch : chains) {
        auto v = s.apply(*ch, cand);
        if (!v || !target.test(*v)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        a.push_back(cand);
        found = a;
        return true;
      }
    }
    return false;
  }

  bool dfs(int level, std::vector<std::optional<ElemId>>& chains,
           std::vector<ElemId>& a) {
    if (level == m) return close(chains, a);
    for (ElemId cand : cands) {
      std::vector<std::optional<ElemId>> next(chains.size());
      bool ok = true;
      for (size_t i = 0; i < chains.size(); ++i) {
        auto mid = level == 0 ? std::optional<ElemId>(cand)
                              : s.apply(*chains[i], cand);
        if (!mid) {
          ok = false;
          break;
        }
        next[i] = s.apply(*mid, F[i].value(M[level]));
        if (!next[i]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      a.push_back(cand);
      if (dfs(level + 1, next, a)) return true;
      a.pop_back();
    }
    return false;
  }

  std::optional<std::vector<ElemId>> run(int workers) {
    auto probe_root =
        [&](size_t idx) -> std::optional<std::vector<ElemId>> {
      ThetaSearch local{s, F, target, M, cands, m, std::nullopt};
      std::vector<std::optional<ElemId>> chains(F.size());
      std::vector<ElemId> a;
      ElemId root = cands[idx];
      bool ok = true;
      for (size_t i = 0; i < F.size(); ++i) {
        chains[i] = s.apply(root, F[i].value(M[0]));
        if (!chains[i]) {
          ok = false;
          break;
        }
      }
      if (!ok) return std::nullopt;
      a.push_back(root);
      if (local.dfs(1, chains, a)) return local.found;
      return std::nullopt;
    };
    if (m == 0) {
      // degenerate: never reached, M is nonempty
      return std::nullopt;
    }
    auto hit = parallel_first<std::vector<ElemId>>(cands.size(), workers,
                                                   probe_root);
    if (hit) return hit->second;
    return std::nullopt;
  }
};

} // namespace

std::optional<std::vector<ElemId>> theta_contains(const ThetaQuery& q,
                                                  size_t per_position_cap,
                                                  int workers) {
  const PsgPtr& s = q.instance;
  if (!s) raise(Err::BadArgument, "null instance");
  auto e = s->identity_elem();
  if (!e) raise(Err::NoIdentity, "theta queries need a two sided identity");
  if (q.F.empty()) raise(Err::EmptyFamily, "family F is empty");
  if (q.L.empty()) raise(Err::EmptyFamily, "base family L is empty");
  require_index_set(q.M);
  int need = q.M.back();
  for (const auto& f : q.F) {
    if (f.instance().get() != s.get())
      raise(Err::BadArgument, "pool member built over a different instance");
    if (f.length() < need)
      raise(Err::PrefixTooShort, "pool member shorter than max M");
  }

  ElemSet target = s->sigma(q.L);
  target &= q.A;

  ThetaSearch search{*s, q.F, target, q.M, {}, (int)q.M.size(), std::nullopt};
  search.cands.reserve(std::min(per_position_cap, s->size()));
  search.cands.push_back(*e);
  for (ElemId x = 0; x < s->size() && search.cands.size() < per_position_cap;
       ++x) {
    if (x != *e) search.cands.push_back(x);
  }

  auto a = search.run(workers);
  if (!a) return std::nullopt;
  Witness w{(int)q.M.size(), *a, q.M};
  if (witness_check(*s, q.A, q.L, q.F, w))
    raise(Err::WitnessInvalid, "theta search produced an invalid witness");
  return a;
}

ThetaTransform theta_block_transform(PsgPtr s_e, const ElemSet& A,
                                     const std::vector<SeqPrefix>& F,
                                     const std::vector<ElemId>& L,
                                     const BlockSeq& H, const Witness& w) {
  if (!s_e) raise(Err::BadArgument, "null instance");
  auto e = s_e->identity_elem();
  if (!e) raise(Err::NoIdentity, "block transform needs a two sided identity");
  if (F.empty()) raise(Err::EmptyFamily, "family F is empty");
  require_well_formed(w);
  int n_blocks = (int)H.blocks.size();
  if (n_blocks == 0) raise(Err::BadArgument, "empty block sequence");
  if (w.max_t() > n_blocks)
    raise(Err::BadArgument, "witness indexes past the block sequence");

  int need = 0;
  for (Block b : H.blocks) {
    auto ints = block_ints(b);
    need = std::max(need, ints.back());
  }
  std::vector<SeqPrefix> g;
  g.reserve(F.size());
  for (const auto& f : F) {
    if (f.length() < need)
      raise(Err::PrefixTooShort, "pool member shorter than the blocks");
    std::vector<ElemId> vals;
    vals.reserve(n_blocks);
    for (Block b : H.blocks) vals.push_back(f.fp((IndexSet)b));
    g.emplace_back(s_e, std::move(vals));
  }

  if (auto bad = witness_check(*s_e, A, L, g, w))
    raise(Err::WitnessInvalid,
          "witness fails on the block-compressed family at member " +
              std::to_string(bad->f_index));

  // M = union of the chosen blocks; c places a(j) at the first element of
  // block t(j) and the identity elsewhere
  std::vector<int> M;
  std::vector<std::pair<int, ElemId>> at_first; // (index, a value)
  for (int j = 0; j < w.m; ++j) {
    auto ints = block_ints(H.blocks[w.t[j] - 1]);
    at_first.emplace_back(ints.front(), w.a[j]);
    M.insert(M.end(), ints.begin(), ints.end());
  }
  std::sort(M.begin(), M.end());

  std::vector<ElemId> c;
  c.reserve(M.size() + 1);
  for (int i : M) {
    ElemId v = *e;
    for (const auto& [first, aj] : at_first) {
      if (first == i) {
        v = aj;
        break;
      }
    }
    c.push_back(v);
  }
  c.push_back(w.a[w.m]);

  Witness wc{(int)M.size(), c, M};
  for (size_t i = 0; i < F.size(); ++i) {
    auto lhs = interleaved_product(*s_e, F[i], wc);
    auto rhs = interleaved_product(*s_e, g[i], w);
    if (!lhs || !rhs)
      raise(Err::UndefinedProduct,
            "expanded chain undefined at member " + std::to_string(i));
    if (*lhs != *rhs)
      raise(Err::WitnessInvalid,
            "expanded chain differs from the block chain at member " +
                std::to_string(i));
  }
  return {std::move(c), std::move(M)};
}

std::vector<ElemId> project_set(const Psg& product_instance,
                                const std::vector<ElemId>& L, int side) {
  if (side != 1 && side != 2) raise(Err::BadArgument, "side must be 1 or 2");
  std::vector<ElemId> out;
  out.reserve(L.size());
  for (ElemId x : L) {
    auto [l, r] = product_instance.split_id(x);
    out.push_back(side == 1 ? l : r);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ElemSet product_set(const Psg& product_instance, const ElemSet& A,
                    const ElemSet& B) {
  ElemSet out(product_instance.size());
  for (ElemId p = 0; p < product_instance.size(); ++p) {
    auto [l, r] = product_instance.split_id(p);
    if (A.test(l) && B.test(r)) out.set(p);
  }
  return out;
}

Witness a_times_a_transfer(PsgPtr product_instance, const ElemSet& A, int k,
                           const std::vector<ElemId>& L,
                           const std::vector<SeqPrefix>& F,
                           const Witness& w2k) {
  if (!product_instance) raise(Err::BadArgument, "null instance");
  const PsgPtr& left = product_instance->left_factor();
  const PsgPtr& right = product_instance->right_factor();
  if (left->signature() != right->signature())
    raise(Err::BadArgument, "diagonal transfer needs a product of S with itself");
  if (F.empty()) raise(Err::EmptyFamily, "family F is empty");
  if (k < 1 || (int)F.size() > k)
    raise(Err::BadArgument, "family larger than k");
  require_well_formed(w2k);

  std::vector<SeqPrefix> G;
  G.reserve(2 * F.size());
  auto push_unique = [&](const SeqPrefix& p) {
    for (const auto& g : G)
      if (g.same_values(p)) return;
    G.push_back(p);
  };
  for (const auto& f : F) {
    auto [p1, p2] = project_prefix(f);
    push_unique(p1);
    push_unique(p2);
  }

  std::vector<ElemId> M = project_set(*product_instance, L, 1);
  auto M2 = project_set(*product_instance, L, 2);
  M.insert(M.end(), M2.begin(), M2.end());
  std::sort(M.begin(), M.end());
  M.erase(std::unique(M.begin(), M.end()), M.end());

  if (auto bad = witness_check(*left, A, M, G, w2k))
    raise(Err::ProjectionWitnessInvalid,
          "witness fails on the projected family at member " +
              std::to_string(bad->f_index));

  std::vector<ElemId> b;
  b.reserve(w2k.a.size());
  for (ElemId ai : w2k.a) b.push_back(product_instance->pair_id(ai, ai));
  Witness out{w2k.m, std::move(b), w2k.t};

  ElemSet AxA = product_set(*product_instance, A, A);
  if (auto bad = witness_check(*product_instance, AxA, L, F, out))
    raise(Err::ProjectionWitnessInvalid,
          "diagonal witness fails in the product at member " +
              std::to_string(bad->f_index));
  return out;
}

const char* to_string(ProductCrStatus st) {
  switch (st) {
  case ProductCrStatus::Assembled: return "Assembled";
  case ProductCrStatus::NoCommonR: return "NoCommonR";
  case ProductCrStatus::LeftRadiusFailure: return "LeftRadiusFailure";
  case ProductCrStatus::RightRadiusFailure: return "RightRadiusFailure";
  }
  return "?";
}

ProductCrResult product_cr_witness(PsgPtr product_instance, const ElemSet& A,
                                   const ElemSet& B, int k,
                                   const std::vector<ElemId>& L,
                                   const std::vector<SeqPrefix>& F,
                                   const ProductCrBounds& bounds, int workers) {
  if (!product_instance) raise(Err::BadArgument, "null instance");
  const PsgPtr& left = product_instance->left_factor();
  const PsgPtr& right = product_instance->right_factor();
  if (!left->identity_elem() || !right->identity_elem())
    raise(Err::NoIdentity, "product factors need two sided identities");
  if (F.empty()) raise(Err::EmptyFamily, "family F is empty");
  if (k < 1 || (int)F.size() > k)
    raise(Err::BadArgument, "family larger than k");
  if (L.empty()) raise(Err::EmptyFamily, "base family L is empty");

  std::vector<SeqPrefix> G1, G2;
  G1.reserve(F.size());
  G2.reserve(F.size());
  auto push_unique = [](std::vector<SeqPrefix>& v, const SeqPrefix& p) {
    for (const auto& g : v)
      if (g.same_values(p)) return;
    v.push_back(p);
  };
  int min_len = F.front().length();
  for (const auto& f : F) {
    if (f.instance().get() != product_instance.get())
      raise(Err::BadArgument, "pool member built over a different instance");
    min_len = std::min(min_len, f.length());
    auto [p1, p2] = project_prefix(f);
    push_unique(G1, p1);
    push_unique(G2, p2);
  }

  std::vector<ElemId> L1 = project_set(*product_instance, L, 1);
  std::vector<ElemId> L2 = project_set(*product_instance, L, 2);

  ProductCrResult res;
  auto ru = k_cr_radius(left, A, k, L1, G1, bounds.m_max, bounds.r_max,
                        "product-left", workers);
  if (!ru.r) {
    res.status = ProductCrStatus::LeftRadiusFailure;
    return res;
  }
  res.u = ru.r;
  auto rv = k_cr_radius(right, B, k, L2, G2, bounds.m_max, bounds.r_max,
                        "product-right", workers);
  if (!rv.r) {
    res.status = ProductCrStatus::RightRadiusFailure;
    return res;
  }
  res.v = rv.r;

  auto q = ip_star_intersection_q(*ru.r, *rv.r, bounds.fu_r_max, workers);
  if (!q) {
    res.status = ProductCrStatus::NoCommonR;
    return res;
  }
  res.q = q;

  // both theta queries must accept one common R inside [1..q]; every f must
  // be long enough to index it
  int span = std::min(*q, min_len);
  ThetaQuery q1{left, A, L1, G1, {}};
  ThetaQuery q2{right, B, L2, G2, {}};
  std::optional<std::vector<ElemId>> a1, a2;
  std::optional<std::vector<int>> R;
  if (span > 0) {
    for_each_subset((size_t)span, span, [&](const std::vector<ElemId>& sub) {
      std::vector<int> cand(sub.size());
      for (size_t i = 0; i < sub.size(); ++i) cand[i] = (int)sub[i] + 1;
      q1.M = cand;
      auto h1 = theta_contains(q1, bounds.theta_cap, workers);
      if (!h1) return true;
      q2.M = cand;
      auto h2 = theta_contains(q2, bounds.theta_cap, workers);
      if (!h2) return true;
      a1 = h1;
      a2 = h2;
      R = std::move(cand);
      return false;
    });
  }
  if (!R) {
    res.status = ProductCrStatus::NoCommonR;
    return res;
  }
  res.R = R;

  std::vector<ElemId> c;
  c.reserve(a1->size());
  for (size_t i = 0; i < a1->size(); ++i)
    c.push_back(product_instance->pair_id((*a1)[i], (*a2)[i]));
  Witness w{(int)R->size(), std::move(c), *R};

  ElemSet AxB = product_set(*product_instance, A, B);
  if (auto bad = witness_check(*product_instance, AxB, L, F, w))
    raise(Err::WitnessInvalid,
          "assembled product witness fails at member " +
              std::to_string(bad->f_index));
  res.status = ProductCrStatus::Assembled;
  res.witness = std::move(w);
  return res;
}

} // namespace psgcr
