// Interleaved-product witness machinery. A witness (m, a, t) places
// a(1)*f(t(1))*a(2)*...*a(m)*f(t(m))*a(m+1) in A intersect sigma(L) for
// every sequence f of the family under test. This header covers witness
// verification, bounded search with an emptiness certificate for
// ordered-union instances, radius computation, the uniform-index properties
// that feed constructive witnesses, and the witness transforms.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "psgcr/seqprefix.hpp"

namespace psgcr {

struct Witness {
  int m = 0;
  std::vector<ElemId> a; // m+1 entries
  std::vector<int> t;    // m entries, strictly increasing, 1-based

  int max_t() const { return t.empty() ? 0 : t.back(); }
  std::string str(const Psg& s) const;
};

// raises BadArgument unless a and t have matching sizes and t is strictly
// increasing and positive
void require_well_formed(const Witness& w);

enum class SearchStatus { Found, ProvenEmpty, BoundExhausted };
const char* to_string(SearchStatus st);

// why one pool member rejected the witness; the target set is
// A intersect sigma(L), so NotInA covers sigma(L) misses as well
struct CheckFailure {
  size_t f_index = 0;
  Err reason = Err::UndefinedProduct; // UndefinedProduct or NotInA
  int factor = 0;                     // 1-based factor position in the chain
};

// evaluates the interleaved product left to right for every f; nullopt = ok.
// PrefixTooShort when some f is shorter than max t.
std::optional<CheckFailure> witness_check(const Psg& s, const ElemSet& A,
                                          const std::vector<ElemId>& L,
                                          const std::vector<SeqPrefix>& F,
                                          const Witness& w);

// chain value a(1)*f(t(1))*...*a(m+1) for one f; nullopt when a step is
// undefined
std::optional<ElemId> interleaved_product(const Psg& s, const SeqPrefix& f,
                                          const Witness& w);

struct SearchResult {
  SearchStatus status = SearchStatus::BoundExhausted;
  std::optional<Witness> witness;
  // ProvenEmpty justification, one line, machine-friendly
  std::string certificate;
};

// search order: m ascending, then t-tuples lexicographically, then a-tuples
// by depth-first descent in canonical element order, so the first hit is the
// canonical least witness. min_max_t restricts to t-tuples whose maximum is
// at least that value; radius-incremental callers use it to skip tuples they
// have already exhausted. For ordered-union instances a feasibility pre-pass
// may certify emptiness for every m, not just m <= m_max: the final product
// needs min a(1) > max(union L) while chained definedness needs
// max a(1) < min f(t(1)), and when no ground value lies strictly between the
// two thresholds no opening a(1) exists at all.
SearchResult witness_search(PsgPtr s, const ElemSet& A,
                            const std::vector<ElemId>& L,
                            const std::vector<SeqPrefix>& F, int r, int m_max,
                            int workers = 1, int min_max_t = 1);

inline constexpr int kDefaultMMax = 3;
inline constexpr int kDefaultRMax = 12;

struct CrRadiusResult {
  std::optional<int> r; // nullopt = Failure within r_max
  // when r is absent: the first subfamily in canonical order that still
  // fails at r_max, and how its search ended
  std::vector<size_t> blocking;
  SearchStatus blocking_status = SearchStatus::BoundExhausted;
  std::string blocking_certificate;
  // subfamily (as pool indices, canonical order) -> its witness
  std::vector<std::pair<std::vector<size_t>, Witness>> per_family;
  int k = 0;
  int m_max = 0;
  int r_max = 0;
  std::string pool_id;
};

// minimal r <= r_max such that every subfamily of the pool with size <= k
// has a witness with max t <= r
CrRadiusResult k_cr_radius(PsgPtr s, const ElemSet& A, int k,
                           const std::vector<ElemId>& L,
                           const std::vector<SeqPrefix>& pool, int m_max,
                           int r_max, const std::string& pool_id = "pool",
                           int workers = 1);

struct DaggerResult {
  std::optional<int> r; // minimal uniform-index radius, nullopt = Failure
  // k*d+1 with d = |union L|, filled for disjoint-union instances
  std::optional<int> formula_bound;
  // when r is absent: a subfamily with no common good index <= r_max
  std::vector<size_t> blocking;
};

// minimal r such that every subfamily of size <= k has one index t <= r with
// f(t) in sigma(L) for all its members
DaggerResult dagger_radius(PsgPtr s, int k, const std::vector<ElemId>& L,
                           const std::vector<SeqPrefix>& pool, int r_max);

// least r <= r_max with f(r) in sigma(L) for every pool member
std::optional<int> has_ddagger(PsgPtr s, const std::vector<ElemId>& L,
                               const std::vector<SeqPrefix>& pool, int r_max);

// builds the two-term witness from a uniform index t: picks the canonical
// least a in sigma(L) with every f(t) in sigma(L*a), then the canonical
// least a2 in sigma({x*a*f(t) : x in L, f in F}); the result lands every f
// in sigma(L)
Witness dagger_to_witness(PsgPtr s, const std::vector<ElemId>& L,
                          const std::vector<SeqPrefix>& F, int t);

// b(1) = s_elem*a(1), b(m+1) = a(m+1)*x, middle entries copied. A is the
// caller's target; the transform itself only composes. s_elem must belong
// to H, x to sigma of the witness product.
Witness ps_to_1cr_witness(PsgPtr s, const ElemSet& A,
                          const std::vector<ElemId>& H, ElemId x, ElemId s_elem,
                          const Witness& w);

// commutative collapse: b = product of all a(j), H = {t(1),...,t(m)}.
// For every f in F the collapsed form b * prod_{t in H} f(t) is verified to
// equal the interleaved product exactly.
struct NormalForm {
  ElemId b = 0;
  std::vector<int> H;
};
NormalForm normalize_commutative(PsgPtr s, const Witness& w,
                                 const std::vector<SeqPrefix>& F);

// commutative lift: with r = max H, M = every subproduct of an F member
// over [1..r], finds h with FP(h) in sigma(M) (pool_aux candidates first,
// then fresh search) and returns a(1)=b, a(j+1)=h(t(j)). The interleaved
// product is verified to equal b * prod_{t in H} (f(t)*h(t)) exactly.
struct LiftResult {
  Witness w;
  SeqPrefix h;
};
LiftResult lift_commutative(PsgPtr s, ElemId b, const std::vector<int>& H,
                            const std::vector<SeqPrefix>& F,
                            const std::vector<SeqPrefix>& pool_aux);

// bounded exploration of partition behaviour: radii for the union and both
// parts; no theorem claim attached
struct ProbeReport {
  CrRadiusResult whole;
  CrRadiusResult part1;
  CrRadiusResult part2;
};
ProbeReport partition_regularity_probe(PsgPtr s, const ElemSet& A1,
                                       const ElemSet& A2, int k,
                                       const std::vector<ElemId>& L,
                                       const std::vector<SeqPrefix>& pool,
                                       int m_max, int r_max, int workers = 1);

} // namespace psgcr
