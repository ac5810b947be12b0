// Product constructions: the index-set membership search behind the Theta
// machinery, identity-padded block transforms, the diagonal A-times-A
// transfer, and assembly of product witnesses from componentwise radii.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "psgcr/ramsey.hpp"

namespace psgcr {

// membership query for one candidate index set M: does some a-tuple land
// every family member in A intersect sigma(L) with t fixed to M?
struct ThetaQuery {
  PsgPtr instance; // must carry a two sided identity
  ElemSet A;
  std::vector<ElemId> L;
  std::vector<SeqPrefix> F;
  std::vector<int> M; // strictly increasing, every f at least max M long
};

// exhaustive a-tuple search with prefix pruning. Candidates at each position
// run identity first, then the remaining elements in canonical order, capped
// at per_position_cap per position; a hit always passes witness_check with
// t = M. nullopt = bound exhausted at the cap.
std::optional<std::vector<ElemId>> theta_contains(
    const ThetaQuery& q, size_t per_position_cap = kDefaultUniverseCap,
    int workers = 1);

// identity-padded expansion of a witness for the block-compressed family.
// With g_f(n) = the product of f over block H_n, a witness (m, a, t) for
// {g_f} expands to c over M = union of the blocks H_{t(j)}: c(i) = a(j) at
// the first element of block t(j), identity elsewhere, c(p+1) = a(m+1). The
// c-interleaved product is verified to equal the a-interleaved product
// exactly for every f.
struct ThetaTransform {
  std::vector<ElemId> c;
  std::vector<int> M;
};
ThetaTransform theta_block_transform(PsgPtr s_e, const ElemSet& A,
                                     const std::vector<SeqPrefix>& F,
                                     const std::vector<ElemId>& L,
                                     const BlockSeq& H, const Witness& w);

// diagonal transfer: a witness for the projected family (both coordinate
// projections of every f) into A intersect sigma(pi1[L] union pi2[L]) lifts
// to b(i) = (a(i), a(i)) in the product instance against A x A and L
Witness a_times_a_transfer(PsgPtr product_instance, const ElemSet& A, int k,
                           const std::vector<ElemId>& L,
                           const std::vector<SeqPrefix>& F, const Witness& w2k);

enum class ProductCrStatus { Assembled, NoCommonR, LeftRadiusFailure, RightRadiusFailure };
const char* to_string(ProductCrStatus st);

struct ProductCrResult {
  ProductCrStatus status = ProductCrStatus::NoCommonR;
  std::optional<Witness> witness; // in the product instance
  std::optional<int> u, v, q;     // componentwise radii and the common radius
  std::optional<std::vector<int>> R;
};

struct ProductCrBounds {
  int m_max = kDefaultMMax;
  int r_max = kDefaultRMax;
  int fu_r_max = kFuDefaultRMax;
  size_t theta_cap = kDefaultUniverseCap;
};

// end-to-end product witness: componentwise radii u and v from the projected
// families, q = the IP* intersection radius of (u, v), then the first
// R inside [1..q] (by size, then lexicographically) that both component
// theta queries accept; the result interleaves c(i) = (a(i), b(i))
ProductCrResult product_cr_witness(PsgPtr product_instance, const ElemSet& A,
                                   const ElemSet& B, int k,
                                   const std::vector<ElemId>& L,
                                   const std::vector<SeqPrefix>& F,
                                   const ProductCrBounds& bounds = {},
                                   int workers = 1);

// projections of a set of pair elements; side 1 = left, 2 = right
std::vector<ElemId> project_set(const Psg& product_instance,
                                const std::vector<ElemId>& L, int side);

// {(a,b) : a in A, b in B} as a set over the product universe
ElemSet product_set(const Psg& product_instance, const ElemSet& A,
                    const ElemSet& B);

} // namespace psgcr
