// Finite-unions Ramsey engine over the partial semigroup of nonempty finite
// subsets of {1..r} under disjoint union. Blocks are bitmasks (bit i-1 =
// integer i). An IP_s structure is a tuple of s order-separated blocks all of
// whose 2^s-1 unions share one color.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "psgcr/jcr.hpp"

namespace psgcr {

using Block = uint64_t;

// order-separated block tuple: max(blocks[i]) < min(blocks[i+1])
struct BlockSeq {
  std::vector<Block> blocks;

  std::string str() const;
};

Block block_of(const std::vector<int>& ints);
std::vector<int> block_ints(Block b);
// validates order separation
BlockSeq make_block_seq(const std::vector<std::vector<int>>& blocks);

// total k-coloring of the nonempty subsets of {1..r}
struct Coloring {
  int r = 0;
  int k = 0;
  std::vector<int> color; // color of mask m at index m-1, values 1..k

  int at(Block cell) const { return color[cell - 1]; }
  std::string str() const; // one "subset:color" line per cell, ascending mask
};

// scans order-separated s-tuples of blocks over [1..r] in canonical order
// (lexicographic by mask sequence) for one with monochromatic unions
std::optional<BlockSeq> find_mono_ip(const Coloring& c, int s);

struct FuResult {
  std::optional<int> r;                // nullopt = bound exhausted
  std::optional<Coloring> good_at_prev; // certificate coloring at r-1
};

inline constexpr int kFuDefaultRMax = 8;

// minimal r <= r_max such that every k-coloring of the nonempty subsets of
// [1..r] contains a monochromatic IP_s tuple. The good-coloring search
// backtracks over cells ordered by max element then lexicographically by
// element list, fixes the color of {1} to 1, and prunes a partial assignment
// as soon as it completes a monochromatic union tuple.
FuResult fu_ramsey_number(int s, int k, int r_max = kFuDefaultRMax,
                          int workers = 1);

// coloring transfer along an IP_r structure: d(F) = c(union of H_j over F)
// is a coloring of the subsets of [1..r]; a monochromatic F-tuple for d maps
// back to K_i = union of H_j over F_i with FU(K) monochromatic under c.
// RTooSmall when d admits no monochromatic tuple, which signals that r is
// below the transfer radius for the colors in use.
BlockSeq transfer_coloring(const BlockSeq& H, const std::function<int(Block)>& c,
                           int s);

// the radius q with: every 2-coloring of an IP_q structure has a
// monochromatic IP_max(r,s) substructure, so an IP_r* set meets an IP_s* set
// in an IP_q* set
std::optional<int> ip_star_intersection_q(int r, int s,
                                          int r_max = kFuDefaultRMax,
                                          int workers = 1);

// the ordered-union truncation that is not a 1-CR set: ground values
// 1 - 1/t for t <= T together with 1 and the integers 2..T+1, sequences
// f_n(t) = {1-1/t} for t <= n and {t} above, L = {{1}}. Every radius r <= T
// must come back ProvenEmpty.
struct SnotcrCertificate {
  int T = 0;
  PsgPtr instance;
  std::vector<SeqPrefix> fs; // f_1..f_T, each of length T
  std::vector<ElemId> L;
  struct Run {
    int r = 0;
    SearchResult result;
  };
  std::vector<Run> runs;
  bool all_proven_empty = false;
  // structural facts echoed from the instance: every member of sigma(L) has
  // minimum above 1, and min f_r(t) = 1 - 1/t < 1 for every t <= r
  bool sigma_min_above_one = false;
  bool f_min_below_one = false;
};

SnotcrCertificate snotcr_verify(int T, int workers = 1);

// the ordered ground set used by snotcr_verify
std::vector<Rat> snotcr_ground(int T);

} // namespace psgcr
