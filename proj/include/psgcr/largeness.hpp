// Bounded checkers for the classical largeness notions, in their
// combinatorial characterizations with the partial-semigroup reading:
// translate candidates come from sigma(F) and t^{-1}A = {s in phi(t) :
// t*s in A}. Verdicts are relative to explicit quantifier bounds and never
// claim anything at the algebraic (ultrafilter) level.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "psgcr/seqprefix.hpp"

namespace psgcr {

inline constexpr const char* kLargenessSemantics =
    "combinatorial characterization, bounded";

struct LargenessReport {
  std::string notion;
  bool verdict = false;
  // every universally quantified family at the bound was skipped because its
  // sigma was empty, so the verdict is true by default
  bool vacuous = false;
  std::vector<std::pair<std::string, long long>> bounds;
  // verdict true: the covering/translate family (G or H) where the notion has
  // one; verdict false for thick: the first blocking F in canonical order
  std::optional<std::vector<ElemId>> witness_family;
  // thick: F -> canonical-least x with F*x inside the target, one entry per
  // non-skipped F; piecewise syndetic: same map for the winning G
  std::vector<std::pair<std::vector<ElemId>, ElemId>> x_map;
  // ip_r_star false: the complement prefix it found
  std::optional<SeqPrefix> avoiding_prefix;
};

// every F with 1 <= |F| <= b and sigma(F) nonempty has x in sigma(F) with
// F*x inside A
LargenessReport is_thick(PsgPtr s, const ElemSet& A, int b);

// some G with 1 <= |G| <= g_max covers the universe by translates:
// every s lies in some t^{-1}A, t in G
LargenessReport is_syndetic(PsgPtr s, const ElemSet& A, int g_max);

// some G (|G| <= g_max) whose union of translates is thick at bound b
LargenessReport is_piecewise_syndetic(PsgPtr s, const ElemSet& A, int g_max,
                                      int b);

// some H (|H| <= h_max) such that every T (1 <= |T| <= t_bound) with
// sigma(T) nonempty has x in sigma(T) with (T intersect sigma(H))*x inside
// the union of s^{-1}A over H
LargenessReport is_c_piecewise_syndetic(PsgPtr s, const ElemSet& A, int h_max,
                                        int t_bound = 3);

// length-r prefix with all FP values in A; nullopt = bound exhausted
std::optional<SeqPrefix> find_ip_r(PsgPtr s, const ElemSet& A, int r);

// true iff no length-r prefix lives entirely in the complement of A
LargenessReport is_ip_r_star(PsgPtr s, const ElemSet& A, int r);

// canonical subset order used by every checker: size ascending, then
// lexicographic on the ascending id sequence; visit returns false to stop
void for_each_subset(size_t n, int max_size,
                     const std::function<bool(const std::vector<ElemId>&)>& visit);

} // namespace psgcr
