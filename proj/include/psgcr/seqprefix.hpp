// Finite prefixes of adequate sequences: length-r tuples whose increasing-
// index products are all defined. Index sets H over {1..r} are bitmasks
// (bit i-1 = index i); the canonical order on index sets is ascending mask
// value, which refines ordering by largest index.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "psgcr/psg.hpp"

namespace psgcr {

using IndexSet = uint32_t;

inline constexpr int kPrefixLengthCap = 20;

struct PrefixViolation {
  IndexSet H; // least failing index set in canonical order
};

// checks every nonempty H via shared partial products; r capped
std::optional<PrefixViolation> validate_prefix(const Psg& s,
                                               const std::vector<ElemId>& values,
                                               int length_cap = kPrefixLengthCap);

class SeqPrefix {
public:
  // validates on construction; PrefixInvalid carries the least failing H
  SeqPrefix(PsgPtr s, std::vector<ElemId> values,
            int length_cap = kPrefixLengthCap);

  const PsgPtr& instance() const { return s_; }
  int length() const { return static_cast<int>(values_.size()); }
  ElemId value(int t) const; // 1-based, IndexOutOfRange
  const std::vector<ElemId>& values() const { return values_; }

  // product over H in increasing index order; defined for every nonempty H
  ElemId fp(IndexSet H) const;
  // all distinct FP values, ascending ids
  std::vector<ElemId> all_fp_values() const;

  std::string str() const;
  bool same_values(const SeqPrefix& o) const { return values_ == o.values_; }

private:
  PsgPtr s_;
  std::vector<ElemId> values_;
};

// backtracking in canonical element order for a length-n prefix with all FP
// values inside A; nullopt = bound exhausted
std::optional<SeqPrefix> find_fp_sequence(PsgPtr s, const ElemSet& A, int n,
                                          int length_cap = kPrefixLengthCap);

// appends k terms to f keeping every new FP value defined and inside A;
// candidates are exactly the elements composable with all existing FP values,
// i.e. they are drawn from sigma of that value set
std::optional<SeqPrefix> extend_prefix(const SeqPrefix& f, int k, const ElemSet& A,
                                       int length_cap = kPrefixLengthCap);

// componentwise pairing into a product instance; LengthMismatch when lengths
// differ, BadArgument when p is not the product of the component instances
SeqPrefix pair_prefixes(PsgPtr p, const SeqPrefix& f, const SeqPrefix& g);
std::pair<SeqPrefix, SeqPrefix> project_prefix(const SeqPrefix& h);

// true when every member has length >= r
bool pool_r_closed(const std::vector<SeqPrefix>& pool, int r);

} // namespace psgcr
