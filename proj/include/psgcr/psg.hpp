// Finite partial semigroup instances. A partial binary operation on an
// enumerated universe, partial-associative: (x*y)*z is defined iff x*(y*z)
// is, and the two agree whenever defined. phi(a) = {b : a*b defined},
// sigma(F) = intersection of phi over F. Universes are materialized eagerly
// in canonical element order, so element ids are order-compatible with the
// canonical order and all searches break ties by ascending id.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "psgcr/element.hpp"
#include "psgcr/elemset.hpp"
#include "psgcr/errors.hpp"

namespace psgcr {

class Psg;
using PsgPtr = std::shared_ptr<const Psg>;

inline constexpr size_t kDefaultUniverseCap = 1ull << 16;

struct PsgOptions {
  size_t universe_cap = kDefaultUniverseCap;
};

class Psg {
public:
  enum class Family {
    ExplicitTable,
    FinSetDisjointUnion,
    FinSetOrderedUnion,
    LocatedWords,
    Product,
    IdentityAdjoined,
  };

  // rows[i][j] = id of i*j, or -1 when undefined; rejects non-associative
  // tables at load
  static PsgPtr explicit_table(const std::vector<std::vector<int>>& rows,
                               PsgOptions opt = {});
  static PsgPtr cyclic_group(int n, PsgOptions opt = {});
  // nonempty subsets of {1..n}, F*G = F union G iff F,G disjoint
  static PsgPtr finset_disjoint(int n, PsgOptions opt = {});
  // nonempty subsets of a finite rational ground set, F*G defined iff
  // max F < min G
  static PsgPtr finset_ordered(std::vector<Rat> ground, PsgOptions opt = {});
  // words = partial maps {1..n} -> alphabet, f*g defined iff
  // max dom f < min dom g
  static PsgPtr located_words(const std::string& alphabet, int n,
                              PsgOptions opt = {});
  // componentwise, defined iff both components are
  static PsgPtr product(PsgPtr left, PsgPtr right, PsgOptions opt = {});
  static PsgPtr adjoin_identity(PsgPtr base);

  Family family() const { return family_; }
  size_t size() const { return universe_.size(); }
  const Element& element(ElemId i) const { return universe_[i]; }
  const std::vector<Element>& universe() const { return universe_; }
  ElemSet universe_set() const { return ElemSet::full(size()); }

  std::optional<ElemId> find(const Element& e) const;
  ElemId id_of(const Element& e) const; // ElementNotInUniverse when absent

  std::optional<ElemId> apply(ElemId a, ElemId b) const;
  std::optional<Element> apply(const Element& a, const Element& b) const;

  ElemSet phi(ElemId a) const;
  bool phi_nonempty(ElemId a) const;
  ElemSet sigma(const std::vector<ElemId>& family) const; // EmptyFamily on {}

  std::optional<ElemId> identity_elem() const;
  bool is_commutative() const;
  bool has_defined_pair() const;

  const std::string& signature() const { return signature_; }

  // product accessors (BadArgument off a non-product)
  const PsgPtr& left_factor() const;
  const PsgPtr& right_factor() const;
  ElemId pair_id(ElemId l, ElemId r) const;
  std::pair<ElemId, ElemId> split_id(ElemId p) const;
  // identity-adjoined accessor
  const PsgPtr& base() const;

  // ordered-union value bounds, for interval reasoning in witness search
  Rat ordered_min_value(ElemId) const;
  Rat ordered_max_value(ElemId) const;
  const std::vector<Rat>& ordered_ground() const;

private:
  Psg() = default;
  void build_index();

  Family family_ = Family::ExplicitTable;
  size_t cap_ = kDefaultUniverseCap;
  std::vector<Element> universe_; // ascending canonical order
  std::string signature_;

  // ExplicitTable
  std::vector<int32_t> table_;
  int tbl_n_ = 0;
  bool tbl_comm_ = false;
  std::optional<ElemId> tbl_identity_;

  // FinSet families: ground values (ordered family only uses rats_), masks
  std::vector<Rat> rats_;
  int ground_n_ = 0;
  std::vector<uint32_t> id2mask_;
  std::vector<ElemId> mask2id_;
  std::vector<int16_t> id2minidx_, id2maxidx_;

  // LocatedWords
  std::string alphabet_;
  int word_n_ = 0;
  std::vector<uint64_t> id2code_;
  std::vector<ElemId> code2id_;
  std::vector<int16_t> id2minpos_, id2maxpos_;

  // Product / IdentityAdjoined
  PsgPtr left_, right_, base_;
};

// Searches families of size 1..b_max for one with empty sigma. Exhaustive
// with a running-intersection tree; extensions that do not shrink the
// intersection are skipped (any minimal empty family avoids them). Witness is
// the lexicographically least family at the smallest bad size. Exponential in
// b_max; meant for small universes.
struct AdequacyReport {
  bool adequate_within_bound = true;
  int defect_size = 0;              // smallest family size with empty sigma
  std::vector<ElemId> witness;      // that family, ascending ids
  int b_max = 0;
  unsigned long long families_checked = 0;
};
AdequacyReport adequacy_defect(const Psg& s, int b_max);

} // namespace psgcr
