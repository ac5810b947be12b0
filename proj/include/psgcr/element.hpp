// Element payloads for the built-in partial semigroup families, with a
// canonical total order (payload kind first, then lexicographic within the
// kind). Universe enumeration, search tie-breaking and report output all use
// this order.
#pragma once

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "psgcr/rational.hpp"

namespace psgcr {

struct Element;
using ElementPtr = std::shared_ptr<const Element>;

// nonempty finite subset of {1..N}, strictly increasing
using SmallSet = std::vector<int>;
// nonempty finite set of exact rationals, strictly increasing
using RatSet = std::vector<Rat>;
// partial function from positions 1..N to alphabet symbols, sorted by position
using Word = std::vector<std::pair<int, char>>;

struct PairPayload {
  ElementPtr left;
  ElementPtr right;
};

struct Atom {
  int id = 0;
};

struct IdentityMark {};

struct Element {
  // variant index doubles as the payload-kind rank in the canonical order
  std::variant<SmallSet, RatSet, Word, PairPayload, Atom, IdentityMark> payload;

  Element() = default;
  explicit Element(SmallSet s) : payload(std::move(s)) {}
  explicit Element(RatSet s) : payload(std::move(s)) {}
  explicit Element(Word w) : payload(std::move(w)) {}
  explicit Element(PairPayload p) : payload(std::move(p)) {}
  explicit Element(Atom a) : payload(a) {}
  explicit Element(IdentityMark m) : payload(m) {}

  static Element small_set(std::vector<int> v);
  static Element rat_set(std::vector<Rat> v);
  static Element word(Word w);
  static Element pair(Element left, Element right);
  static Element atom(int id) { return Element(Atom{id}); }
  static Element identity() { return Element(IdentityMark{}); }

  bool is_identity() const { return payload.index() == 5; }

  std::string str() const;
};

bool operator==(const Element& a, const Element& b);
inline bool operator!=(const Element& a, const Element& b) { return !(a == b); }
// canonical order
bool operator<(const Element& a, const Element& b);

} // namespace psgcr
