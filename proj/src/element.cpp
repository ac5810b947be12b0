#include "psgcr/element.hpp"

#include <algorithm>

#include "psgcr/errors.hpp"

namespace psgcr {

Element Element::small_set(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (v.empty()) raise(Err::BadArgument, "small_set: empty set");
  return Element(std::move(v));
}

Element Element::rat_set(std::vector<Rat> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (v.empty()) raise(Err::BadArgument, "rat_set: empty set");
  return Element(std::move(v));
}

Element Element::word(Word w) {
  std::sort(w.begin(), w.end());
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i].first == w[i + 1].first)
      raise(Err::BadArgument, "word: duplicate position");
  if (w.empty()) raise(Err::BadArgument, "word: empty domain");
  return Element(std::move(w));
}

Element Element::pair(Element left, Element right) {
  return Element(PairPayload{std::make_shared<const Element>(std::move(left)),
                             std::make_shared<const Element>(std::move(right))});
}

bool operator==(const Element& a, const Element& b) {
  if (a.payload.index() != b.payload.index()) return false;
  switch (a.payload.index()) {
    case 0: return std::get<0>(a.payload) == std::get<0>(b.payload);
    case 1: return std::get<1>(a.payload) == std::get<1>(b.payload);
    case 2: return std::get<2>(a.payload) == std::get<2>(b.payload);
    case 3: {
      const auto& pa = std::get<3>(a.payload);
      const auto& pb = std::get<3>(b.payload);
      return *pa.left == *pb.left && *pa.right == *pb.right;
    }
    case 4: return std::get<4>(a.payload).id == std::get<4>(b.payload).id;
    default: return true;
  }
}

bool operator<(const Element& a, const Element& b) {
  if (a.payload.index() != b.payload.index())
    return a.payload.index() < b.payload.index();
  switch (a.payload.index()) {
    case 0: return std::get<0>(a.payload) < std::get<0>(b.payload);
    case 1: {
      const auto& va = std::get<1>(a.payload);
      const auto& vb = std::get<1>(b.payload);
      return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
    }
    case 2: return std::get<2>(a.payload) < std::get<2>(b.payload);
    case 3: {
      const auto& pa = std::get<3>(a.payload);
      const auto& pb = std::get<3>(b.payload);
      if (*pa.left < *pb.left) return true;
      if (*pb.left < *pa.left) return false;
      return *pa.right < *pb.right;
    }
    case 4: return std::get<4>(a.payload).id < std::get<4>(b.payload).id;
    default: return false;
  }
}

std::string Element::str() const {
  switch (payload.index()) {
    case 0: {
      const auto& v = std::get<0>(payload);
      std::string s = "{";
      for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
      }
      return s + "}";
    }
    case 1: {
      const auto& v = std::get<1>(payload);
      std::string s = "{";
      for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
      }
      return s + "}";
    }
    case 2: {
      const auto& w = std::get<2>(payload);
      std::string s = "<";
      for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i].first) + ":" + std::string(1, w[i].second);
      }
      return s + ">";
    }
    case 3: {
      const auto& p = std::get<3>(payload);
      return "(" + p.left->str() + "," + p.right->str() + ")";
    }
    case 4: return std::to_string(std::get<4>(payload).id);
    default: return "e";
  }
}

const char* err_name(Err e) {
  switch (e) {
    case Err::ElementNotInUniverse: return "ElementNotInUniverse";
    case Err::EmptyFamily: return "EmptyFamily";
    case Err::AlreadyHasIdentity: return "AlreadyHasIdentity";
    case Err::UniverseCapExceeded: return "UniverseCapExceeded";
    case Err::NotAssociative: return "NotAssociative";
    case Err::BadTable: return "BadTable";
    case Err::IndexOutOfRange: return "IndexOutOfRange";
    case Err::EmptyIndexSet: return "EmptyIndexSet";
    case Err::LengthCapExceeded: return "LengthCapExceeded";
    case Err::LengthMismatch: return "LengthMismatch";
    case Err::PrefixInvalid: return "PrefixInvalid";
    case Err::PrefixTooShort: return "PrefixTooShort";
    case Err::PoolNotRClosed: return "PoolNotRClosed";
    case Err::NoSuitableA: return "NoSuitableA";
    case Err::NoSuitableA2: return "NoSuitableA2";
    case Err::UndefinedComposition: return "UndefinedComposition";
    case Err::NotCommutative: return "NotCommutative";
    case Err::UndefinedProduct: return "UndefinedProduct";
    case Err::NotInA: return "NotInA";
    case Err::NoHSequence: return "NoHSequence";
    case Err::RTooSmall: return "RTooSmall";
    case Err::NoIdentity: return "NoIdentity";
    case Err::WitnessInvalid: return "WitnessInvalid";
    case Err::ProjectionWitnessInvalid: return "ProjectionWitnessInvalid";
    case Err::ParseError: return "ParseError";
    case Err::InvalidPrefix: return "InvalidPrefix";
    case Err::UnknownFamily: return "UnknownFamily";
    case Err::UnknownName: return "UnknownName";
    case Err::BadArgument: return "BadArgument";
  }
  return "UnknownError";
}

} // namespace psgcr
