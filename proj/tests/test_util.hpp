// Shared helpers for the unit and acceptance suites.
#pragma once

#include <optional>
#include <vector>

#include "psgcr/psg.hpp"

namespace testutil {

inline psgcr::Element ss(std::vector<int> v) {
  return psgcr::Element::small_set(std::move(v));
}

inline psgcr::Element rs(std::vector<psgcr::Rat> v) {
  return psgcr::Element::rat_set(std::move(v));
}

inline psgcr::ElemSet set_of(const psgcr::Psg& s,
                             const std::vector<psgcr::Element>& es) {
  psgcr::ElemSet out(s.size());
  for (const auto& e : es) out.set(s.id_of(e));
  return out;
}

inline std::vector<psgcr::ElemId> ids_of(const psgcr::Psg& s,
                                         const std::vector<psgcr::Element>& es) {
  std::vector<psgcr::ElemId> out;
  out.reserve(es.size());
  for (const auto& e : es) out.push_back(s.id_of(e));
  return out;
}

// code of the PsgError thrown by f, or nullopt when f completed
template <class F>
std::optional<psgcr::Err> thrown(F&& f) {
  try {
    f();
  } catch (const psgcr::PsgError& e) {
    return e.code();
  }
  return std::nullopt;
}

} // namespace testutil
