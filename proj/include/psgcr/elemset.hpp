// Dense bitset over element ids. Workhorse for phi/sigma results, membership
// sets and report material; iteration order is ascending id = canonical order.
#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace psgcr {

using ElemId = uint32_t;

class ElemSet {
public:
  ElemSet() = default;
  explicit ElemSet(size_t n) : n_(n), bits_((n + 63) / 64, 0) {}

  static ElemSet full(size_t n) {
    ElemSet s(n);
    for (auto& w : s.bits_) w = ~0ull;
    s.trim();
    return s;
  }

  size_t universe_size() const { return n_; }

  void set(ElemId i) { bits_[i >> 6] |= 1ull << (i & 63); }
  void reset(ElemId i) { bits_[i >> 6] &= ~(1ull << (i & 63)); }
  bool test(ElemId i) const { return (bits_[i >> 6] >> (i & 63)) & 1; }

  size_t count() const {
    size_t c = 0;
    for (auto w : bits_) c += static_cast<size_t>(__builtin_popcountll(w));
    return c;
  }
  bool empty() const {
    for (auto w : bits_)
      if (w) return false;
    return true;
  }

  ElemSet& operator&=(const ElemSet& o) {
    for (size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
    return *this;
  }
  ElemSet& operator|=(const ElemSet& o) {
    for (size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
    return *this;
  }
  ElemSet complement() const {
    ElemSet s(n_);
    for (size_t i = 0; i < bits_.size(); ++i) s.bits_[i] = ~bits_[i];
    s.trim();
    return s;
  }

  bool operator==(const ElemSet& o) const { return n_ == o.n_ && bits_ == o.bits_; }

  bool is_subset_of(const ElemSet& o) const {
    for (size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & ~o.bits_[i]) return false;
    return true;
  }

  // raw words, usable as an ordered map key
  const std::vector<uint64_t>& words() const { return bits_; }

  template <class F>
  void for_each(F&& f) const {
    for (size_t wi = 0; wi < bits_.size(); ++wi) {
      uint64_t w = bits_[wi];
      while (w) {
        int b = __builtin_ctzll(w);
        f(static_cast<ElemId>(wi * 64 + b));
        w &= w - 1;
      }
    }
  }

  std::vector<ElemId> to_vector() const {
    std::vector<ElemId> v;
    v.reserve(count());
    for_each([&](ElemId i) { v.push_back(i); });
    return v;
  }

private:
  void trim() {
    if (n_ % 64 && !bits_.empty()) bits_.back() &= (1ull << (n_ % 64)) - 1;
  }
  size_t n_ = 0;
  std::vector<uint64_t> bits_;
};

} // namespace psgcr
