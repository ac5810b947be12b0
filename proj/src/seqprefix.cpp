#include "psgcr/seqprefix.hpp"

#include <algorithm>

namespace psgcr {

namespace {
constexpr ElemId kNone = ~ElemId(0);

std::string index_set_str(IndexSet H) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i)
    if (H & (1u << i)) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}
} // namespace

std::optional<PrefixViolation> validate_prefix(const Psg& s,
                                               const std::vector<ElemId>& values,
                                               int length_cap) {
  int r = static_cast<int>(values.size());
  if (r > length_cap)
    raise(Err::LengthCapExceeded, "prefix length " + std::to_string(r) +
                                      " exceeds cap " + std::to_string(length_cap));
  for (ElemId v : values)
    if (v >= s.size()) raise(Err::ElementNotInUniverse, "prefix value id out of range");
  if (r == 0) return std::nullopt;
  // product(H) = product(H minus top index) * f(top index); ascending masks
  // visit each H after all of its subsets
  std::vector<ElemId> prod(size_t(1) << r, kNone);
  for (IndexSet h = 1; h < (IndexSet(1) << r); ++h) {
    int top = 31 - __builtin_clz(h);
    IndexSet rest = h & ~(IndexSet(1) << top);
    if (rest == 0) {
      prod[h] = values[static_cast<size_t>(top)];
      continue;
    }
    auto p = s.apply(prod[rest], values[static_cast<size_t>(top)]);
    if (!p) return PrefixViolation{h};
    prod[h] = *p;
  }
  return std::nullopt;
}

SeqPrefix::SeqPrefix(PsgPtr s, std::vector<ElemId> values, int length_cap)
    : s_(std::move(s)), values_(std::move(values)) {
  if (!s_) raise(Err::BadArgument, "prefix: null instance");
  if (values_.empty()) raise(Err::BadArgument, "prefix: empty value list");
  if (auto v = validate_prefix(*s_, values_, length_cap))
    raise(Err::PrefixInvalid, "undefined product at H=" + index_set_str(v->H));
}

ElemId SeqPrefix::value(int t) const {
  if (t < 1 || t > length())
    raise(Err::IndexOutOfRange, "prefix index " + std::to_string(t) +
                                    " outside 1.." + std::to_string(length()));
  return values_[static_cast<size_t>(t - 1)];
}

ElemId SeqPrefix::fp(IndexSet H) const {
  if (H == 0) raise(Err::EmptyIndexSet, "fp over empty index set");
  if (H >> length()) raise(Err::IndexOutOfRange, "fp index set exceeds prefix length");
  ElemId acc = kNone;
  for (int i = 0; i < length(); ++i) {
    if (!(H & (IndexSet(1) << i))) continue;
    if (acc == kNone) {
      acc = values_[static_cast<size_t>(i)];
    } else {
      auto p = s_->apply(acc, values_[static_cast<size_t>(i)]);
      if (!p) raise(Err::UndefinedProduct, "fp undefined despite valid prefix");
      acc = *p;
    }
  }
  return acc;
}

std::vector<ElemId> SeqPrefix::all_fp_values() const {
  std::vector<ElemId> out;
  for (IndexSet h = 1; h < (IndexSet(1) << length()); ++h) out.push_back(fp(h));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string SeqPrefix::str() const {
  std::string s = "[";
  for (int i = 0; i < length(); ++i) {
    if (i) s += ",";
    s += s_->element(values_[static_cast<size_t>(i)]).str();
  }
  return s + "]";
}

namespace {

// shared backtracking core: P = distinct FP values of the prefix so far; a
// candidate v must satisfy v in A and p*v defined and in A for every p in P
bool fp_backtrack(const Psg& s, const ElemSet& A, int want,
                  std::vector<ElemId>& chosen, std::vector<ElemId>& P) {
  if (want == 0) return true;
  size_t n = s.size();
  for (ElemId v = 0; v < n; ++v) {
    if (!A.test(v)) continue;
    bool ok = true;
    for (ElemId p : P) {
      auto q = s.apply(p, v);
      if (!q || !A.test(*q)) { ok = false; break; }
    }
    if (!ok) continue;
    size_t mark = P.size();
    auto push_unique = [&](ElemId x) {
      if (std::find(P.begin(), P.end(), x) == P.end()) P.push_back(x);
    };
    std::vector<ElemId> prods;
    prods.reserve(mark);
    for (size_t i = 0; i < mark; ++i) prods.push_back(*s.apply(P[i], v));
    push_unique(v);
    for (ElemId q : prods) push_unique(q);
    chosen.push_back(v);
    if (fp_backtrack(s, A, want - 1, chosen, P)) return true;
    chosen.pop_back();
    P.resize(mark);
  }
  return false;
}

} // namespace

std::optional<SeqPrefix> find_fp_sequence(PsgPtr s, const ElemSet& A, int n,
                                          int length_cap) {
  if (!s) raise(Err::BadArgument, "find_fp_sequence: null instance");
  if (n < 1) raise(Err::BadArgument, "find_fp_sequence: n must be >= 1");
  if (n > length_cap)
    raise(Err::LengthCapExceeded, "requested length exceeds cap");
  std::vector<ElemId> chosen, P;
  if (!fp_backtrack(*s, A, n, chosen, P)) return std::nullopt;
  return SeqPrefix(s, chosen, length_cap);
}

std::optional<SeqPrefix> extend_prefix(const SeqPrefix& f, int k, const ElemSet& A,
                                       int length_cap) {
  if (k < 1) raise(Err::BadArgument, "extend_prefix: k must be >= 1");
  if (f.length() + k > length_cap)
    raise(Err::LengthCapExceeded, "extended length exceeds cap");
  std::vector<ElemId> chosen = f.values();
  std::vector<ElemId> P = f.all_fp_values();
  if (!fp_backtrack(*f.instance(), A, k, chosen, P)) return std::nullopt;
  return SeqPrefix(f.instance(), chosen, length_cap);
}

SeqPrefix pair_prefixes(PsgPtr p, const SeqPrefix& f, const SeqPrefix& g) {
  if (!p || p->family() != Psg::Family::Product)
    raise(Err::BadArgument, "pair_prefixes: need a product instance");
  if (p->left_factor()->signature() != f.instance()->signature() ||
      p->right_factor()->signature() != g.instance()->signature())
    raise(Err::BadArgument, "pair_prefixes: factor instances do not match");
  if (f.length() != g.length())
    raise(Err::LengthMismatch, "pair_prefixes: component lengths differ");
  std::vector<ElemId> vals;
  vals.reserve(static_cast<size_t>(f.length()));
  for (int t = 1; t <= f.length(); ++t)
    vals.push_back(p->pair_id(f.value(t), g.value(t)));
  return SeqPrefix(p, vals);
}

std::pair<SeqPrefix, SeqPrefix> project_prefix(const SeqPrefix& h) {
  const PsgPtr& p = h.instance();
  if (p->family() != Psg::Family::Product)
    raise(Err::BadArgument, "project_prefix: need a product instance");
  std::vector<ElemId> ls, rs;
  for (int t = 1; t <= h.length(); ++t) {
    auto [l, r] = p->split_id(h.value(t));
    ls.push_back(l);
    rs.push_back(r);
  }
  return {SeqPrefix(p->left_factor(), ls), SeqPrefix(p->right_factor(), rs)};
}

bool pool_r_closed(const std::vector<SeqPrefix>& pool, int r) {
  for (const auto& f : pool)
    if (f.length() < r) return false;
  return true;
}

} // namespace psgcr
