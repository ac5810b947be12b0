#include "psgcr/psg.hpp"

#include <algorithm>
#include <cmath>

namespace psgcr {

namespace {

constexpr ElemId kNoId = ~ElemId(0);

void check_cap(size_t n, size_t cap, const std::string& what) {
  if (n > cap)
    raise(Err::UniverseCapExceeded,
          what + ": universe size " + std::to_string(n) + " exceeds cap " +
              std::to_string(cap));
}

// all nonempty subsets of {0..n-1} as bitmasks, in lexicographic order of the
// increasing index sequences
void enumerate_subsets_lex(int n, std::vector<uint32_t>& out) {
  std::vector<int> stack;
  auto rec = [&](auto&& self, int next, uint32_t mask) -> void {
    for (int v = next; v < n; ++v) {
      uint32_t m = mask | (1u << v);
      out.push_back(m);
      self(self, v + 1, m);
    }
  };
  rec(rec, 0, 0);
}

} // namespace

void Psg::build_index() {
  // universe_ must already be sorted canonically; ids are positions
}

std::optional<ElemId> Psg::find(const Element& e) const {
  auto it = std::lower_bound(universe_.begin(), universe_.end(), e);
  if (it != universe_.end() && *it == e)
    return static_cast<ElemId>(it - universe_.begin());
  return std::nullopt;
}

ElemId Psg::id_of(const Element& e) const {
  auto id = find(e);
  if (!id) raise(Err::ElementNotInUniverse, e.str() + " not in " + signature_);
  return *id;
}

PsgPtr Psg::explicit_table(const std::vector<std::vector<int>>& rows,
                           PsgOptions opt) {
  auto s = std::shared_ptr<Psg>(new Psg());
  s->family_ = Family::ExplicitTable;
  s->cap_ = opt.universe_cap;
  int n = static_cast<int>(rows.size());
  if (n == 0) raise(Err::BadTable, "empty table");
  check_cap(static_cast<size_t>(n), s->cap_, "table");
  s->tbl_n_ = n;
  s->table_.assign(static_cast<size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      raise(Err::BadTable, "row " + std::to_string(i) + " has wrong length");
    for (int j = 0; j < n; ++j) {
      int v = rows[i][j];
      if (v < -1 || v >= n)
        raise(Err::BadTable, "entry out of range at (" + std::to_string(i) +
                                 "," + std::to_string(j) + ")");
      s->table_[static_cast<size_t>(i) * n + j] = v;
    }
  }
  // partial associativity: (xy)z and x(yz) defined together and equal
  auto at = [&](int i, int j) { return s->table_[static_cast<size_t>(i) * n + j]; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int xy = at(x, y);
      for (int z = 0; z < n; ++z) {
        int yz = at(y, z);
        int lhs = xy >= 0 ? at(xy, z) : -1;
        int rhs = yz >= 0 ? at(x, yz) : -1;
        if (lhs != rhs)
          raise(Err::NotAssociative,
                "triple (" + std::to_string(x) + "," + std::to_string(y) + "," +
                    std::to_string(z) + ")");
      }
    }
  s->tbl_comm_ = true;
  for (int i = 0; i < n && s->tbl_comm_; ++i)
    for (int j = i + 1; j < n; ++j)
      if (at(i, j) != at(j, i)) { s->tbl_comm_ = false; break; }
  for (int e = 0; e < n; ++e) {
    bool ident = true;
    for (int x = 0; x < n && ident; ++x)
      if (at(e, x) != x || at(x, e) != x) ident = false;
    if (ident) { s->tbl_identity_ = static_cast<ElemId>(e); break; }
  }
  s->universe_.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) s->universe_.push_back(Element::atom(i));
  s->signature_ = "table(n=" + std::to_string(n) + ")";
  return s;
}

PsgPtr Psg::cyclic_group(int n, PsgOptions opt) {
  if (n <= 0) raise(Err::BadArgument, "cyclic: n must be positive");
  std::vector<std::vector<int>> rows(static_cast<size_t>(n),
                                     std::vector<int>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = (i + j) % n;
  auto s = std::const_pointer_cast<Psg>(explicit_table(rows, opt));
  s->signature_ = "cyclic(n=" + std::to_string(n) + ")";
  return s;
}

PsgPtr Psg::finset_disjoint(int n, PsgOptions opt) {
  if (n <= 0 || n > 30) raise(Err::BadArgument, "finset-disjoint: need 1 <= N <= 30");
  auto s = std::shared_ptr<Psg>(new Psg());
  s->family_ = Family::FinSetDisjointUnion;
  s->cap_ = opt.universe_cap;
  size_t count = (1ull << n) - 1;
  check_cap(count, s->cap_, "finset-disjoint");
  s->ground_n_ = n;
  std::vector<uint32_t> masks;
  masks.reserve(count);
  enumerate_subsets_lex(n, masks);
  s->id2mask_ = masks;
  s->mask2id_.assign(1ull << n, kNoId);
  s->universe_.reserve(count);
  for (size_t i = 0; i < masks.size(); ++i) {
    s->mask2id_[masks[i]] = static_cast<ElemId>(i);
    SmallSet v;
    for (int b = 0; b < n; ++b)
      if (masks[i] & (1u << b)) v.push_back(b + 1);
    s->universe_.push_back(Element(std::move(v)));
  }
  s->signature_ = "finset-disjoint(N=" + std::to_string(n) + ")";
  return s;
}

PsgPtr Psg::finset_ordered(std::vector<Rat> ground, PsgOptions opt) {
  std::sort(ground.begin(), ground.end());
  ground.erase(std::unique(ground.begin(), ground.end()), ground.end());
  int n = static_cast<int>(ground.size());
  if (n <= 0 || n > 30) raise(Err::BadArgument, "finset-ordered: need 1 <= |D| <= 30");
  auto s = std::shared_ptr<Psg>(new Psg());
  s->family_ = Family::FinSetOrderedUnion;
  s->cap_ = opt.universe_cap;
  size_t count = (1ull << n) - 1;
  check_cap(count, s->cap_, "finset-ordered");
  s->ground_n_ = n;
  s->rats_ = ground;
  std::vector<uint32_t> masks;
  masks.reserve(count);
  enumerate_subsets_lex(n, masks);
  s->id2mask_ = masks;
  s->mask2id_.assign(1ull << n, kNoId);
  s->id2minidx_.resize(count);
  s->id2maxidx_.resize(count);
  s->universe_.reserve(count);
  for (size_t i = 0; i < masks.size(); ++i) {
    s->mask2id_[masks[i]] = static_cast<ElemId>(i);
    RatSet v;
    for (int b = 0; b < n; ++b)
      if (masks[i] & (1u << b)) v.push_back(ground[static_cast<size_t>(b)]);
    s->id2minidx_[i] = static_cast<int16_t>(__builtin_ctz(masks[i]));
    s->id2maxidx_[i] = static_cast<int16_t>(31 - __builtin_clz(masks[i]));
    s->universe_.push_back(Element(std::move(v)));
  }
  std::string d = "[";
  for (int b = 0; b < n; ++b) {
    if (b) d += ",";
    d += ground[static_cast<size_t>(b)].str();
  }
  d += "]";
  s->signature_ = "finset-ordered(D=" + d + ")";
  return s;
}

PsgPtr Psg::located_words(const std::string& alphabet, int n, PsgOptions opt) {
  int k = static_cast<int>(alphabet.size());
  if (k <= 0) raise(Err::BadArgument, "located-words: empty alphabet");
  for (size_t i = 0; i + 1 < alphabet.size(); ++i)
    for (size_t j = i + 1; j < alphabet.size(); ++j)
      if (alphabet[i] == alphabet[j])
        raise(Err::BadArgument, "located-words: duplicate symbol");
  if (n <= 0 || n > 30) raise(Err::BadArgument, "located-words: need 1 <= N <= 30");
  double approx = std::pow(static_cast<double>(k + 1), n);
  if (approx > 1e18) raise(Err::UniverseCapExceeded, "located-words: code space too large");
  uint64_t space = 1;
  for (int i = 0; i < n; ++i) space *= static_cast<uint64_t>(k + 1);
  auto s = std::shared_ptr<Psg>(new Psg());
  s->family_ = Family::LocatedWords;
  s->cap_ = opt.universe_cap;
  check_cap(space - 1, s->cap_, "located-words");
  s->alphabet_ = alphabet;
  s->word_n_ = n;
  // digit at position p (0-based): 0 = absent, 1+idx = symbol idx
  std::vector<std::pair<Element, uint64_t>> elems;
  elems.reserve(space - 1);
  for (uint64_t code = 1; code < space; ++code) {
    Word w;
    uint64_t c = code;
    for (int p = 0; p < n; ++p) {
      int digit = static_cast<int>(c % static_cast<uint64_t>(k + 1));
      c /= static_cast<uint64_t>(k + 1);
      if (digit > 0) w.emplace_back(p + 1, alphabet[static_cast<size_t>(digit - 1)]);
    }
    elems.emplace_back(Element(std::move(w)), code);
  }
  std::sort(elems.begin(), elems.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  s->universe_.reserve(elems.size());
  s->id2code_.resize(elems.size());
  s->id2minpos_.resize(elems.size());
  s->id2maxpos_.resize(elems.size());
  s->code2id_.assign(space, kNoId);
  for (size_t i = 0; i < elems.size(); ++i) {
    const Word& w = std::get<Word>(elems[i].first.payload);
    s->id2minpos_[i] = static_cast<int16_t>(w.front().first);
    s->id2maxpos_[i] = static_cast<int16_t>(w.back().first);
    s->id2code_[i] = elems[i].second;
    s->code2id_[elems[i].second] = static_cast<ElemId>(i);
    s->universe_.push_back(std::move(elems[i].first));
  }
  s->signature_ = "located-words(alphabet=" + alphabet + ",N=" + std::to_string(n) + ")";
  return s;
}

PsgPtr Psg::product(PsgPtr left, PsgPtr right, PsgOptions opt) {
  if (!left || !right) raise(Err::BadArgument, "product: null factor");
  auto s = std::shared_ptr<Psg>(new Psg());
  s->family_ = Family::Product;
  s->cap_ = opt.universe_cap;
  size_t count = left->size() * right->size();
  check_cap(count, s->cap_, "product");
  s->left_ = left;
  s->right_ = right;
  s->universe_.reserve(count);
  for (size_t l = 0; l < left->size(); ++l)
    for (size_t r = 0; r < right->size(); ++r)
      s->universe_.push_back(
          Element::pair(left->element(static_cast<ElemId>(l)),
                        right->element(static_cast<ElemId>(r))));
  s->signature_ = "product(" + left->signature() + "," + right->signature() + ")";
  return s;
}

PsgPtr Psg::adjoin_identity(PsgPtr base) {
  if (!base) raise(Err::BadArgument, "adjoin-identity: null base");
  if (base->family_ == Family::IdentityAdjoined)
    raise(Err::AlreadyHasIdentity, base->signature());
  auto s = std::shared_ptr<Psg>(new Psg());
  s->family_ = Family::IdentityAdjoined;
  s->cap_ = base->cap_;
  check_cap(base->size() + 1, s->cap_, "adjoin-identity");
  s->base_ = base;
  s->universe_ = base->universe_;
  s->universe_.push_back(Element::identity());
  s->signature_ = "adjoin-identity(" + base->signature() + ")";
  return s;
}

std::optional<ElemId> Psg::apply(ElemId a, ElemId b) const {
  if (a >= size() || b >= size())
    raise(Err::ElementNotInUniverse, "apply: id out of range");
  switch (family_) {
    case Family::ExplicitTable: {
      int32_t v = table_[static_cast<size_t>(a) * tbl_n_ + b];
      if (v < 0) return std::nullopt;
      return static_cast<ElemId>(v);
    }
    case Family::FinSetDisjointUnion: {
      uint32_t ma = id2mask_[a], mb = id2mask_[b];
      if (ma & mb) return std::nullopt;
      return mask2id_[ma | mb];
    }
    case Family::FinSetOrderedUnion: {
      if (id2maxidx_[a] >= id2minidx_[b]) return std::nullopt;
      return mask2id_[id2mask_[a] | id2mask_[b]];
    }
    case Family::LocatedWords: {
      if (id2maxpos_[a] >= id2minpos_[b]) return std::nullopt;
      return code2id_[id2code_[a] + id2code_[b]];
    }
    case Family::Product: {
      auto [al, ar] = split_id(a);
      auto [bl, br] = split_id(b);
      auto l = left_->apply(al, bl);
      if (!l) return std::nullopt;
      auto r = right_->apply(ar, br);
      if (!r) return std::nullopt;
      return pair_id(*l, *r);
    }
    case Family::IdentityAdjoined: {
      ElemId e = static_cast<ElemId>(size() - 1);
      if (a == e) return b;
      if (b == e) return a;
      return base_->apply(a, b);
    }
  }
  return std::nullopt;
}

std::optional<Element> Psg::apply(const Element& a, const Element& b) const {
  auto r = apply(id_of(a), id_of(b));
  if (!r) return std::nullopt;
  return element(*r);
}

ElemSet Psg::phi(ElemId a) const {
  ElemSet out(size());
  for (ElemId b = 0; b < size(); ++b)
    if (apply(a, b)) out.set(b);
  return out;
}

bool Psg::phi_nonempty(ElemId a) const {
  for (ElemId b = 0; b < size(); ++b)
    if (apply(a, b)) return true;
  return false;
}

ElemSet Psg::sigma(const std::vector<ElemId>& family) const {
  if (family.empty()) raise(Err::EmptyFamily, "sigma over empty family");
  ElemSet out = phi(family[0]);
  for (size_t i = 1; i < family.size(); ++i) out &= phi(family[i]);
  return out;
}

std::optional<ElemId> Psg::identity_elem() const {
  switch (family_) {
    case Family::ExplicitTable: return tbl_identity_;
    case Family::Product: {
      auto l = left_->identity_elem();
      auto r = right_->identity_elem();
      if (l && r) return pair_id(*l, *r);
      return std::nullopt;
    }
    case Family::IdentityAdjoined: return static_cast<ElemId>(size() - 1);
    default: return std::nullopt;
  }
}

bool Psg::has_defined_pair() const {
  switch (family_) {
    case Family::ExplicitTable: {
      for (int32_t v : table_)
        if (v >= 0) return true;
      return false;
    }
    case Family::FinSetDisjointUnion: return ground_n_ >= 2;
    case Family::FinSetOrderedUnion: return ground_n_ >= 2;
    case Family::LocatedWords: return word_n_ >= 2;
    case Family::Product: return left_->has_defined_pair() && right_->has_defined_pair();
    case Family::IdentityAdjoined: return true;
  }
  return false;
}

bool Psg::is_commutative() const {
  switch (family_) {
    case Family::ExplicitTable: return tbl_comm_;
    case Family::FinSetDisjointUnion: return true;
    // in the ordered families a defined product never has a defined swap,
    // so they are commutative exactly when nothing at all is defined
    case Family::FinSetOrderedUnion: return ground_n_ < 2;
    case Family::LocatedWords: return word_n_ < 2;
    case Family::Product:
      if (!has_defined_pair()) return true;
      return left_->is_commutative() && right_->is_commutative();
    case Family::IdentityAdjoined: return base_->is_commutative();
  }
  return false;
}

const PsgPtr& Psg::left_factor() const {
  if (family_ != Family::Product) raise(Err::BadArgument, "not a product instance");
  return left_;
}
const PsgPtr& Psg::right_factor() const {
  if (family_ != Family::Product) raise(Err::BadArgument, "not a product instance");
  return right_;
}
ElemId Psg::pair_id(ElemId l, ElemId r) const {
  if (family_ != Family::Product) raise(Err::BadArgument, "not a product instance");
  return static_cast<ElemId>(static_cast<size_t>(l) * right_->size() + r);
}
std::pair<ElemId, ElemId> Psg::split_id(ElemId p) const {
  if (family_ != Family::Product) raise(Err::BadArgument, "not a product instance");
  size_t rs = right_->size();
  return {static_cast<ElemId>(p / rs), static_cast<ElemId>(p % rs)};
}
const PsgPtr& Psg::base() const {
  if (family_ != Family::IdentityAdjoined)
    raise(Err::BadArgument, "not an identity-adjoined instance");
  return base_;
}

Rat Psg::ordered_min_value(ElemId a) const {
  if (family_ != Family::FinSetOrderedUnion)
    raise(Err::BadArgument, "not an ordered-union instance");
  return rats_[static_cast<size_t>(id2minidx_[a])];
}
Rat Psg::ordered_max_value(ElemId a) const {
  if (family_ != Family::FinSetOrderedUnion)
    raise(Err::BadArgument, "not an ordered-union instance");
  return rats_[static_cast<size_t>(id2maxidx_[a])];
}
const std::vector<Rat>& Psg::ordered_ground() const {
  if (family_ != Family::FinSetOrderedUnion)
    raise(Err::BadArgument, "not an ordered-union instance");
  return rats_;
}

AdequacyReport adequacy_defect(const Psg& s, int b_max) {
  if (b_max < 1) raise(Err::BadArgument, "adequacy_defect: b_max must be >= 1");
  AdequacyReport rep;
  rep.b_max = b_max;
  size_t n = s.size();

  // size-1 pass without caching phi sets: early-exit emptiness scan
  for (ElemId a = 0; a < n; ++a) {
    ++rep.families_checked;
    if (!s.phi_nonempty(a)) {
      rep.adequate_within_bound = false;
      rep.defect_size = 1;
      rep.witness = {a};
      return rep;
    }
  }

  std::vector<std::optional<ElemSet>> phis(n);
  auto phi_of = [&](ElemId a) -> const ElemSet& {
    if (!phis[a]) phis[a] = s.phi(a);
    return *phis[a];
  };

  std::vector<ElemId> prefix;
  for (int b = 2; b <= b_max; ++b) {
    bool found = false;
    auto rec = [&](auto&& self, ElemId start, const ElemSet& inter) -> void {
      if (found) return;
      for (ElemId a = start; a < n && !found; ++a) {
        ElemSet next = inter;
        next &= phi_of(a);
        if (next == inter) continue; // a adds no constraint here
        ++rep.families_checked;
        prefix.push_back(a);
        if (static_cast<int>(prefix.size()) == b) {
          if (next.empty()) {
            rep.adequate_within_bound = false;
            rep.defect_size = b;
            rep.witness = prefix;
            found = true;
          }
        } else {
          self(self, a + 1, next);
        }
        if (!found) prefix.pop_back();
      }
    };
    for (ElemId a = 0; a + 1 < n && !found; ++a) {
      prefix.assign(1, a);
      rec(rec, a + 1, phi_of(a));
      prefix.clear();
      if (found) break;
    }
    if (found) return rep;
  }
  return rep;
}

} // namespace psgcr
