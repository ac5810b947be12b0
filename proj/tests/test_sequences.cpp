#include <vector>

#include "doctest.h"
#include "psgcr/seqprefix.hpp"
#include "test_util.hpp"

using namespace psgcr;
using testutil::ids_of;
using testutil::rs;
using testutil::set_of;
using testutil::ss;
using testutil::thrown;

namespace {

SeqPrefix make(PsgPtr s, const std::vector<Element>& values) {
  return SeqPrefix(s, ids_of(*s, values));
}

// every increasing-index product evaluated directly through apply
std::optional<ElemId> brute_fp(const Psg& s, const std::vector<ElemId>& vals,
                               IndexSet H) {
  std::optional<ElemId> acc;
  for (size_t i = 0; i < vals.size(); ++i) {
    if (!(H & (1u << i))) continue;
    if (!acc)
      acc = vals[i];
    else
      acc = s.apply(*acc, vals[i]);
    if (!acc) return std::nullopt;
  }
  return acc;
}

} // namespace

TEST_CASE("fp evaluates increasing-index products") {
  auto so = Psg::finset_ordered({Rat(1), Rat(2), Rat(3), Rat(4), Rat(5), Rat(6)});
  SeqPrefix f = make(so, {rs({Rat(1)}), rs({Rat(2)}), rs({Rat(3)})});
  CHECK(so->element(f.fp(0b101)) == rs({Rat(1), Rat(3)}));

  auto sd = Psg::finset_disjoint(6);
  SeqPrefix g = make(sd, {ss({1, 2}), ss({3, 4}), ss({5, 6})});
  CHECK(sd->element(g.fp(0b111)) == ss({1, 2, 3, 4, 5, 6}));

  auto z3 = Psg::cyclic_group(3);
  SeqPrefix h(z3, {1, 1, 1});
  CHECK(z3->element(h.fp(0b111)) == Element::atom(0));

  CHECK(thrown([&] { f.fp(0); }) == Err::EmptyIndexSet);
  CHECK(thrown([&] { f.fp(0b1000); }) == Err::IndexOutOfRange);
  CHECK(f.value(2) == so->id_of(rs({Rat(2)})));
  CHECK(thrown([&] { f.value(4); }) == Err::IndexOutOfRange);
  CHECK(f.all_fp_values().size() == 7);
  CHECK(h.all_fp_values().size() == 3);
}

TEST_CASE("validate_prefix finds the least failing index set") {
  auto sd = Psg::finset_disjoint(4);
  auto bad = validate_prefix(*sd, ids_of(*sd, {ss({1}), ss({2}), ss({1, 3})}));
  REQUIRE(bad.has_value());
  CHECK(bad->H == 0b101);

  auto so = Psg::finset_ordered({Rat(1), Rat(2), Rat(3), Rat(4)});
  bad = validate_prefix(*so, ids_of(*so, {rs({Rat(2)}), rs({Rat(1)})}));
  REQUIRE(bad.has_value());
  CHECK(bad->H == 0b11);

  CHECK(!validate_prefix(*sd, ids_of(*sd, {ss({1}), ss({2}), ss({3})})));
  CHECK(thrown([&] {
          validate_prefix(*sd, ids_of(*sd, {ss({1}), ss({2}), ss({3})}), 2);
        }) == Err::LengthCapExceeded);
  CHECK(thrown([&] { SeqPrefix(sd, {}); }) == Err::BadArgument);

  CHECK(thrown([&] { make(sd, {ss({1}), ss({1, 2})}); }) == Err::PrefixInvalid);
}

TEST_CASE("validate_prefix agrees with brute-force evaluation") {
  std::vector<PsgPtr> instances = {
      Psg::finset_disjoint(3),
      Psg::finset_ordered({Rat(0), Rat(1, 2), Rat(1)}),
      Psg::cyclic_group(3),
  };
  for (const auto& s : instances) {
    // all value lists of length 3 over the universe
    for (ElemId a = 0; a < s->size(); ++a)
      for (ElemId b = 0; b < s->size(); ++b)
        for (ElemId c = 0; c < s->size(); ++c) {
          std::vector<ElemId> vals = {a, b, c};
          bool brute_ok = true;
          for (IndexSet H = 1; H < 8 && brute_ok; ++H)
            brute_ok = brute_fp(*s, vals, H).has_value();
          CHECK(!validate_prefix(*s, vals).has_value() == brute_ok);
        }
  }
}

TEST_CASE("find_fp_sequence") {
  auto so = Psg::finset_ordered({Rat(1), Rat(2), Rat(3), Rat(4), Rat(5), Rat(6)});
  auto f = find_fp_sequence(so, so->universe_set(), 3);
  REQUIRE(f.has_value());
  CHECK(f->values() == ids_of(*so, {rs({Rat(1)}), rs({Rat(2)}), rs({Rat(3)})}));

  auto z2 = Psg::cyclic_group(2);
  auto g = find_fp_sequence(z2, set_of(*z2, {Element::atom(0)}), 4);
  REQUIRE(g.has_value());
  CHECK(g->values() == std::vector<ElemId>{0, 0, 0, 0});

  auto sd = Psg::finset_disjoint(2);
  CHECK(!find_fp_sequence(sd, sd->universe_set(), 3).has_value());
}

TEST_CASE("extend_prefix draws candidates from sigma of the existing values") {
  auto so = Psg::finset_ordered({Rat(1), Rat(2), Rat(3), Rat(4), Rat(5), Rat(6),
                                 Rat(7), Rat(8)});
  SeqPrefix f = make(so, {rs({Rat(1)}), rs({Rat(2)})});
  auto ext = extend_prefix(f, 1, so->universe_set());
  REQUIRE(ext.has_value());
  CHECK(ext->values() ==
        ids_of(*so, {rs({Rat(1)}), rs({Rat(2)}), rs({Rat(3)})}));

  // canonical-first in Z_3 appends the atom 0, which is idempotent
  auto z3 = Psg::cyclic_group(3);
  SeqPrefix g(z3, {1});
  ext = extend_prefix(g, 2, z3->universe_set());
  REQUIRE(ext.has_value());
  CHECK(ext->values() == std::vector<ElemId>{1, 0, 0});

  auto sd = Psg::finset_disjoint(2);
  SeqPrefix h = make(sd, {ss({1})});
  CHECK(!extend_prefix(h, 2, sd->universe_set()).has_value());

  // constraint set can rule every candidate out
  SeqPrefix g1(z3, {1});
  CHECK(!extend_prefix(g1, 1, set_of(*z3, {Element::atom(1)})).has_value());
}

TEST_CASE("pairing and projection round trip") {
  auto sd = Psg::finset_disjoint(4);
  auto so = Psg::finset_ordered({Rat(1), Rat(2), Rat(3), Rat(4)});
  auto p = Psg::product(sd, so);
  SeqPrefix f = make(sd, {ss({1}), ss({2})});
  SeqPrefix g = make(so, {rs({Rat(1)}), rs({Rat(2)})});

  SeqPrefix h = pair_prefixes(p, f, g);
  CHECK(h.length() == 2);
  CHECK(p->element(h.value(1)) == Element::pair(ss({1}), rs({Rat(1)})));
  CHECK(!validate_prefix(*p, h.values()).has_value());

  auto [pf, pg] = project_prefix(h);
  CHECK(pf.same_values(f));
  CHECK(pg.same_values(g));

  SeqPrefix f1 = make(sd, {ss({1})});
  CHECK(thrown([&] { pair_prefixes(p, f1, g); }) == Err::LengthMismatch);
  CHECK(thrown([&] { pair_prefixes(sd, f, g); }) == Err::BadArgument);
  CHECK(thrown([&] { project_prefix(f); }) == Err::BadArgument);
}

TEST_CASE("fp splits across order-separated index sets") {
  auto lw = Psg::located_words("a", 10);
  std::vector<Element> vals;
  for (int i = 1; i <= 10; ++i) vals.push_back(Element::word({{i, 'a'}}));
  SeqPrefix f = make(lw, vals);

  auto z6 = Psg::cyclic_group(6);
  SeqPrefix g(z6, {3, 1, 4, 1, 5, 2, 0, 3, 3, 1});

  for (const SeqPrefix& s : {f, g}) {
    const Psg& inst = *s.instance();
    for (IndexSet H = 1; H < (1u << 10); ++H) {
      // G must start strictly above the top index of H
      int top = 31 - __builtin_clz(H);
      for (IndexSet G = 1u << (top + 1); G < (1u << 10); ++G) {
        if (G & ((1u << (top + 1)) - 1)) continue;
        auto split = inst.apply(s.fp(H), s.fp(G));
        REQUIRE(split.has_value());
        REQUIRE(*split == s.fp(H | G));
      }
    }
  }
}

TEST_CASE("pool closure") {
  auto sd = Psg::finset_disjoint(6);
  std::vector<SeqPrefix> pool = {make(sd, {ss({1}), ss({2}), ss({3})}),
                                 make(sd, {ss({4}), ss({5})})};
  CHECK(pool_r_closed(pool, 2));
  CHECK(!pool_r_closed(pool, 3));
}
