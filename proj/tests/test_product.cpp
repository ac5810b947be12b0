#include <algorithm>
#include <variant>
#include <vector>

#include "doctest.h"
#include "psgcr/product_thm.hpp"
#include "test_util.hpp"

using namespace psgcr;
using testutil::ids_of;
using testutil::ss;
using testutil::thrown;

namespace {

ElemId id_of(const Psg& s, const Element& v) { return s.id_of(v); }

ElemSet containing(const Psg& s, int v) {
  ElemSet out(s.size());
  for (ElemId x = 0; x < s.size(); ++x) {
    const auto* set = std::get_if<SmallSet>(&s.element(x).payload);
    if (set && std::find(set->begin(), set->end(), v) != set->end()) out.set(x);
  }
  return out;
}

Witness wit(int m, std::vector<ElemId> a, std::vector<int> t) {
  Witness w;
  w.m = m;
  w.a = std::move(a);
  w.t = std::move(t);
  return w;
}

} // namespace

TEST_CASE("theta_contains pads with the identity first") {
  auto se = Psg::adjoin_identity(Psg::finset_disjoint(10));
  ElemId e = *se->identity_elem();
  std::vector<ElemId> L = ids_of(*se, {ss({1})});
  SeqPrefix f(se, ids_of(*se, {ss({2}), ss({3})}));

  ThetaQuery q{se, se->universe_set(), L, {f}, {1}};
  auto a = theta_contains(q);
  REQUIRE(a.has_value());
  CHECK(*a == std::vector<ElemId>{e, e});
  CHECK(!witness_check(*se, q.A, L, q.F, wit(1, *a, {1})));

  // a two position index set exercises the inner DFS levels
  q.M = {1, 2};
  a = theta_contains(q);
  REQUIRE(a.has_value());
  CHECK(*a == std::vector<ElemId>{e, e, e});

  // when the identity chain misses A the scan falls through to the
  // canonically least base tuple
  q.M = {1};
  q.A = containing(*se, 4);
  a = theta_contains(q);
  REQUIRE(a.has_value());
  CHECK(*a == std::vector<ElemId>{e, id_of(*se, ss({3, 4}))});

  // capping the candidate list to the identity alone exhausts the search
  CHECK(!theta_contains(q, 1).has_value());

  // an empty target is exhausted at any cap
  q.A = ElemSet(se->size());
  CHECK(!theta_contains(q).has_value());
}

TEST_CASE("theta_contains validates its query") {
  auto sd = Psg::finset_disjoint(4);
  auto se = Psg::adjoin_identity(sd);
  std::vector<ElemId> L = ids_of(*se, {ss({1})});
  SeqPrefix f(se, ids_of(*se, {ss({2})}));

  CHECK(thrown([&] {
          theta_contains({sd, sd->universe_set(), ids_of(*sd, {ss({1})}),
                          {SeqPrefix(sd, ids_of(*sd, {ss({2})}))}, {1}});
        }) == Err::NoIdentity);
  CHECK(thrown([&] { theta_contains({se, se->universe_set(), L, {}, {1}}); }) ==
        Err::EmptyFamily);
  CHECK(thrown([&] { theta_contains({se, se->universe_set(), {}, {f}, {1}}); }) ==
        Err::EmptyFamily);
  CHECK(thrown([&] { theta_contains({se, se->universe_set(), L, {f}, {}}); }) ==
        Err::EmptyIndexSet);
  CHECK(thrown([&] { theta_contains({se, se->universe_set(), L, {f}, {2, 1}}); }) ==
        Err::BadArgument);
  CHECK(thrown([&] { theta_contains({se, se->universe_set(), L, {f}, {1, 2}}); }) ==
        Err::PrefixTooShort);
}

TEST_CASE("theta_block_transform expands a block witness") {
  auto se = Psg::adjoin_identity(Psg::finset_disjoint(8));
  ElemId e = *se->identity_elem();
  ElemSet A = se->universe_set();
  std::vector<ElemId> L = ids_of(*se, {ss({6})});

  SUBCASE("singleton blocks reproduce the witness") {
    SeqPrefix f(se, ids_of(*se, {ss({1}), ss({2})}));
    BlockSeq H = make_block_seq({{1}, {2}});
    Witness w = wit(1, ids_of(*se, {ss({3}), ss({4})}), {1});
    ThetaTransform out = theta_block_transform(se, A, {f}, L, H, w);
    CHECK(out.c == w.a);
    CHECK(out.M == std::vector<int>{1});
  }

  SUBCASE("a wide block pads interior positions with the identity") {
    SeqPrefix f(se, ids_of(*se, {ss({1}), ss({2}), ss({3})}));
    BlockSeq H = make_block_seq({{1, 2}, {3}});
    // the compressed family is g = <{1,2},{3}>; (m,a,t) wins against it
    Witness w = wit(1, ids_of(*se, {ss({4}), ss({5})}), {1});
    ThetaTransform out = theta_block_transform(se, A, {f}, L, H, w);
    CHECK(out.M == std::vector<int>{1, 2});
    CHECK(out.c == std::vector<ElemId>{id_of(*se, ss({4})), e,
                                       id_of(*se, ss({5}))});

    Witness wc = wit(2, out.c, out.M);
    auto lhs = interleaved_product(*se, f, wc);
    SeqPrefix g(se, {f.fp(0b11), f.fp(0b100)});
    auto rhs = interleaved_product(*se, g, w);
    REQUIRE(lhs.has_value());
    CHECK(*lhs == *rhs);
    CHECK(*lhs == id_of(*se, ss({1, 2, 4, 5})));
  }

  SUBCASE("a witness that loses against the compressed family is rejected") {
    SeqPrefix f(se, ids_of(*se, {ss({1}), ss({2}), ss({3})}));
    BlockSeq H = make_block_seq({{1, 2}, {3}});
    Witness bad = wit(1, ids_of(*se, {ss({6}), ss({5})}), {1});
    CHECK(thrown([&] { theta_block_transform(se, A, {f}, L, H, bad); }) ==
          Err::WitnessInvalid);
  }

  SUBCASE("structural errors") {
    SeqPrefix f(se, ids_of(*se, {ss({1}), ss({2}), ss({3})}));
    Witness w = wit(1, ids_of(*se, {ss({4}), ss({5})}), {1});
    auto sd = Psg::finset_disjoint(8);
    SeqPrefix fd(sd, ids_of(*sd, {ss({1}), ss({2})}));
    CHECK(thrown([&] {
            theta_block_transform(sd, sd->universe_set(), {fd},
                                  ids_of(*sd, {ss({6})}),
                                  make_block_seq({{1}, {2}}), w);
          }) == Err::NoIdentity);
    CHECK(thrown([&] {
            theta_block_transform(se, A, {f}, L, make_block_seq({{1}, {2}}),
                                  wit(1, w.a, {3}));
          }) == Err::BadArgument);
    CHECK(thrown([&] {
            theta_block_transform(se, A, {f}, L, make_block_seq({{1}, {2, 4}}),
                                  w);
          }) == Err::PrefixTooShort);
  }
}

TEST_CASE("project_set and product_set round trip") {
  auto sd = Psg::finset_disjoint(5);
  auto p = Psg::product(sd, sd);
  ElemId a1 = id_of(*sd, ss({1}));
  ElemId a3 = id_of(*sd, ss({3}));
  ElemId b2 = id_of(*sd, ss({2}));

  std::vector<ElemId> L = {p->pair_id(a1, b2), p->pair_id(a3, b2)};
  CHECK(project_set(*p, L, 1) == std::vector<ElemId>{a1, a3});
  CHECK(project_set(*p, L, 2) == std::vector<ElemId>{b2});
  CHECK(thrown([&] { project_set(*p, L, 3); }) == Err::BadArgument);

  ElemSet A(sd->size());
  A.set(a1);
  ElemSet B(sd->size());
  B.set(b2);
  ElemSet cell = product_set(*p, A, B);
  CHECK(cell.count() == 1);
  CHECK(cell.test(p->pair_id(a1, b2)));
  CHECK(product_set(*p, sd->universe_set(), sd->universe_set()).count() ==
        p->size());
}

TEST_CASE("sigma of a product contains the product of component sigmas") {
  auto sd = Psg::finset_disjoint(3);
  auto p = Psg::product(sd, sd);
  for (ElemId l = 0; l < p->size(); ++l) {
    std::vector<ElemId> L = {l};
    ElemSet s_prod = p->sigma(L);
    ElemSet s1 = sd->sigma(project_set(*p, L, 1));
    ElemSet s2 = sd->sigma(project_set(*p, L, 2));
    for (ElemId x = 0; x < sd->size(); ++x)
      for (ElemId y = 0; y < sd->size(); ++y)
        CHECK(s_prod.test(p->pair_id(x, y)) == (s1.test(x) && s2.test(y)));
  }
  // a two member base family, same containment
  std::vector<ElemId> L = {p->pair_id(id_of(*sd, ss({1})), id_of(*sd, ss({2}))),
                           p->pair_id(id_of(*sd, ss({2})), id_of(*sd, ss({2})))};
  ElemSet s_prod = p->sigma(L);
  ElemSet s1 = sd->sigma(project_set(*p, L, 1));
  ElemSet s2 = sd->sigma(project_set(*p, L, 2));
  for (ElemId x = 0; x < sd->size(); ++x)
    for (ElemId y = 0; y < sd->size(); ++y)
      if (s1.test(x) && s2.test(y)) CHECK(s_prod.test(p->pair_id(x, y)));
}

TEST_CASE("a_times_a_transfer lifts a projected witness to the diagonal") {
  auto sd = Psg::finset_disjoint(5);
  auto p = Psg::product(sd, sd);
  SeqPrefix f(sd, ids_of(*sd, {ss({1}), ss({2})}));
  SeqPrefix h = pair_prefixes(p, f, f);
  ElemId l5 = id_of(*sd, ss({5}));
  std::vector<ElemId> L = {p->pair_id(l5, l5)};
  ElemSet A = sd->universe_set();

  Witness w2k = wit(1, ids_of(*sd, {ss({2}), ss({3})}), {1});
  Witness out = a_times_a_transfer(p, A, 1, L, {h}, w2k);
  CHECK(out.m == 1);
  CHECK(out.t == std::vector<int>{1});
  REQUIRE(out.a.size() == 2);
  for (size_t i = 0; i < out.a.size(); ++i) {
    auto [dl, dr] = p->split_id(out.a[i]);
    CHECK(dl == dr);
    CHECK(dl == w2k.a[i]);
  }
  ElemSet AxA = product_set(*p, A, A);
  CHECK(!witness_check(*p, AxA, L, {h}, out));

  // a witness that trips over the projected base family is refused
  Witness bad = wit(1, ids_of(*sd, {ss({5}), ss({3})}), {1});
  CHECK(thrown([&] { a_times_a_transfer(p, A, 1, L, {h}, bad); }) ==
        Err::ProjectionWitnessInvalid);

  // the diagonal needs both factors to be the same instance shape
  auto mixed = Psg::product(sd, Psg::finset_disjoint(4));
  CHECK(thrown([&] {
          a_times_a_transfer(mixed, A, 1, {mixed->pair_id(l5, 0)}, {h}, w2k);
        }) == Err::BadArgument);
}

TEST_CASE("product_cr_witness assembles a common witness") {
  auto le = Psg::adjoin_identity(Psg::finset_disjoint(6));
  auto p = Psg::product(le, le);
  ElemId e = *le->identity_elem();
  SeqPrefix f(le, ids_of(*le, {ss({1}), ss({2}), ss({3})}));
  SeqPrefix h = pair_prefixes(p, f, f);
  ElemId l1 = id_of(*le, ss({1}));
  std::vector<ElemId> L = {p->pair_id(l1, l1)};

  ProductCrBounds bounds;
  bounds.m_max = 3;
  bounds.r_max = 3;
  bounds.fu_r_max = 6;
  ProductCrResult res = product_cr_witness(p, le->universe_set(),
                                           le->universe_set(), 1, L, {h},
                                           bounds);
  CHECK(res.status == ProductCrStatus::Assembled);
  CHECK(res.u == 2);
  CHECK(res.v == 2);
  CHECK(res.q == 5);
  CHECK(res.R == std::vector<int>{2});
  REQUIRE(res.witness.has_value());
  ElemId pe = p->pair_id(e, e);
  CHECK(res.witness->m == 1);
  CHECK(res.witness->a == std::vector<ElemId>{pe, pe});
  CHECK(res.witness->t == std::vector<int>{2});

  ElemSet AxB = product_set(*p, le->universe_set(), le->universe_set());
  CHECK(!witness_check(*p, AxB, L, {h}, *res.witness));
}

TEST_CASE("product_cr_witness failure modes") {
  auto le = Psg::adjoin_identity(Psg::finset_disjoint(6));
  auto p = Psg::product(le, le);
  SeqPrefix fl(le, ids_of(*le, {ss({2}), ss({1}), ss({3})}));
  SeqPrefix fr(le, ids_of(*le, {ss({1}), ss({3}), ss({2})}));
  SeqPrefix h = pair_prefixes(p, fl, fr);
  ElemId l1 = id_of(*le, ss({1}));
  ElemId l12 = id_of(*le, ss({1, 2}));
  ElemId full = id_of(*le, ss({1, 2, 3, 4, 5, 6}));
  ElemSet A = le->universe_set();
  ProductCrBounds bounds;
  bounds.m_max = 3;
  bounds.r_max = 3;
  bounds.fu_r_max = 6;

  SUBCASE("componentwise radii exist but no index set serves both sides") {
    // left good index sets avoid position 2, right ones require it
    std::vector<ElemId> L = {p->pair_id(l1, l12)};
    ProductCrResult res = product_cr_witness(p, A, A, 1, L, {h}, bounds);
    CHECK(res.status == ProductCrStatus::NoCommonR);
    CHECK(res.u == 1);
    CHECK(res.v == 2);
    CHECK(res.q == 5);
    CHECK(!res.R.has_value());
    CHECK(!res.witness.has_value());
  }

  SUBCASE("left radius failure") {
    // sigma of the left projection is the bare identity, which no
    // interleaved chain of nonempty sets can hit
    std::vector<ElemId> L = {p->pair_id(full, l1)};
    ProductCrResult res = product_cr_witness(p, A, A, 1, L, {h}, bounds);
    CHECK(res.status == ProductCrStatus::LeftRadiusFailure);
    CHECK(!res.u.has_value());
    CHECK(!res.v.has_value());
    CHECK(!res.q.has_value());
  }

  SUBCASE("right radius failure reports the left radius") {
    std::vector<ElemId> L = {p->pair_id(l1, full)};
    ProductCrResult res = product_cr_witness(p, A, A, 1, L, {h}, bounds);
    CHECK(res.status == ProductCrStatus::RightRadiusFailure);
    CHECK(res.u == 1);
    CHECK(!res.v.has_value());
  }

  SUBCASE("argument validation") {
    std::vector<ElemId> L = {p->pair_id(l1, l1)};
    auto sd = Psg::finset_disjoint(4);
    auto bare = Psg::product(sd, sd);
    CHECK(thrown([&] {
            product_cr_witness(bare, sd->universe_set(), sd->universe_set(), 1,
                               {bare->pair_id(0, 0)},
                               {pair_prefixes(bare,
                                              SeqPrefix(sd, {id_of(*sd, ss({1}))}),
                                              SeqPrefix(sd, {id_of(*sd, ss({1}))}))},
                               bounds);
          }) == Err::NoIdentity);
    CHECK(thrown([&] { product_cr_witness(p, A, A, 1, L, {}, bounds); }) ==
          Err::EmptyFamily);
    CHECK(thrown([&] { product_cr_witness(p, A, A, 0, L, {h}, bounds); }) ==
          Err::BadArgument);
    CHECK(thrown([&] { product_cr_witness(p, A, A, 1, {}, {h}, bounds); }) ==
          Err::EmptyFamily);
  }
}
