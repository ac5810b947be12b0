#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "psgcr/largeness.hpp"
#include "test_util.hpp"

using namespace psgcr;
using testutil::ids_of;
using testutil::rs;
using testutil::set_of;
using testutil::ss;

namespace {

// disjoint-union membership test for "sets containing v"
ElemSet containing(const Psg& s, int v) {
  ElemSet out(s.size());
  for (ElemId i = 0; i < s.size(); ++i) {
    const auto& set = std::get<SmallSet>(s.element(i).payload);
    if (std::find(set.begin(), set.end(), v) != set.end()) out.set(i);
  }
  return out;
}

ElemSet atom_set(const Psg& s, const std::vector<int>& atoms) {
  ElemSet out(s.size());
  for (int a : atoms) out.set(s.id_of(Element::atom(a)));
  return out;
}

bool has_bound(const LargenessReport& rep, const std::string& name, long long v) {
  for (const auto& [k, val] : rep.bounds)
    if (k == name) return val == v;
  return false;
}

} // namespace

TEST_CASE("thick checker") {
  auto z3 = Psg::cyclic_group(3);
  LargenessReport rep = is_thick(z3, z3->universe_set(), 3);
  CHECK(rep.verdict);
  CHECK(!rep.vacuous);
  CHECK(has_bound(rep, "b", 3));
  CHECK(rep.notion == "thick");

  rep = is_thick(z3, ElemSet(z3->size()), 1);
  CHECK(!rep.verdict);
  CHECK(!rep.vacuous);

  auto d6 = Psg::finset_disjoint(6);
  // sets containing 6 absorb every family: x can always supply the 6
  rep = is_thick(d6, containing(*d6, 6), 1);
  CHECK(rep.verdict);
  for (const auto& [fam, x] : rep.x_map) {
    ElemSet sig = d6->sigma(fam);
    CHECK(sig.test(x));
    for (ElemId f : fam) CHECK(containing(*d6, 6).test(*d6->apply(f, x)));
  }

  // sets avoiding 6 are blocked by {1,2,3,4,5}, whose only extension is 6
  rep = is_thick(d6, containing(*d6, 6).complement(), 1);
  CHECK(!rep.verdict);
  REQUIRE(rep.witness_family.has_value());
  CHECK(*rep.witness_family == ids_of(*d6, {ss({1, 2, 3, 4, 5})}));

  // nothing composes at all: the universal quantifier is empty
  auto dead = Psg::explicit_table({{-1}});
  rep = is_thick(dead, ElemSet(dead->size()), 1);
  CHECK(rep.verdict);
  CHECK(rep.vacuous);
}

TEST_CASE("syndetic checker") {
  auto z3 = Psg::cyclic_group(3);
  LargenessReport rep = is_syndetic(z3, atom_set(*z3, {0}), 3);
  CHECK(rep.verdict);
  REQUIRE(rep.witness_family.has_value());
  CHECK(*rep.witness_family == std::vector<ElemId>{0, 1, 2});

  // three singleton translates are needed to cover Z_3 by {0}
  CHECK(!is_syndetic(z3, atom_set(*z3, {0}), 2).verdict);

  rep = is_syndetic(z3, atom_set(*z3, {0, 1}), 2);
  CHECK(rep.verdict);
  CHECK(*rep.witness_family == std::vector<ElemId>{0, 1});

  auto d4 = Psg::finset_disjoint(4);
  // the full ground set lies in no phi, so no translate family covers it
  CHECK(!is_syndetic(d4, d4->universe_set(), 4).verdict);
  CHECK(!is_syndetic(z3, ElemSet(z3->size()), 1).verdict);
}

TEST_CASE("piecewise syndetic checker") {
  auto z3 = Psg::cyclic_group(3);
  CHECK(is_piecewise_syndetic(z3, atom_set(*z3, {0}), 3, 3).verdict);
  CHECK(!is_piecewise_syndetic(z3, ElemSet(z3->size()), 3, 3).verdict);

  LargenessReport rep = is_piecewise_syndetic(z3, atom_set(*z3, {0, 1}), 2, 2);
  CHECK(rep.verdict);
  CHECK(has_bound(rep, "g_max", 2));
  CHECK(has_bound(rep, "b", 2));
  for (const auto& [fam, x] : rep.x_map) CHECK(z3->sigma(fam).test(x));
}

TEST_CASE("syndetic implies piecewise syndetic at matching bounds") {
  std::vector<PsgPtr> instances = {Psg::cyclic_group(3), Psg::cyclic_group(4),
                                   Psg::finset_disjoint(3)};
  for (const auto& s : instances) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
      ElemSet a(s->size());
      for (ElemId i = 0; i < s->size(); ++i)
        if (rng() & 1) a.set(i);
      if (is_syndetic(s, a, 2).verdict)
        CHECK(is_piecewise_syndetic(s, a, 2, 2).verdict);
    }
  }
}

TEST_CASE("c-piecewise syndetic checker") {
  auto z3 = Psg::cyclic_group(3);
  LargenessReport rep = is_c_piecewise_syndetic(z3, atom_set(*z3, {0}), 3);
  CHECK(rep.verdict);
  CHECK(has_bound(rep, "h_max", 3));
  CHECK(has_bound(rep, "t_bound", 3));

  rep = is_c_piecewise_syndetic(z3, z3->universe_set(), 1);
  CHECK(rep.verdict);
  REQUIRE(rep.witness_family.has_value());
  CHECK(rep.witness_family->size() == 1);

  CHECK(!is_c_piecewise_syndetic(z3, ElemSet(z3->size()), 1).verdict);
}

TEST_CASE("find_ip_r") {
  auto so = Psg::finset_ordered({Rat(1), Rat(2), Rat(3), Rat(4), Rat(5), Rat(6)});
  auto f = find_ip_r(so, so->universe_set(), 3);
  REQUIRE(f.has_value());
  CHECK(f->values() == ids_of(*so, {rs({Rat(1)}), rs({Rat(2)}), rs({Rat(3)})}));

  auto z2 = Psg::cyclic_group(2);
  auto g = find_ip_r(z2, atom_set(*z2, {0}), 5);
  REQUIRE(g.has_value());
  CHECK(g->values() == std::vector<ElemId>(5, 0));

  auto small = Psg::finset_ordered({Rat(1), Rat(2)});
  CHECK(!find_ip_r(small, small->universe_set(), 3).has_value());
}

TEST_CASE("ip_r_star checker") {
  auto z2 = Psg::cyclic_group(2);
  CHECK(is_ip_r_star(z2, z2->universe_set(), 3).verdict);

  LargenessReport rep = is_ip_r_star(z2, atom_set(*z2, {1}), 2);
  CHECK(!rep.verdict);
  REQUIRE(rep.avoiding_prefix.has_value());
  CHECK(rep.avoiding_prefix->values() == std::vector<ElemId>{0, 0});

  auto so = Psg::finset_ordered({Rat(1), Rat(2), Rat(3), Rat(4), Rat(5), Rat(6)});
  ElemSet has_one(so->size());
  for (ElemId i = 0; i < so->size(); ++i)
    if (so->ordered_min_value(i) == Rat(1)) has_one.set(i);
  rep = is_ip_r_star(so, has_one, 2);
  CHECK(!rep.verdict);
  REQUIRE(rep.avoiding_prefix.has_value());
  CHECK(rep.avoiding_prefix->values() ==
        ids_of(*so, {rs({Rat(2)}), rs({Rat(3)})}));
}

TEST_CASE("ip_r_star duality and ip monotonicity") {
  std::vector<PsgPtr> instances = {
      Psg::cyclic_group(4), Psg::finset_disjoint(4),
      Psg::finset_ordered({Rat(1), Rat(2), Rat(3), Rat(4)})};
  for (const auto& s : instances) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 8; ++trial) {
      ElemSet a(s->size());
      for (ElemId i = 0; i < s->size(); ++i)
        if (rng() & 1) a.set(i);
      for (int r = 1; r <= 3; ++r) {
        auto avoiding = find_ip_r(s, a.complement(), r);
        CHECK(is_ip_r_star(s, a, r).verdict == !avoiding.has_value());
        // a longer prefix in A truncates to a shorter one
        if (find_ip_r(s, a, r + 1).has_value())
          CHECK(find_ip_r(s, a, r).has_value());
      }
    }
  }
}

TEST_CASE("true verdicts are monotone in the target set") {
  auto z6 = Psg::cyclic_group(6);
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    ElemSet a(z6->size()), b(z6->size());
    for (ElemId i = 0; i < z6->size(); ++i) {
      if (rng() & 1) a.set(i);
      if (a.test(i) || (rng() & 1)) b.set(i);
    }
    if (is_thick(z6, a, 2).verdict) CHECK(is_thick(z6, b, 2).verdict);
    if (is_syndetic(z6, a, 2).verdict) CHECK(is_syndetic(z6, b, 2).verdict);
    if (is_piecewise_syndetic(z6, a, 2, 2).verdict)
      CHECK(is_piecewise_syndetic(z6, b, 2, 2).verdict);
    if (find_ip_r(z6, a, 3).has_value()) CHECK(find_ip_r(z6, b, 3).has_value());
  }
}

TEST_CASE("checkers agree with the direct oracle on total tables") {
  oracle::Table mod6 = oracle::table_mod_add(6);
  auto z6 = Psg::explicit_table(oracle::table_rows(mod6));
  std::mt19937 rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    uint32_t mask = rng() & ((1u << 6) - 1);
    ElemSet a(z6->size());
    for (ElemId i = 0; i < 6; ++i)
      if (mask & (1u << i)) a.set(i);
    CHECK(is_thick(z6, a, 2).verdict == oracle::thick(mod6, mask, 2));
    CHECK(is_syndetic(z6, a, 2).verdict == oracle::syndetic(mod6, mask, 2));
    CHECK(is_piecewise_syndetic(z6, a, 2, 2).verdict ==
          oracle::piecewise_syndetic(mod6, mask, 2, 2));
    CHECK(find_ip_r(z6, a, 3).has_value() == oracle::ip_r_exists(mod6, mask, 3));
  }
}
