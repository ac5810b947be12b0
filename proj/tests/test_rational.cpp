#include <algorithm>
#include <vector>

#include "doctest.h"
#include "psgcr/rational.hpp"

using psgcr::Rat;

TEST_CASE("rationals reduce to lowest terms with positive denominator") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, 4) == Rat(-1, 2));
  CHECK(Rat(2, -4) == Rat(-1, 2));
  CHECK(Rat(0, 7) == Rat(0));
  CHECK(Rat(0, -7).den == 1);
  CHECK(Rat(6, 3).num == 2);
  CHECK(Rat(6, 3).den == 1);
}

TEST_CASE("rational formatting") {
  CHECK(Rat(2).str() == "2");
  CHECK(Rat(5, 10).str() == "1/2");
  CHECK(Rat(-5, 10).str() == "-1/2");
  CHECK(Rat(0).str() == "0");
}

TEST_CASE("rational order is exact") {
  CHECK(Rat(1, 2) < Rat(2, 3));
  CHECK(Rat(2, 3) < Rat(1));
  CHECK(Rat(5, 6) < Rat(6, 7));
  CHECK(Rat(1) < Rat(2));
  CHECK(!(Rat(1, 3) < Rat(1, 3)));
  CHECK(Rat(-1, 2) < Rat(0));

  // the counterexample ground values 1 - 1/t must sort strictly below 1
  std::vector<Rat> v = {Rat(1), Rat(0), Rat(4, 5), Rat(1, 2), Rat(2, 3), Rat(3, 4)};
  std::sort(v.begin(), v.end());
  CHECK(v == std::vector<Rat>{Rat(0), Rat(1, 2), Rat(2, 3), Rat(3, 4), Rat(4, 5), Rat(1)});
}

TEST_CASE("zero denominator is rejected") {
  CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
}
