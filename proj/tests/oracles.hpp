// Independent reference implementations used to cross-check the library.
// Everything here works on raw representations (rational vectors, bitmasks,
// row-major tables) and is written straight from the definitions, so a bug
// in the library's search machinery cannot hide in the oracle.
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "psgcr/rational.hpp"

namespace oracle {

// ordered-union model: an element is a strictly increasing rational vector,
// a*b is the union when max a < min b
using RSet = std::vector<psgcr::Rat>;

std::optional<RSet> ou_apply(const RSet& a, const RSet& b);

// every nonempty subset of the ground values, ascending mask order
std::vector<RSet> ou_universe(const std::vector<psgcr::Rat>& ground);

// exhaustive interleaved-chain search over the whole universe: does any
// witness with m <= m_max and strictly increasing indices <= r land every
// sequence of F in sigma(L)?
bool ou_witness_exists(const std::vector<psgcr::Rat>& ground,
                       const std::vector<RSet>& L,
                       const std::vector<std::vector<RSet>>& F, int r,
                       int m_max);

// finite-unions Ramsey by exhaustive coloring enumeration; k=2 runs a
// bit-parallel scan (64 colorings per word), other k a plain odometer
bool fu_good_coloring_exists(int s, int k, int r);

// order-separated s-tuples of nonempty blocks inside [1..r]
long long count_separated_tuples(int r, int s);

// total-operation instance as a raw row-major table
struct Table {
  int n = 0;
  std::vector<int> op;

  int at(int i, int j) const { return op[(size_t)i * (size_t)n + (size_t)j]; }
};

// largeness notions straight from the characterizations; A is a bitmask
// over the n elements, sigma(F) is the whole universe since the table is
// total
bool thick(const Table& t, uint32_t A, int b);
bool syndetic(const Table& t, uint32_t A, int g_max);
bool piecewise_syndetic(const Table& t, uint32_t A, int g_max, int b);
bool ip_r_exists(const Table& t, uint32_t A, int r);

// random associative total tables: modular addition and multiplication,
// min/max chains, left/right-zero, constants, meet-semilattices from
// AND-closed mask sets, and direct products of smaller cases
Table table_mod_add(int n);
Table random_total_table(std::mt19937& rng, int max_n);
std::vector<std::vector<int>> table_rows(const Table& t);

} // namespace oracle
