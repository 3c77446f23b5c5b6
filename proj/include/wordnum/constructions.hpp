#pragma once

#include <gmpxx.h>

#include <vector>

#include "wordnum/reals.hpp"

namespace wordnum {

// 0.(1)(2)(3)... with every natural number rendered in base g and
// concatenated.
SourcePtr champernowne(int g);

// Position of the last binary digit of k in the base-2 concatenation:
// c_k = k + sum_{j<=k} floor(log2 j).
long champernowne_position(long k);

// Checks that the integer sum_{k<=K} k 2^(c_K - c_k), rendered in binary and
// padded to c_K digits, reproduces the concatenated stream exactly.
bool champernowne_closed_formula_check(long K);

// sum_{n>=1} a^-n g^-(a^n) for coprime a, g >= 2.
SourcePtr korobov_stoneham(long a, long g);

// 0.(2)(3)(5)(7)(11)... with the primes rendered in base g and concatenated.
SourcePtr copeland_erdos(int g);

// First count primes, streamed from a segmented sieve.
std::vector<long> prime_prefix(long count);

// Total digits contributed by the first k primes in base g.
long copeland_erdos_digit_count(int g, long k);

}  // namespace wordnum
