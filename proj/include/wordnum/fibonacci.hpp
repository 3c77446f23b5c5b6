#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "wordnum/words.hpp"

namespace wordnum {

// F_0 = 0, F_1 = 1, F_{n+1} = F_n + F_{n-1}.
mpz_class fib(unsigned long n);

// Sum of non-consecutive Fibonacci numbers F_k with k >= 2.
struct Zeckendorf {
  std::uint64_t n = 0;
  std::vector<int> indices;  // strictly decreasing, >= 2, no two consecutive
};

Zeckendorf zeckendorf(std::uint64_t n);

// R_n = 'A' iff the smallest Zeckendorf index of n is even; n >= 1.
char rabbit(std::uint64_t n);

enum class BeattyKind { phi, phi_squared };

// floor(k*Phi) = floor((k + isqrt(5 k^2)) / 2), exact: 5k^2 is never a
// perfect square for k >= 1, so the floor is unambiguous.
mpz_class beatty_phi(const mpz_class& k);
// floor(k*Phi^2) = floor(k*Phi) + k since Phi^2 = Phi + 1.
mpz_class beatty_phi2(const mpz_class& k);

std::vector<std::uint64_t> beatty_indices(BeattyKind kind, std::size_t count);

// (v_n)_{n>=0}: the rabbit sequence under A -> 0, Y -> 1, i.e. v_n encodes
// R_{n+1}.
StreamPtr danilov_stream();

}  // namespace wordnum
