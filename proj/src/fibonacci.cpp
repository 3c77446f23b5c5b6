#include "wordnum/fibonacci.hpp"

#include <stdexcept>

#include "wordnum/numeric.hpp"

namespace wordnum {

mpz_class fib(unsigned long n) {
  mpz_class r;
  mpz_fib_ui(r.get_mpz_t(), n);
  return r;
}

Zeckendorf zeckendorf(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("zeckendorf requires n >= 1");
  Zeckendorf z;
  z.n = n;
  // Greedy: repeatedly take the largest F_k <= remainder. The remainder after
  // taking F_k is < F_{k-1}, which forces the no-consecutive-indices shape.
  mpz_class rest(static_cast<unsigned long>(n));
  int k = 2;
  while (fib(k + 1) <= rest) ++k;
  while (rest > 0) {
    while (fib(k) > rest) --k;
    z.indices.push_back(k);
    rest -= fib(k);
    --k;
  }
  return z;
}

char rabbit(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("rabbit requires n >= 1");
  return zeckendorf(n).indices.back() % 2 == 0 ? 'A' : 'Y';
}

mpz_class beatty_phi(const mpz_class& k) {
  return fdiv(k + isqrt(5 * k * k), 2);
}

mpz_class beatty_phi2(const mpz_class& k) { return beatty_phi(k) + k; }

std::vector<std::uint64_t> beatty_indices(BeattyKind kind, std::size_t count) {
  if (count == 0) throw std::invalid_argument("beatty_indices requires count >= 1");
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (std::size_t k = 1; k <= count; ++k) {
    mpz_class v = kind == BeattyKind::phi ? beatty_phi(mpz_class(k))
                                          : beatty_phi2(mpz_class(k));
    out.push_back(v.get_ui());
  }
  return out;
}

StreamPtr danilov_stream() {
  return function_stream(Alphabet::binary(), [](std::size_t n) {
    return static_cast<Symbol>(rabbit(n + 1) == 'Y' ? 1 : 0);
  });
}

}  // namespace wordnum
