#include "wordnum/numeric.hpp"

#include <cmath>

namespace wordnum {

mpq_class Enclosure::lower() const {
  mpq_class q(lo);
  q /= pow_mpz(2, static_cast<unsigned long>(bits));
  return q;
}

mpq_class Enclosure::upper() const {
  mpq_class q(hi);
  q /= pow_mpz(2, static_cast<unsigned long>(bits));
  return q;
}

Enclosure Enclosure::rescaled(long new_bits) const {
  if (new_bits == bits) return *this;
  Enclosure r;
  r.bits = new_bits;
  if (new_bits > bits) {
    r.lo = lo << static_cast<unsigned long>(new_bits - bits);
    r.hi = hi << static_cast<unsigned long>(new_bits - bits);
  } else {
    unsigned long s = static_cast<unsigned long>(bits - new_bits);
    mpz_fdiv_q_2exp(r.lo.get_mpz_t(), lo.get_mpz_t(), s);
    mpz_cdiv_q_2exp(r.hi.get_mpz_t(), hi.get_mpz_t(), s);
  }
  return r;
}

mpz_class isqrt(const mpz_class& n) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

mpz_class pow_mpz(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

mpz_class fdiv(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

mpz_class cdiv(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

mpz_class floor_scaled(const mpq_class& x, long bits) {
  mpz_class num = x.get_num() << static_cast<unsigned long>(bits);
  return fdiv(num, x.get_den());
}

mpz_class ceil_scaled(const mpq_class& x, long bits) {
  mpz_class num = x.get_num() << static_cast<unsigned long>(bits);
  return cdiv(num, x.get_den());
}

double log2_mpz(const mpz_class& n) {
  signed long exp = 0;
  double m = mpz_get_d_2exp(&exp, n.get_mpz_t());
  return std::log2(m) + static_cast<double>(exp);
}

std::string to_string(const mpq_class& x, int decimals) {
  bool neg = x < 0;
  mpq_class a = neg ? mpq_class(-x) : x;
  mpz_class scale = pow_mpz(10, static_cast<unsigned long>(decimals));
  mpz_class scaled = fdiv(a.get_num() * scale, a.get_den());
  mpz_class ip = scaled / scale;
  mpz_class fp = scaled % scale;
  std::string frac = fp.get_str();
  frac.insert(0, static_cast<std::size_t>(decimals) - frac.size(), '0');
  std::string out = (neg ? "-" : "") + ip.get_str();
  if (decimals > 0) out += "." + frac;
  return out;
}

}  // namespace wordnum
