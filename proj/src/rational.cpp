#include "rational.hpp"

#include <cctype>

namespace monopath {

Rational rat(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rat(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::optional<Rational> parse_rational(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  std::size_t num_begin = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == num_begin) return std::nullopt;
  std::size_t den_begin = 0, den_end = 0;
  if (i < s.size()) {
    if (s[i] != '/') return std::nullopt;
    ++i;
    den_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == den_begin || i != s.size()) return std::nullopt;
    den_end = i;
  }
  Integer num(s.substr(0, den_begin == 0 ? s.size() : den_begin - 1));
  Integer den = 1;
  if (den_begin != 0) {
    den = Integer(s.substr(den_begin, den_end - den_begin));
    if (den == 0) return std::nullopt;
  }
  return rat(num, den);
}

std::string rational_str(const Rational& r) {
  return r.get_str();
}

Integer floor_int(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

Integer ceil_int(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

Rational pow2(int e) {
  Integer p = 1;
  p <<= (e >= 0 ? e : -e);
  return e >= 0 ? Rational(p) : rat(Integer(1), p);
}

} // namespace monopath
