#include "wg/rational.hpp"

#include <stdexcept>

namespace wg {

Rational make_rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational q{make_int(num), make_int(den)};
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string numerator_string(const Rational& q) { return q.get_num().get_str(); }

std::string denominator_string(const Rational& q) { return q.get_den().get_str(); }

Int factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Int int_pow(long long base, int exp) {
  if (exp < 0) throw std::invalid_argument("int_pow: negative exponent");
  Int b = make_int(base);
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

}  // namespace wg
