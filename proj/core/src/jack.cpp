#include "wg/jack.hpp"

#include <stdexcept>

namespace wg {

Rational jack_alpha_value(JackAlpha alpha) {
  switch (alpha) {
    case JackAlpha::Schur:
      return make_rational(1);
    case JackAlpha::Zonal:
      return make_rational(2);
    case JackAlpha::HalfZonal:
      return make_rational(1, 2);
  }
  throw std::invalid_argument("jack_alpha_value: unknown parameter");
}

namespace detail {

Rational jack_at_ones_general(const Partition& lambda, const Rational& alpha,
                              int N) {
  if (N < 1) throw std::invalid_argument("jack_at_ones: N must be positive");
  if (alpha <= 0) throw std::invalid_argument("jack_at_ones: alpha must be positive");

  Rational result = 1;
  for (int e = 0; e < lambda.sum(); ++e) result *= alpha;
  for (int j = 1; j <= lambda.length(); ++j) {
    const Rational base = Rational(N - j + 1) / alpha;
    for (int i = 0; i < lambda.part(j - 1); ++i) {
      result *= base + i;
      if (result == 0) return result;
    }
  }
  return result;
}

}  // namespace detail

Rational jack_at_ones(const Partition& lambda, JackAlpha alpha, int N) {
  return detail::jack_at_ones_general(lambda, jack_alpha_value(alpha), N);
}

}  // namespace wg
