#include "wg/symfunc.hpp"

#include <stdexcept>

namespace wg {

Rational power_sum(const Partition& lambda, std::span<const Rational> x) {
  Rational result = 1;
  for (int j = 0; j < lambda.length(); ++j) {
    Rational moment = 0;
    for (const Rational& xi : x) {
      Rational p = xi;
      for (int e = 1; e < lambda.part(j); ++e) p *= xi;
      moment += p;
    }
    result *= moment;
  }
  return result;
}

Rational schur_at_ones(const Partition& lambda, int N) {
  if (N < 1) throw std::invalid_argument("schur_at_ones: N must be positive");
  if (lambda.length() > N) return 0;
  const Partition conj = lambda.conjugate();
  Rational result = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda.part(i); ++j) {
      const int content = j - i;
      const int hook = (lambda.part(i) - j) + (conj.part(j) - i) - 1;
      result *= make_rational(N + content, hook);
    }
  }
  return result;
}

}  // namespace wg
