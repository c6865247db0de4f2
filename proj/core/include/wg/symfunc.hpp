#pragma once

#include <span>

#include "wg/partition.hpp"
#include "wg/rational.hpp"

namespace wg {

// p_lambda(x) = prod_j sum_i x_i^{lambda_j}.
Rational power_sum(const Partition& lambda, std::span<const Rational> x);

// s_lambda(1^N) by the hook content formula; zero when l(lambda) > N.
Rational schur_at_ones(const Partition& lambda, int N);

}  // namespace wg
