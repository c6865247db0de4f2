#pragma once

#include "wg/partition.hpp"
#include "wg/rational.hpp"

namespace wg {

// The three Jack parameter values the Weingarten formulas use. alpha = 1
// rescales Schur, 2 the zonal polynomials, 1/2 their symplectic twins.
enum class JackAlpha { Schur, Zonal, HalfZonal };

Rational jack_alpha_value(JackAlpha alpha);

// J-normalized Jack polynomial at x = (1, ..., 1) (N ones):
//   alpha^n * prod_{j<=l(lambda)} prod_{i=0}^{lambda_j - 1} ((N - j + 1)/alpha + i)
// evaluated exactly. Zero iff l(lambda) > N, strictly positive otherwise.
Rational jack_at_ones(const Partition& lambda, JackAlpha alpha, int N);

namespace detail {
// Same product for an arbitrary positive rational alpha; the public surface
// stays restricted to the three supported values.
Rational jack_at_ones_general(const Partition& lambda, const Rational& alpha,
                              int N);
}  // namespace detail

}  // namespace wg
