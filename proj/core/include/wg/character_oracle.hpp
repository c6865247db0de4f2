#pragma once

#include "wg/partition.hpp"

namespace wg {

// Independent recomputation of chi_lambda(mu) for small degree (n <= 7):
// expands p_mu and s_lambda into monomial symmetric coordinates (the Schur
// side via semistandard tableau counts) and solves the resulting
// unitriangular system exactly. Shares no code with the ribbon recursion.
long long character_oracle(const Partition& lambda, const Partition& mu);

}  // namespace wg
