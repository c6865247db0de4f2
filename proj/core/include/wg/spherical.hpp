#pragma once

#include "wg/partition.hpp"
#include "wg/permutation.hpp"
#include "wg/rational.hpp"

namespace wg {

// Averages of S_2n characters over the hyperoctahedral group. Both functions
// take lambda a partition of n and tau of degree 2n.
//
//   zonal:   (1/|H_n|) sum_xi chi_{2 lambda}(tau xi)
//   twisted: (1/|H_n|) sum_xi chi_{lambda u lambda}(tau xi) sgn(xi)
//
// The zonal value is constant on double cosets H_n tau H_n; the twisted one
// picks up sgn(h1) sgn(h2) under tau -> h1 tau h2, so the cache stores
// sgn(tau) * twisted(tau) per coset type and the sign is applied per call.
Rational zonal_spherical(const Partition& lambda, const Permutation& tau);
Rational twisted_spherical(const Partition& lambda, const Permutation& tau);

// Cached class forms keyed by coset type.
Rational zonal_spherical_class(const Partition& lambda,
                               const Partition& coset_type);
// sgn(tau) * twisted(tau) for any tau of the given coset type.
Rational twisted_spherical_signed(const Partition& lambda,
                                  const Partition& coset_type);

}  // namespace wg
