#pragma once

#include <string>
#include <vector>

#include "wg/rational.hpp"
#include "wg/weingarten.hpp"

namespace wg {

// A monomial Haar moment. Entries are 1-based matrix indices.
//
// Unitary: the integrand is prod_k U[a_k][b_k] * prod_k conj(U[d_k][c_k]);
// (a, b) and (d, c) must pair up in length, and the moment vanishes unless
// |a| == |d|. Orthogonal and symplectic: the integrand is
// prod_k M[a_k][b_k] with |a| == |b|; odd lengths integrate to zero.
// `dimension` is N; symplectic matrices are 2N x 2N and indices run to 2N.
struct MomentSpec {
  GroupKind group = GroupKind::Unitary;
  int dimension = 1;
  std::vector<int> a, b, c, d;

  void validate() const;  // throws std::invalid_argument

  // JSON wire format, e.g.
  //   {"group":"u","N":3,"a":[1],"b":[1],"c":[1],"d":[1]}
  // c and d are accepted (and emitted) only for the unitary group.
  static MomentSpec parse(const std::string& json_text);
  std::string to_json() const;
};

Rational integrate(const MomentSpec& spec);

Rational integrate_unitary(const MomentSpec& spec);
Rational integrate_orthogonal(const MomentSpec& spec);
Rational integrate_symplectic(const MomentSpec& spec);

}  // namespace wg
