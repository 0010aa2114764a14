// Degree one: Hecke's theta(tau) = sum_r e^{2 pi i r^2 tau} and its
// transformation under Gamma_0(4),
//
//   theta(gamma tau) = eps_d^{-1} (c/d) (c tau + d)^{1/2} theta(tau).

#pragma once

#include <cstdint>
#include <vector>

#include "sjtheta/linalg.hpp"

namespace sjtheta {

struct Gamma0Element {
  std::int64_t a, b, c, d;
  /// Throws ValidationError unless ad - bc = 1 and N | c.
  void validate(std::int64_t level) const;
};

/// Direct sum with its own geometric tail bound (independent of theta_direct).
cplx hecke_theta(cplx tau, double tol);

/// 1 for d = 1 mod 4, i for d = 3 mod 4.
cplx epsilon_d(std::int64_t d);

/// Kronecker symbol (c/d); agrees with the Jacobi symbol for odd d > 0.
int kronecker_symbol(std::int64_t c, std::int64_t d);

struct HeckeCheck {
  bool ok;
  cplx lhs, rhs;
};

/// All elements of Gamma_0(level) with |a|, |b|, |c|, |d| <= bound and d > 0,
/// ordered by (c, d, a, b).
std::vector<Gamma0Element> gamma0_elements(std::int64_t level, std::int64_t bound);

/// Requires gamma in Gamma_0(4) with d > 0.
HeckeCheck verify_hecke(const Gamma0Element& gamma, cplx tau, double tol);

}  // namespace sjtheta
