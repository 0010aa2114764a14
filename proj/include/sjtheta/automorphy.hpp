// Automorphic factors of the Jacobi modular group and the multiplier of the
// theta transformation law
//
//   Theta(x.(Omega, Z)) = zeta(x) * core(x, (Omega, Z)) * Theta(Omega, Z),
//   core = e^{pi i tr{W (C Omega + D)^{-1} C tW - l Omega tl - 2 l tZ}}
//          * det(C Omega + D)^{m/2},        W = Z + l Omega + mu,
//
// for x = (gamma, (l, mu; k)) with gamma in the theta group.

#pragma once

#include "sjtheta/groups.hpp"
#include "sjtheta/point.hpp"

namespace sjtheta {

/// tr{W (C Omega + D)^{-1} C tW - l Omega tl - 2 l tZ}
cplx core_exponent(const JacobiGroupElement& x, const SiegelJacobiPoint& p);

/// e^{pi i core_exponent} (no kappa term).
cplx exponential_core(const JacobiGroupElement& x, const SiegelJacobiPoint& p);

/// e^{-pi i tr(kappa + mu tl)}, exactly +1 or -1.
int twist_sign(const HeisenbergElement& h);

/// J(x, p) = twist_sign * exponential_core.
cplx factor_J(const JacobiGroupElement& x, const SiegelJacobiPoint& p);

/// J_*(x, p) = J(x, p) * det(C Omega + D)^{m/2} on the principal branch.
cplx factor_Jstar(const JacobiGroupElement& x, const SiegelJacobiPoint& p);

/// A logarithm of J and of J_*, for elements whose factors leave the
/// double range. Imaginary parts are not reduced mod 2 pi.
cplx log_factor_J(const JacobiGroupElement& x, const SiegelJacobiPoint& p);
cplx log_factor_Jstar(const JacobiGroupElement& x, const SiegelJacobiPoint& p);

struct TransformationReport {
  JacobiGroupElement element;
  SiegelJacobiPoint point;
  cplx lhs;       ///< Theta at x.p (inf when out of double range)
  cplx rhs_core;  ///< exponential_core * det^{m/2} * Theta(p) (likewise)
  cplx zeta;      ///< lhs / rhs_core
  double modulus_defect = 0.0;       ///< ||zeta| - 1|
  double zeta_eighth_defect = 0.0;   ///< |zeta^8 - 1|
  std::uint64_t terms_used = 0;
};

/// Theta evaluations run at tol/10 (the left side additionally scaled by
/// the modulus of the prefactor). Throws ThetaTooSmallError when
/// |Theta(p)| < 10 tol. zeta is formed from logs, so it stays accurate when
/// lhs and rhs_core overflow.
TransformationReport extract_zeta(const JacobiGroupElement& x, const SiegelJacobiPoint& p,
                                  double tol);

struct Verification {
  bool ok;
  TransformationReport report;
};

/// ok iff ||zeta| - 1| < tol and |zeta^8 - 1| < tol.
Verification verify_functional_equation(const JacobiGroupElement& x,
                                        const SiegelJacobiPoint& p, double tol);

}  // namespace sjtheta
