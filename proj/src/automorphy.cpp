#include "sjtheta/automorphy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sjtheta/theta.hpp"

namespace sjtheta {

namespace {

ComplexMatrix cm_plus_d(const JacobiGroupElement& x, const SiegelJacobiPoint& p) {
  return to_complex(x.gamma.C()) * p.omega() + to_complex(x.gamma.D());
}

}  // namespace

cplx core_exponent(const JacobiGroupElement& x, const SiegelJacobiPoint& p) {
  if (x.g() != p.g() || x.m() != p.m()) throw DimensionError("element and point shapes differ");
  const ComplexMatrix& om = p.omega();
  const ComplexMatrix lam = to_complex(x.h.lambda());
  const ComplexMatrix w = p.z() + lam * om + to_complex(x.h.mu());
  const ComplexMatrix inner = inverse(cm_plus_d(x, p)) * to_complex(x.gamma.C());
  return quad_trace(w, inner) - quad_trace(lam, om) - 2.0 * pair_trace(lam, p.z());
}

cplx exponential_core(const JacobiGroupElement& x, const SiegelJacobiPoint& p) {
  return exp_pi_i(core_exponent(x, p));
}

int twist_sign(const HeisenbergElement& h) { return h.twist_trace() % 2 == 0 ? 1 : -1; }

cplx factor_J(const JacobiGroupElement& x, const SiegelJacobiPoint& p) {
  return static_cast<double>(twist_sign(x.h)) * exponential_core(x, p);
}

cplx factor_Jstar(const JacobiGroupElement& x, const SiegelJacobiPoint& p) {
  return factor_J(x, p) *
         principal_half_power(det(cm_plus_d(x, p)), static_cast<int>(x.m()));
}

cplx log_factor_J(const JacobiGroupElement& x, const SiegelJacobiPoint& p) {
  const cplx e = core_exponent(x, p);
  const double sign_phase = twist_sign(x.h) < 0 ? std::numbers::pi : 0.0;
  return {-std::numbers::pi * e.imag(), std::numbers::pi * e.real() + sign_phase};
}

cplx log_factor_Jstar(const JacobiGroupElement& x, const SiegelJacobiPoint& p) {
  return log_factor_J(x, p) +
         std::log(principal_half_power(det(cm_plus_d(x, p)), static_cast<int>(x.m())));
}

TransformationReport extract_zeta(const JacobiGroupElement& x, const SiegelJacobiPoint& p,
                                  double tol) {
  if (!(tol > 0.0)) throw DomainError("extract_zeta: tol must be positive");
  if (!is_theta_element(x.gamma))
    throw ValidationError("extract_zeta: element is not in the theta group");

  // Everything is combined through logs: Theta at the image can exceed the
  // double range while zeta stays on the unit circle.
  const ThetaResult base = theta_with_trace_log(p, std::log(tol / 10.0));
  const cplx log_base = base.trace.log_multiplier + std::log(base.reduced.value);
  if (base.reduced.value == 0.0 || log_base.real() < std::log(10.0 * tol))
    throw ThetaTooSmallError("extract_zeta: |Theta(p)| is below 10*tol; retry at another point");

  const cplx e = core_exponent(x, p);
  const cplx log_pref = cplx(-std::numbers::pi * e.imag(), std::numbers::pi * e.real()) +
                        std::log(principal_half_power(det(cm_plus_d(x, p)), static_cast<int>(x.m())));
  const SiegelJacobiPoint q = act(x, p);
  const double log_lhs_tol = std::log(tol / 10.0) + std::min(0.0, log_pref.real());
  const ThetaResult image = theta_with_trace_log(q, log_lhs_tol);
  const cplx log_lhs = image.trace.log_multiplier + std::log(image.reduced.value);

  TransformationReport r{x, p, image.value.value, std::exp(log_pref + log_base), 0.0, 0.0, 0.0,
                         base.value.terms_used + image.value.terms_used};
  r.zeta = std::exp(log_lhs - log_pref - log_base);
  r.modulus_defect = std::abs(std::abs(r.zeta) - 1.0);
  const cplx z2 = r.zeta * r.zeta, z4 = z2 * z2;
  r.zeta_eighth_defect = std::abs(z4 * z4 - 1.0);
  return r;
}

Verification verify_functional_equation(const JacobiGroupElement& x,
                                        const SiegelJacobiPoint& p, double tol) {
  TransformationReport r = extract_zeta(x, p, tol);
  const bool ok = r.modulus_defect < tol && r.zeta_eighth_defect < tol;
  return {ok, std::move(r)};
}

}  // namespace sjtheta
