// Theta series
//
//   Theta(Omega, Z) = sum_{A in Z^(m,g)} exp(pi i tr(A Omega tA + 2 A tZ))
//
// evaluated by a shell-ordered lattice sum with a certified truncation bound,
// and an accelerated evaluator that first moves the point with the exact
// transformation identities (Z shifts by the period lattice, integer
// translations of Omega, and the inversion Omega -> -Omega^{-1}; for g >= 2
// also unimodular basis changes and inversion of the first coordinate).
//
// Tail bound. Each summand has modulus exp(-pi tr(A Y tA) - 2 pi tr(A tV))
// with Y = Im Omega, V = Im Z, which is at most f(|A|) with
// f(r) = exp(-pi l r^2 + 2 pi v r), l = lambda_min(Y), v = |V|_F. For
// n = mg and a radius R with s0 = R - sqrt(n) beyond the peak of f, every
// omitted lattice point is dominated by the integral of f(|x| - sqrt(n)/2)
// over its unit cube, and the resulting radial integral is bounded by the
// tangent-line estimate of the concave log-integrand:
//
//   tail <= S_{n-1} exp(h(s0)) / (-h'(s0)),
//   h(s) = (n-1) log(s + sqrt(n)/2) - pi l s^2 + 2 pi v s.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sjtheta/groups.hpp"
#include "sjtheta/point.hpp"

namespace sjtheta {

struct ThetaValue {
  cplx value;
  double tail_bound = 0.0;  ///< certified bound on |truncation error|
  std::uint64_t terms_used = 0;
  /// First-order estimate of the floating-point error (worst-case
  /// summation plus per-term exponent error); not part of the certificate.
  double rounding_estimate = 0.0;
};

/// Certified tail bound for the radius-R ball; +inf when R is too small for
/// the estimate to apply.
double tail_bound(double lambda_min, double v_norm, std::size_t n, double radius);

/// Smallest radius (to bisection precision) whose tail bound is below tol.
double truncation_radius(const RealMatrix& Y, const RealMatrix& V, double tol);
/// Same, with the tolerance given by its natural log.
double truncation_radius_log(const RealMatrix& Y, const RealMatrix& V, double log_tol);

inline constexpr double kDefaultTermBudget = 1e8;

/// Sum over all A with |A|_F <= truncation_radius, in shell order
/// (increasing |A|^2, lexicographic within a shell).
ThetaValue theta_direct(const SiegelJacobiPoint& p, double tol,
                        double term_budget = kDefaultTermBudget);
/// theta_direct with log(tol), for tolerances below the double range.
ThetaValue theta_direct_log(const SiegelJacobiPoint& p, double log_tol,
                            double term_budget = kDefaultTermBudget);

/// One applied reduction move.
struct ReductionStep {
  enum class Kind { ZShift, Translation, Inversion, Basis, PartialInversion };
  Kind kind;
  IntMatrix lambda, mu;  ///< ZShift: Z -> Z - lambda Omega - mu
  IntMatrix b;           ///< Translation: Omega -> Omega - B
  ComplexMatrix z_shift; ///< Translation: Z -> Z + z_shift (half periods when diag B is odd)
  /// Inversion: det(Omega / i) before the move; PartialInversion: Omega_11 / i
  cplx det_omega_over_i;
  cplx factor;           ///< Theta(before) = factor * Theta(after); may overflow
  cplx log_factor;       ///< log of factor, imaginary part reduced to (-pi, pi]
  IntMatrix alpha;       ///< Basis: Omega -> t(alpha) Omega alpha, Z -> Z alpha
};

std::string to_string(ReductionStep::Kind k);

/// Theta(original) = multiplier * Theta(reduced_point).
struct ReductionTrace {
  SiegelJacobiPoint reduced_point;
  cplx multiplier{1.0};  ///< exp(log_multiplier); inf or 0 when out of range
  /// det(Omega/i) of each inversion (Omega_11/i for partial ones), in order
  std::vector<cplx> det_factors;
  std::vector<ReductionStep> steps;
  bool converged = true;
  /// Sum over steps of |exponent| of each factor plus a per-step constant;
  /// times the unit roundoff it estimates the relative error of multiplier.
  double exponent_mass = 0.0;
  cplx log_multiplier{0.0};
};

struct ReductionOptions {
  std::size_t max_steps = 64;
  double inversion_threshold = 0.5;  ///< invert when lambda_min(Im Omega) is at most this
  /// Also remove odd diagonal entries of Re Omega, compensating with the
  /// half-period shift Theta(Omega + B, Z) = Theta(Omega, Z + 1 diag(B)/2).
  bool odd_translations = false;
  /// g >= 2 only: LLL-reduce Im Omega by a unimodular basis change
  /// (Theta(t(alpha) Omega alpha, Z alpha) = Theta(Omega, Z)) and invert the
  /// first coordinate while |Omega_11| < 1.
  bool lattice_reduction = true;
};

/// The theta-group element inverting the first coordinate:
/// A = D = 1 - E, B = -E, C = E with E = e_1 t(e_1).
/// Theta(x.(Omega, Z)) = e^{pi i tr(Z (C Omega + D)^{-1} C tZ)} (Omega_11 / i)^{m/2} Theta(Omega, Z).
SymplecticElement partial_inversion(std::size_t g);

/// Unimodular alpha with t(alpha) Y alpha LLL-reduced (delta = 0.99).
IntMatrix lll_basis(const RealMatrix& Y);

ReductionTrace reduce_point(const SiegelJacobiPoint& p, const ReductionOptions& opts = {});

/// Undo the steps of a trace, recovering the original point.
SiegelJacobiPoint replay(const ReductionTrace& trace);

struct ThetaResult {
  ThetaValue value;    ///< may be inf when |Theta| exceeds the double range
  ReductionTrace trace;
  ThetaValue reduced;  ///< Theta at trace.reduced_point
};

/// reduce_point, theta_direct at the reduced point with the tolerance scaled
/// by 1/|multiplier|, and the product.
ThetaResult theta_with_trace(const SiegelJacobiPoint& p, double tol,
                             const ReductionOptions& opts = {},
                             double term_budget = kDefaultTermBudget);
ThetaResult theta_with_trace_log(const SiegelJacobiPoint& p, double log_tol,
                                 const ReductionOptions& opts = {},
                                 double term_budget = kDefaultTermBudget);

/// Throws NumericError when the value is not representable.
ThetaValue theta(const SiegelJacobiPoint& p, double tol, const ReductionOptions& opts = {});

// Pieces shared with the automorphy and oracle modules.

/// exp(pi i z)
cplx exp_pi_i(cplx z);

/// tr(X Omega tX) for complex X (m x g) and Omega (g x g).
cplx quad_trace(const ComplexMatrix& x, const ComplexMatrix& omega);

/// tr(X tY)
cplx pair_trace(const ComplexMatrix& x, const ComplexMatrix& y);

/// Enumerates Z^n in shell order up to a radius; calls f(const int* v) for each.
template <class F>
void for_each_lattice_point(std::size_t n, double radius, F&& f);

}  // namespace sjtheta

#include "sjtheta/detail/lattice.hpp"
