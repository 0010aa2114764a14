// Independent numerical checks of the analytic identities behind the
// inversion formula: the Gaussian integral
//
//   int_{R^(m,g)} e^{pi i tr(x Omega tx + 2 x tZ)} dx
//       = det(Omega / i)^{-m/2} e^{-pi i tr(Z Omega^{-1} tZ)}
//
// by tensor-product Gauss-Legendre quadrature, and Poisson summation of
// f(x) = e^{pi i tr(x Omega tx + 2 x tZ)} over Z^(m,g).

#pragma once

#include <cstddef>
#include <vector>

#include "sjtheta/point.hpp"

namespace sjtheta {

struct QuadratureSpec {
  double box_half_width = 0.0;        ///< per coordinate, around the envelope peak
  std::size_t points_per_axis = 256;  ///< at least 8

  /// Half-width 6 / sqrt(lambda_min(Im Omega)), 256 points per axis.
  static QuadratureSpec defaults_for(const SiegelJacobiPoint& p);
};

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes, weights;
};
GaussLegendre gauss_legendre(std::size_t n);

cplx gaussian_integral_closed(const SiegelJacobiPoint& p);

/// Requires mg <= 2 and at most 1e7 grid points. The box is centred on the
/// envelope peak x0 = -Im(Z) (Im Omega)^{-1}.
cplx gaussian_integral_quadrature(const SiegelJacobiPoint& p, const QuadratureSpec& spec);

struct PoissonCheck {
  double defect;  ///< |direct - dual|
  cplx direct;    ///< sum_A f(A) = Theta(Omega, Z)
  cplx dual;      ///< sum_A f^(A), each term the closed-form integral at Z + A
};

PoissonCheck poisson_check(const SiegelJacobiPoint& p, double tol);

}  // namespace sjtheta
