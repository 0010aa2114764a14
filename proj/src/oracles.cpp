#include "sjtheta/oracles.hpp"

#include <cmath>
#include <numbers>

#include "sjtheta/theta.hpp"

namespace sjtheta {

namespace {

struct ClosedFormParts {
  cplx det_power;       // det(Omega/i)^{-m/2}
  ComplexMatrix omega_inv;
};

ClosedFormParts closed_form_parts(const SiegelJacobiPoint& p) {
  cplx d = det(p.omega());
  for (std::size_t i = 0; i < p.g(); ++i) d *= cplx(0.0, -1.0);
  return {principal_half_power(d, -static_cast<int>(p.m())), inverse(p.omega())};
}

cplx closed_form(const ClosedFormParts& parts, const ComplexMatrix& z) {
  return parts.det_power * exp_pi_i(-quad_trace(z, parts.omega_inv));
}

}  // namespace

QuadratureSpec QuadratureSpec::defaults_for(const SiegelJacobiPoint& p) {
  return {6.0 / std::sqrt(p.min_eig_im_omega()), 256};
}

GaussLegendre gauss_legendre(std::size_t n) {
  if (n == 0) throw DomainError("gauss_legendre: need at least one node");
  GaussLegendre gl{std::vector<double>(n), std::vector<double>(n)};
  const double dn = static_cast<double>(n);
  // P_n(x) and P_n'(x) by the three-term recurrence
  auto legendre = [n, dn](double x) {
    double p0 = 1.0, p1 = x;
    for (std::size_t k = 2; k <= n; ++k) {
      const double dk = static_cast<double>(k);
      const double p2 = ((2.0 * dk - 1.0) * x * p1 - (dk - 1.0) * p0) / dk;
      p0 = p1;
      p1 = p2;
    }
    return std::pair{p1, dn * (x * p1 - p0) / (x * x - 1.0)};
  };
  for (std::size_t i = 0; i < n / 2; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (dn + 0.5));
    for (int it = 0; it < 100; ++it) {
      const auto [pn, dp] = legendre(x);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = legendre(x).second;
    gl.nodes[i] = -x;
    gl.nodes[n - 1 - i] = x;
    gl.weights[i] = gl.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  if (n % 2 == 1) {
    const double dp = legendre(0.0).second;
    gl.nodes[n / 2] = 0.0;
    gl.weights[n / 2] = n == 1 ? 2.0 : 2.0 / (dp * dp);
  }
  return gl;
}

cplx gaussian_integral_closed(const SiegelJacobiPoint& p) {
  return closed_form(closed_form_parts(p), p.z());
}

cplx gaussian_integral_quadrature(const SiegelJacobiPoint& p, const QuadratureSpec& spec) {
  const std::size_t g = p.g(), m = p.m(), n = g * m;
  if (n > 2) throw DomainError("gaussian_integral_quadrature: only mg <= 2 is supported");
  if (spec.points_per_axis < 8) throw DomainError("quadrature needs at least 8 points per axis");
  if (std::pow(static_cast<double>(spec.points_per_axis), static_cast<double>(n)) > 1e7)
    throw DomainError("quadrature grid exceeds 1e7 points");
  if (!(spec.box_half_width > 0.0)) throw DomainError("quadrature box must be non-empty");

  const RealMatrix center = -(p.im_z() * inverse(p.im_omega()));
  const GaussLegendre gl = gauss_legendre(spec.points_per_axis);
  const double h = spec.box_half_width;
  const ComplexMatrix& om = p.omega();

  auto integrand = [&](const ComplexMatrix& x) {
    return exp_pi_i(quad_trace(x, om) + 2.0 * pair_trace(x, p.z()));
  };

  // coordinate k of the flattened m x g matrix
  auto at = [g](ComplexMatrix& x, std::size_t k) -> cplx& { return x(k / g, k % g); };
  const std::size_t q = spec.points_per_axis;
  ComplexMatrix x(m, g);
  cplx sum = 0.0;
  if (n == 1) {
    for (std::size_t i = 0; i < q; ++i) {
      at(x, 0) = center(0, 0) + h * gl.nodes[i];
      sum += gl.weights[i] * integrand(x);
    }
    return sum * h;
  }
  const double c0 = center(0 / g, 0 % g), c1 = center(1 / g, 1 % g);
  for (std::size_t i = 0; i < q; ++i) {
    at(x, 0) = c0 + h * gl.nodes[i];
    cplx row = 0.0;
    for (std::size_t j = 0; j < q; ++j) {
      at(x, 1) = c1 + h * gl.nodes[j];
      row += gl.weights[j] * integrand(x);
    }
    sum += gl.weights[i] * row;
  }
  return sum * h * h;
}

PoissonCheck poisson_check(const SiegelJacobiPoint& p, double tol) {
  if (!(tol > 0.0)) throw DomainError("poisson_check: tol must be positive");
  const std::size_t g = p.g(), m = p.m();
  const cplx direct = theta_direct(p, tol / 10.0).value;

  const ClosedFormParts parts = closed_form_parts(p);
  ComplexMatrix dual_omega = -parts.omega_inv;
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i + 1; j < g; ++j)
      dual_omega(i, j) = dual_omega(j, i) = 0.5 * (dual_omega(i, j) + dual_omega(j, i));
  const ComplexMatrix zd = p.z() * dual_omega;
  // |term(A)| = |det_power e^{pi i tr(Z W tZ)}| * e^{-pi tr(A Y' tA) - 2 pi tr(A tIm(Z W))}
  const double scale = std::abs(parts.det_power * exp_pi_i(quad_trace(p.z(), dual_omega)));
  const double radius =
      truncation_radius(imag_part(dual_omega), imag_part(zd), tol / (10.0 * std::max(scale, 1e-300)));

  cplx dual = 0.0;
  ComplexMatrix shifted(m, g);
  for_each_lattice_point(m * g, radius, [&](const int* a) {
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t i = 0; i < g; ++i)
        shifted(k, i) = p.z()(k, i) + static_cast<double>(a[k * g + i]);
    dual += closed_form(parts, shifted);
  });
  return {std::abs(direct - dual), direct, dual};
}

}  // namespace sjtheta
