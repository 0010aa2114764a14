#include "sjtheta/point.hpp"

#include <algorithm>
#include <cmath>

namespace sjtheta {

SiegelJacobiPoint::SiegelJacobiPoint(ComplexMatrix omega, ComplexMatrix z)
    : omega_(std::move(omega)), z_(std::move(z)) {
  if (!omega_.square() || omega_.rows() == 0)
    throw DimensionError("Omega must be a non-empty square matrix, got " + omega_.shape());
  if (z_.cols() != omega_.rows() || z_.rows() == 0)
    throw DimensionError("Z must be m x g with g = " + std::to_string(omega_.rows()) +
                         ", got " + z_.shape());
  if (!all_finite(omega_) || !all_finite(z_))
    throw ValidationError("point has non-finite entries");

  const std::size_t g = omega_.rows();
  const double tol = 1e-12 * std::max(1.0, max_abs(omega_));
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i + 1; j < g; ++j) {
      if (std::abs(omega_(i, j) - omega_(j, i)) > tol)
        throw ValidationError("Omega is not symmetric");
      const cplx avg = 0.5 * (omega_(i, j) + omega_(j, i));
      omega_(i, j) = omega_(j, i) = avg;
    }
  if (!(min_eig_im_omega() > 0.0))
    throw ValidationError("Im Omega is not positive definite");
}

double point_distance(const SiegelJacobiPoint& a, const SiegelJacobiPoint& b) {
  return std::max(max_abs_diff(a.omega(), b.omega()), max_abs_diff(a.z(), b.z()));
}

}  // namespace sjtheta
