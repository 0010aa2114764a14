#pragma once

#include "sjtheta/linalg.hpp"

namespace sjtheta {

/// A point (Omega, Z) of the Siegel-Jacobi space: Omega complex symmetric
/// g x g with positive definite imaginary part, Z complex m x g.
class SiegelJacobiPoint {
 public:
  /// Validates and symmetrizes Omega. Asymmetry beyond 1e-12 (relative to
  /// the largest entry, floor 1) or a non-positive-definite Im Omega throws
  /// ValidationError.
  SiegelJacobiPoint(ComplexMatrix omega, ComplexMatrix z);

  const ComplexMatrix& omega() const { return omega_; }
  const ComplexMatrix& z() const { return z_; }
  std::size_t g() const { return omega_.rows(); }
  std::size_t m() const { return z_.rows(); }

  RealMatrix im_omega() const { return imag_part(omega_); }
  RealMatrix im_z() const { return imag_part(z_); }
  double min_eig_im_omega() const { return min_eigenvalue_sym(im_omega()); }

 private:
  ComplexMatrix omega_;
  ComplexMatrix z_;
};

/// Largest entrywise distance between two points of the same shape.
double point_distance(const SiegelJacobiPoint& a, const SiegelJacobiPoint& b);

}  // namespace sjtheta
