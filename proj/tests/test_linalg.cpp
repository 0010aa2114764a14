#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sjtheta/errors.hpp"
#include "sjtheta/linalg.hpp"
#include "sjtheta/point.hpp"
#include "sjtheta/sampling.hpp"

using namespace sjtheta;

namespace {

bool close(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }

ComplexMatrix random_complex(Rng& rng, std::size_t n) {
  ComplexMatrix M(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) M(i, j) = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
  return M;
}

// Eigenvalues of a symmetric 3x3 from the characteristic polynomial
// (trigonometric solution of the depressed cubic).
std::vector<double> cubic_eigs(const RealMatrix& a) {
  const double p1 = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
  const double q = (a(0, 0) + a(1, 1) + a(2, 2)) / 3.0;
  const double p2 = (a(0, 0) - q) * (a(0, 0) - q) + (a(1, 1) - q) * (a(1, 1) - q) +
                    (a(2, 2) - q) * (a(2, 2) - q) + 2.0 * p1;
  const double p = std::sqrt(p2 / 6.0);
  RealMatrix b = a;
  for (int i = 0; i < 3; ++i) b(i, i) -= q;
  b *= 1.0 / p;
  const double r = std::clamp(det(b) / 2.0, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  const double e1 = q + 2.0 * p * std::cos(phi);
  const double e3 = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
  std::vector<double> e = {e3, 3.0 * q - e1 - e3, e1};
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace

TEST_CASE("principal_half_power examples") {
  CHECK(close(principal_half_power(4.0, 1), 2.0, 1e-15));
  CHECK(close(principal_half_power(-1.0, 1), cplx(0, 1), 1e-15));
  CHECK(close(principal_half_power(-4.0, 3), cplx(0, -8), 1e-14));
  CHECK(close(principal_half_power(cplx(0, 1), 2), cplx(0, 1), 1e-15));
  CHECK(close(principal_half_power(cplx(-1.0, -0.0), 1), cplx(0, 1), 1e-15));
  CHECK(close(principal_half_power(cplx(0, -1), 1), std::polar(1.0, -std::numbers::pi / 4), 1e-15));
  CHECK(principal_half_power(0.0, 0) == cplx(1.0));
  CHECK(principal_half_power(0.0, 3) == cplx(0.0));
  CHECK_THROWS_AS(principal_half_power(0.0, -1), DomainError);
  CHECK(close(principal_half_power(4.0, -2), 0.25, 1e-15));
}

TEST_CASE("principal_half_power branch properties") {
  Rng rng(11);
  for (int k = 0; k < 2000; ++k) {
    cplx z{rng.uniform(-5, 5), rng.uniform(-5, 5)};
    if (k % 10 == 0) z = {-rng.uniform(0.1, 5), 0.0};
    const cplx w = principal_half_power(z, 1);
    CHECK(std::abs(principal_half_power(z, 2) - z) <= 1e-12 * std::abs(z));
    CHECK(std::arg(w) > -std::numbers::pi / 2);
    CHECK(std::arg(w) <= std::numbers::pi / 2);
  }
}

TEST_CASE("det examples and multiplicativity") {
  CHECK(close(det(ComplexMatrix::identity(2)), 1.0, 1e-15));
  CHECK(close(det(ComplexMatrix{{1, 2}, {3, 4}}), -2.0, 1e-14));
  CHECK(close(det(ComplexMatrix{{cplx(0, 1), 0}, {0, cplx(0, 2)}}), -2.0, 1e-15));
  CHECK(det(RealMatrix{{1, 2}, {3, 4}}) == doctest::Approx(-2.0));
  CHECK(close(det(ComplexMatrix{{1, 2}, {2, 4}}), 0.0, 1e-15));

  Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    const ComplexMatrix a = random_complex(rng, 4), b = random_complex(rng, 4);
    const cplx lhs = det(a * b), rhs = det(a) * det(b);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("inverse examples, accuracy and singular input") {
  CHECK(inverse(ComplexMatrix::identity(3)) == ComplexMatrix::identity(3));
  CHECK(close(inverse(ComplexMatrix{{cplx(0, 1)}})(0, 0), cplx(0, -1), 1e-15));
  const ComplexMatrix u = inverse(ComplexMatrix{{1, 1}, {0, 1}});
  CHECK(max_abs_diff(u, ComplexMatrix{{1, -1}, {0, 1}}) < 1e-15);

  Rng rng(5);
  int tested = 0;
  for (int k = 0; k < 300; ++k) {
    const ComplexMatrix M = random_complex(rng, 1 + k % 4);
    const ComplexMatrix Mi = inverse(M);
    // skip ill-conditioned draws (Frobenius condition estimate)
    if (frobenius_norm(M) * frobenius_norm(Mi) > 1e6) continue;
    ++tested;
    CHECK(max_abs_diff(M * Mi, ComplexMatrix::identity(M.rows())) < 1e-10);
  }
  CHECK(tested > 250);

  try {
    inverse(ComplexMatrix{{1, 2}, {2, 4}});
    FAIL("expected SingularMatrixError");
  } catch (const SingularMatrixError& e) {
    CHECK(e.pivot() >= 0.0);
  }
  CHECK_THROWS_AS(inverse(ComplexMatrix(2, 3)), DimensionError);
}

TEST_CASE("min_eigenvalue_sym examples") {
  CHECK(min_eigenvalue_sym(RealMatrix::identity(3)) == doctest::Approx(1.0));
  CHECK(min_eigenvalue_sym(RealMatrix{{2, 0}, {0, 0.5}}) == doctest::Approx(0.5));
  CHECK(min_eigenvalue_sym(RealMatrix{{2, 1}, {1, 2}}) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(min_eigenvalue_sym(RealMatrix{{1, 2}, {0, 1}}), ValidationError);
}

TEST_CASE("eigenvalues against characteristic polynomial roots") {
  Rng rng(17);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 1 + k % 3;
    RealMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = rng.uniform(-3, 3);
    std::vector<double> expect;
    if (n == 1) {
      expect = {a(0, 0)};
    } else if (n == 2) {
      const double m = 0.5 * (a(0, 0) + a(1, 1));
      const double r = std::hypot(0.5 * (a(0, 0) - a(1, 1)), a(0, 1));
      expect = {m - r, m + r};
    } else {
      expect = cubic_eigs(a);
    }
    const auto got = eigenvalues_sym(a);
    REQUIRE(got.size() == n);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(got[i] - expect[i]) < 1e-9);
    CHECK(std::abs(min_eigenvalue_sym(a) - expect[0]) < 1e-9);
  }
}

TEST_CASE("SiegelJacobiPoint validation") {
  const ComplexMatrix z0(1, 1);
  CHECK_NOTHROW(SiegelJacobiPoint(ComplexMatrix{{cplx(0, 1)}}, z0));
  CHECK_THROWS_AS(SiegelJacobiPoint(ComplexMatrix{{cplx(1, 0)}}, z0), ValidationError);
  CHECK_THROWS_AS(SiegelJacobiPoint(ComplexMatrix{{cplx(0, -1)}}, z0), ValidationError);
  CHECK_THROWS_AS(SiegelJacobiPoint(ComplexMatrix{{cplx(0, 1), 1}, {0, cplx(0, 1)}}, ComplexMatrix(1, 2)),
                  ValidationError);
  CHECK_THROWS_AS(SiegelJacobiPoint(ComplexMatrix{{cplx(0, 1)}}, ComplexMatrix(1, 2)), DimensionError);
  CHECK_THROWS_AS(SiegelJacobiPoint(ComplexMatrix{{cplx(std::nan(""), 1)}}, z0), ValidationError);
  // indefinite imaginary part
  CHECK_THROWS_AS(
      SiegelJacobiPoint(ComplexMatrix{{cplx(0, 1), cplx(0, 2)}, {cplx(0, 2), cplx(0, 1)}}, ComplexMatrix(1, 2)),
      ValidationError);

  const SiegelJacobiPoint p(ComplexMatrix{{cplx(0, 2), cplx(0.5, 0.1)}, {cplx(0.5, 0.1), cplx(0, 1)}},
                            ComplexMatrix(3, 2));
  CHECK(p.g() == 2);
  CHECK(p.m() == 3);
}

TEST_CASE("sampling is deterministic and lands in the space") {
  Rng a(42), b(42);
  for (int k = 0; k < 50; ++k) {
    const SiegelJacobiPoint p = random_point(a, 2, 2), q = random_point(b, 2, 2);
    CHECK(point_distance(p, q) == 0.0);
    CHECK(p.min_eig_im_omega() >= 0.5 - 1e-12);
    CHECK(p.min_eig_im_omega() <= 2.0 + 1e-12);
  }
  CHECK(derive_seed(0, 1) != derive_seed(0, 2));
  CHECK(derive_seed(1, 0) != derive_seed(0, 1));
  Rng r(9);
  for (int k = 0; k < 1000; ++k) {
    const auto v = r.uniform_int(-2, 2);
    CHECK(v >= -2);
    CHECK(v <= 2);
  }
}
