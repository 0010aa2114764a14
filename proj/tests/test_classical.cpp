#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sjtheta/classical.hpp"
#include "sjtheta/errors.hpp"
#include "sjtheta/sampling.hpp"
#include "sjtheta/theta.hpp"

using namespace sjtheta;

namespace {

const cplx I{0.0, 1.0};

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

// Legendre symbol by searching for a square root
int legendre_brute(std::int64_t c, int p) {
  const std::int64_t r = ((c % p) + p) % p;
  if (r == 0) return 0;
  for (std::int64_t x = 1; x < p; ++x)
    if (x * x % p == r) return 1;
  return -1;
}

}  // namespace

TEST_CASE("hecke_theta values") {
  // sum_n e^{-2 pi n^2}, partial sums to |n| = 3 are exact to double precision
  double s = 0.0;
  for (int n = -3; n <= 3; ++n) s += std::exp(-2.0 * std::numbers::pi * n * n);
  CHECK(std::abs(hecke_theta(I, 1e-12) - s) < 1e-12);
  CHECK(std::abs(hecke_theta(I, 1e-12) - 1.0037348854877) < 1e-12);

  const cplx tau{0.3, 0.4};
  CHECK(std::abs(hecke_theta(tau + 1.0, 1e-12) - hecke_theta(tau, 1e-12)) < 1e-11);
  CHECK_THROWS_AS(hecke_theta(cplx(0.2, 0.0), 1e-9), DomainError);
  CHECK_THROWS_AS(hecke_theta(cplx(0.2, -1.0), 1e-9), DomainError);
}

TEST_CASE("hecke_theta equals theta_direct at (2 tau, 0)") {
  Rng rng(8);
  for (int k = 0; k < 20; ++k) {
    const cplx tau{rng.uniform(-1, 1), rng.uniform(0.2, 2)};
    const SiegelJacobiPoint p(ComplexMatrix{{2.0 * tau}}, ComplexMatrix(1, 1));
    const ThetaValue d = theta_direct(p, 1e-12);
    CHECK(std::abs(hecke_theta(tau, 1e-12) - d.value) <= 1e-12 + d.tail_bound + 1e-14);
  }
}

TEST_CASE("epsilon_d") {
  CHECK(epsilon_d(1) == cplx(1.0));
  CHECK(epsilon_d(3) == I);
  CHECK(epsilon_d(-3) == cplx(1.0));
  CHECK(epsilon_d(-1) == I);
  CHECK(epsilon_d(7) == I);
  CHECK_THROWS_AS(epsilon_d(4), DomainError);
}

TEST_CASE("kronecker_symbol examples") {
  CHECK(kronecker_symbol(1, 3) == 1);
  CHECK(kronecker_symbol(2, 3) == -1);
  CHECK(kronecker_symbol(4, 5) == 1);
  CHECK(kronecker_symbol(0, 1) == 1);
  CHECK(kronecker_symbol(4, 1) == 1);
  CHECK(kronecker_symbol(3, 9) == 0);
  CHECK(kronecker_symbol(2, 15) == 1);  // (2/3)(2/5) = (-1)(-1)
}

TEST_CASE("kronecker_symbol against brute-force residues for odd primes") {
  for (int p = 3; p < 100; ++p) {
    if (!is_prime(p)) continue;
    for (std::int64_t c = -2 * p; c <= 2 * p; ++c) CHECK(kronecker_symbol(c, p) == legendre_brute(c, p));
  }
}

TEST_CASE("kronecker_symbol is multiplicative in the numerator") {
  for (std::int64_t d = 1; d <= 30; d += 2)
    for (std::int64_t c1 = -30; c1 <= 30; ++c1)
      for (std::int64_t c2 = -30; c2 <= 30; ++c2)
        CHECK(kronecker_symbol(c1 * c2, d) == kronecker_symbol(c1, d) * kronecker_symbol(c2, d));
}

TEST_CASE("kronecker_symbol is the Jacobi symbol for odd composite d") {
  for (std::int64_t d = 3; d <= 99; d += 2)
    for (std::int64_t c = -50; c <= 50; ++c) {
      int expect = 1;
      std::int64_t rest = d;
      for (int p = 3; rest > 1; p += 2)
        while (rest % p == 0) {
          expect *= legendre_brute(c, p);
          rest /= p;
        }
      CHECK(kronecker_symbol(c, d) == expect);
    }
}

TEST_CASE("Gamma0 membership") {
  CHECK_NOTHROW((Gamma0Element{1, 0, 4, 1}.validate(4)));
  CHECK_THROWS_AS((Gamma0Element{1, 0, 2, 1}.validate(4)), ValidationError);
  CHECK_THROWS_AS((Gamma0Element{1, 1, 4, 1}.validate(4)), ValidationError);
  for (const auto& e : gamma0_elements(4, 20)) {
    CHECK(e.a * e.d - e.b * e.c == 1);
    CHECK(e.c % 4 == 0);
    CHECK(e.d > 0);
  }
}

TEST_CASE("verify_hecke examples") {
  CHECK(verify_hecke({1, 0, 0, 1}, cplx(0.3, 0.7), 1e-9).ok);
  CHECK(verify_hecke({1, 1, 0, 1}, I, 1e-9).ok);
  const HeckeCheck h = verify_hecke({1, 0, 4, 1}, I, 1e-8);
  CHECK(h.ok);
  CHECK(std::abs(h.lhs - h.rhs) < 1e-8);
  CHECK_THROWS_AS(verify_hecke({1, 0, 2, 1}, I, 1e-8), ValidationError);
  CHECK_THROWS_AS(verify_hecke({-1, 0, -4, -1}, I, 1e-8), DomainError);
  CHECK_THROWS_AS(verify_hecke({1, 0, 0, 1}, cplx(0.0, -1.0), 1e-8), DomainError);
}

TEST_CASE("Hecke's formula on Gamma0(4), entries bounded by 20") {
  const auto elems = gamma0_elements(4, 20);
  CHECK(elems.size() > 100);
  for (cplx tau : {I, cplx(0.25, 1.0 / 3.0), cplx(-0.2, 2.0)})
    for (const auto& e : elems) {
      const HeckeCheck h = verify_hecke(e, tau, 1e-8);
      CHECK_MESSAGE(h.ok, "gamma = (", e.a, ", ", e.b, ", ", e.c, ", ", e.d, ")");
    }
}

TEST_CASE("the Kronecker sign is needed") {
  // (8/3) = -1, so dropping the symbol would flip the right-hand side
  const Gamma0Element q{3, 1, 8, 3};
  REQUIRE(q.a * q.d - q.b * q.c == 1);
  CHECK(kronecker_symbol(8, 3) == -1);
  const HeckeCheck r = verify_hecke(q, cplx(0.1, 0.8), 1e-9);
  CHECK(r.ok);
  CHECK(std::abs(r.lhs + r.rhs) > 0.1);
}
