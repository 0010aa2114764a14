#include "sjtheta/classical.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sjtheta/errors.hpp"

namespace sjtheta {

void Gamma0Element::validate(std::int64_t level) const {
  if (a * d - b * c != 1) throw ValidationError("Gamma0 element needs ad - bc = 1");
  if (level <= 0 || c % level != 0)
    throw ValidationError("Gamma0 element: c is not divisible by N = " + std::to_string(level));
}

std::vector<Gamma0Element> gamma0_elements(std::int64_t level, std::int64_t bound) {
  if (level <= 0 || bound < 0) throw DomainError("gamma0_elements: level must be positive");
  std::vector<Gamma0Element> out;
  for (std::int64_t c = -bound; c <= bound; ++c) {
    if (c % level != 0) continue;
    for (std::int64_t d = 1; d <= bound; ++d)
      for (std::int64_t a = -bound; a <= bound; ++a)
        for (std::int64_t b = -bound; b <= bound; ++b)
          if (a * d - b * c == 1) out.push_back({a, b, c, d});
  }
  return out;
}

cplx hecke_theta(cplx tau, double tol) {
  if (!(tau.imag() > 0.0)) throw DomainError("hecke_theta: Im tau must be positive");
  if (!(tol > 0.0)) throw DomainError("hecke_theta: tol must be positive");
  const double two_pi = 2.0 * std::numbers::pi;
  const double log_q = -two_pi * tau.imag();
  // sum_{|r| > R} q^{r^2} <= 2 q^{(R+1)^2} / (1 - q^{2R+3})
  std::int64_t R = 0;
  for (;; ++R) {
    const double r1 = static_cast<double>(R + 1);
    const double log_tail = std::log(2.0) + log_q * r1 * r1 -
                            std::log1p(-std::exp(log_q * (2.0 * r1 + 1.0)));
    if (log_tail < std::log(tol)) break;
  }
  cplx s = 1.0;
  for (std::int64_t r = 1; r <= R; ++r) {
    const double r2 = static_cast<double>(r * r);
    s += 2.0 * std::exp(cplx(0.0, two_pi) * r2 * tau);
  }
  return s;
}

cplx epsilon_d(std::int64_t d) {
  if (d % 2 == 0) throw DomainError("epsilon_d: d must be odd");
  return ((d % 4) + 4) % 4 == 1 ? cplx(1.0) : cplx(0.0, 1.0);
}

int kronecker_symbol(std::int64_t a, std::int64_t b) {
  static constexpr int tab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};
  if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
  if (a % 2 == 0 && b % 2 == 0) return 0;
  int v = 0;
  while (b % 2 == 0) {
    ++v;
    b /= 2;
  }
  int k = (v % 2 == 0) ? 1 : tab2[a & 7];
  if (b < 0) {
    b = -b;
    if (a < 0) k = -k;
  }
  for (;;) {
    if (a == 0) return b > 1 ? 0 : k;
    v = 0;
    while (a % 2 == 0) {
      ++v;
      a /= 2;
    }
    if (v % 2 == 1) k *= tab2[b & 7];
    if (a & b & 2) k = -k;
    const std::int64_t r = a < 0 ? -a : a;
    a = b % r;
    b = r;
  }
}

HeckeCheck verify_hecke(const Gamma0Element& gamma, cplx tau, double tol) {
  gamma.validate(4);
  if (gamma.d <= 0) throw DomainError("verify_hecke: only d > 0 is supported (negate gamma)");
  const auto [a, b, c, d] = gamma;
  const cplx ad = static_cast<double>(a), bd = static_cast<double>(b);
  const cplx cd = static_cast<double>(c), dd = static_cast<double>(d);
  const cplx image = (ad * tau + bd) / (cd * tau + dd);
  const cplx lhs = hecke_theta(image, tol / 10.0);
  const cplx rhs = (1.0 / epsilon_d(d)) * static_cast<double>(kronecker_symbol(c, d)) *
                   principal_half_power(cd * tau + dd, 1) * hecke_theta(tau, tol / 10.0);
  return {std::abs(lhs - rhs) < tol, lhs, rhs};
}

}  // namespace sjtheta
