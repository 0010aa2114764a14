#include "sjtheta/sampling.hpp"

#include <cmath>

namespace sjtheta {

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t r;
  do {
    r = engine_();
  } while (r >= limit);
  return lo + static_cast<std::int64_t>(r % span);
}

double Rng::uniform(double lo, double hi) {
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the pair
  std::uint64_t z = seed * 0x9E3779B97F4A7C15ULL + index + 0xD1B54A32D192ED03ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

RealMatrix random_spd(Rng& rng, std::size_t g, double eig_lo, double eig_hi) {
  // Gram-Schmidt on a random matrix gives the frame.
  RealMatrix q(g, g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) q(i, j) = rng.uniform(-1.0, 1.0);
  for (std::size_t j = 0; j < g; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      double dot = 0.0;
      for (std::size_t i = 0; i < g; ++i) dot += q(i, j) * q(i, k);
      for (std::size_t i = 0; i < g; ++i) q(i, j) -= dot * q(i, k);
    }
    double n = 0.0;
    for (std::size_t i = 0; i < g; ++i) n += q(i, j) * q(i, j);
    n = std::sqrt(n);
    if (n < 1e-8) {
      for (std::size_t i = 0; i < g; ++i) q(i, j) = i == j ? 1.0 : 0.0;
      n = 1.0;
    }
    for (std::size_t i = 0; i < g; ++i) q(i, j) /= n;
  }
  RealMatrix d(g, g);
  for (std::size_t i = 0; i < g; ++i) d(i, i) = rng.uniform(eig_lo, eig_hi);
  RealMatrix y = q * d * q.transpose();
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i + 1; j < g; ++j) y(j, i) = y(i, j);
  return y;
}

SiegelJacobiPoint random_point(Rng& rng, std::size_t g, std::size_t m, const PointSampling& s) {
  RealMatrix y = random_spd(rng, g, s.eig_lo, s.eig_hi);
  ComplexMatrix omega(g, g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i; j < g; ++j) {
      const double x = rng.uniform(-s.re_omega, s.re_omega);
      omega(i, j) = omega(j, i) = cplx(x, y(i, j));
    }
  ComplexMatrix z(m, g);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      const double re = rng.uniform(-s.re_z, s.re_z);
      const double im = rng.uniform(-s.im_z, s.im_z);
      z(i, j) = cplx(re, im);
    }
  return SiegelJacobiPoint(std::move(omega), std::move(z));
}

}  // namespace sjtheta
