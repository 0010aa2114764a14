// Portable seeded sampling. The standard distributions are implementation
// defined, so bounded integers and uniform reals are derived from the raw
// mt19937_64 stream here to keep runs reproducible across toolchains.

#pragma once

#include <cstdint>
#include <random>

#include "sjtheta/point.hpp"

namespace sjtheta {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Mixes a base seed with a case index so each case of a suite has its own
/// independent stream (and can be regenerated in isolation).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Random real symmetric positive definite matrix with eigenvalues drawn
/// uniformly from [eig_lo, eig_hi] and a random orthogonal frame.
RealMatrix random_spd(Rng& rng, std::size_t g, double eig_lo, double eig_hi);

struct PointSampling {
  double eig_lo = 0.5;
  double eig_hi = 2.0;
  double re_omega = 1.0;  ///< Re Omega entries uniform in [-re_omega, re_omega]
  double re_z = 1.0;
  double im_z = 0.5;
};

SiegelJacobiPoint random_point(Rng& rng, std::size_t g, std::size_t m,
                               const PointSampling& s = {});

}  // namespace sjtheta
