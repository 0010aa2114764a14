#include "sjtheta/theta.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace sjtheta {

namespace {

constexpr double kPi = std::numbers::pi;

// log of the certified tail bound, +inf when the estimate does not apply
double log_tail_bound(double l, double v, std::size_t n, double radius) {
  const double dn = static_cast<double>(n);
  const double c = 0.5 * std::sqrt(dn);
  const double s0 = radius - 2.0 * c;
  if (!(s0 > 0.0) || s0 < v / l) return INFINITY;
  const double dh = (dn - 1.0) / (s0 + c) - 2.0 * kPi * l * s0 + 2.0 * kPi * v;
  if (!(dh < 0.0)) return INFINITY;
  const double h = (dn - 1.0) * std::log(s0 + c) - kPi * l * s0 * s0 + 2.0 * kPi * v * s0;
  // surface area of the unit sphere in R^n
  const double log_area = std::log(2.0) + 0.5 * dn * std::log(kPi) - std::lgamma(0.5 * dn);
  return log_area + h - std::log(-dh);
}

double round_half_to_zero(double x) {
  const double r = std::round(x);
  if (std::abs(x - std::trunc(x)) == 0.5) return std::trunc(x);
  return r;
}

double estimate_terms(std::size_t n, double radius) {
  const double dn = static_cast<double>(n);
  const double r = radius + 0.5 * std::sqrt(dn);
  return std::exp(0.5 * dn * std::log(kPi) - std::lgamma(0.5 * dn + 1.0) + dn * std::log(r));
}

}  // namespace

cplx exp_pi_i(cplx z) { return std::exp(cplx(-kPi * z.imag(), kPi * z.real())); }

cplx quad_trace(const ComplexMatrix& x, const ComplexMatrix& omega) {
  return (x * omega * x.transpose()).trace();
}

cplx pair_trace(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw DimensionError("pair_trace shape mismatch");
  cplx s = 0.0;
  for (std::size_t k = 0; k < x.data().size(); ++k) s += x.data()[k] * y.data()[k];
  return s;
}

double tail_bound(double lambda_min, double v_norm, std::size_t n, double radius) {
  return std::exp(log_tail_bound(lambda_min, v_norm, n, radius));
}

double truncation_radius(const RealMatrix& Y, const RealMatrix& V, double tol) {
  if (!(tol > 0.0)) throw DomainError("truncation_radius: tol must be positive");
  return truncation_radius_log(Y, V, std::log(tol));
}

double truncation_radius_log(const RealMatrix& Y, const RealMatrix& V, double log_tol) {
  if (std::isnan(log_tol) || log_tol == INFINITY)
    throw DomainError("truncation_radius: tol must be positive and finite");
  const double l = min_eigenvalue_sym(Y);
  if (!(l > 0.0)) throw DomainError("truncation_radius: Im Omega is not positive definite");
  if (V.cols() != Y.rows()) throw DimensionError("truncation_radius: V must be m x g");
  const std::size_t n = V.rows() * V.cols();
  const double v = frobenius_norm(V);

  double lo = std::sqrt(static_cast<double>(n)) + v / l;
  double hi = std::max(2.0 * lo, lo + 1.0);
  while (!(log_tail_bound(l, v, n, hi) < log_tol)) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e12) throw NumericError("truncation_radius: no finite radius reaches tol");
  }
  for (int it = 0; it < 100 && hi - lo > 1e-9 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (log_tail_bound(l, v, n, mid) < log_tol)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

ThetaValue theta_direct(const SiegelJacobiPoint& p, double tol, double term_budget) {
  if (!(tol > 0.0)) throw DomainError("theta_direct: tol must be positive");
  return theta_direct_log(p, std::log(tol), term_budget);
}

ThetaValue theta_direct_log(const SiegelJacobiPoint& p, double log_tol, double term_budget) {
  const std::size_t g = p.g(), m = p.m(), n = g * m;
  const RealMatrix Y = p.im_omega();
  const RealMatrix V = p.im_z();
  const double radius = truncation_radius_log(Y, V, log_tol);
  const double estimate = estimate_terms(n, radius);
  if (estimate > term_budget)
    throw BudgetExceededError("theta_direct: about " + std::to_string(estimate) +
                                  " lattice terms needed (budget " + std::to_string(term_budget) +
                                  "); reduce the point first",
                              estimate);

  const ComplexMatrix& om = p.omega();
  const ComplexMatrix& z = p.z();
  ThetaValue out{cplx(0.0), tail_bound(min_eigenvalue_sym(Y), frobenius_norm(V), n, radius), 0};
  double abs_sum = 0.0, exponent_error = 0.0;
  for_each_lattice_point(n, radius, [&](const int* a) {
    // exponent tr(A Omega tA) + 2 tr(A tZ), row by row; `mag` is the same
    // sum taken over absolute values
    cplx e = 0.0;
    double mag = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      const int* row = a + k * g;
      for (std::size_t i = 0; i < g; ++i) {
        if (row[i] == 0) continue;
        const double ai = static_cast<double>(row[i]);
        cplx s = 0.0;
        double sm = 0.0;
        for (std::size_t j = 0; j < g; ++j) {
          s += om(i, j) * static_cast<double>(row[j]);
          sm += std::abs(om(i, j)) * std::abs(static_cast<double>(row[j]));
        }
        e += ai * (s + 2.0 * z(k, i));
        mag += std::abs(ai) * (sm + 2.0 * std::abs(z(k, i)));
      }
    }
    const cplx t = exp_pi_i(e);
    out.value += t;
    abs_sum += std::abs(t);
    exponent_error += std::abs(t) * (kPi * static_cast<double>(g + 2) * mag + 4.0);
    ++out.terms_used;
  });
  if (!std::isfinite(out.value.real()) || !std::isfinite(out.value.imag()))
    throw NumericError("theta_direct: lattice sum overflowed");
  constexpr double u = std::numeric_limits<double>::epsilon() / 2;
  out.rounding_estimate = u * (static_cast<double>(out.terms_used) * abs_sum + exponent_error);
  return out;
}

std::string to_string(ReductionStep::Kind k) {
  switch (k) {
    case ReductionStep::Kind::ZShift: return "z_shift";
    case ReductionStep::Kind::Translation: return "translation";
    case ReductionStep::Kind::Inversion: return "inversion";
    case ReductionStep::Kind::Basis: return "basis";
    case ReductionStep::Kind::PartialInversion: return "partial_inversion";
  }
  return "?";
}

SymplecticElement partial_inversion(std::size_t g) {
  IntMatrix A = IntMatrix::identity(g), B(g, g), C(g, g), D = IntMatrix::identity(g);
  A(0, 0) = D(0, 0) = 0;
  B(0, 0) = -1;
  C(0, 0) = 1;
  return SymplecticElement::from_blocks(A, B, C, D);
}

namespace {

RealMatrix gram(const IntMatrix& alpha, const RealMatrix& Y) {
  const RealMatrix a = real_part(to_complex(alpha));
  return a.transpose() * Y * a;
}

// Gram-Schmidt coefficients mu(i, j), j < i, and squared lengths b of the
// basis with Gram matrix G.
void gram_schmidt(const RealMatrix& G, RealMatrix& mu, std::vector<double>& b) {
  const std::size_t g = G.rows();
  mu = RealMatrix(g, g);
  b.assign(g, 0.0);
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      double s = G(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= mu(j, k) * mu(i, k) * b[k];
      mu(i, j) = s / b[j];
    }
    double s = G(i, i);
    for (std::size_t k = 0; k < i; ++k) s -= mu(i, k) * mu(i, k) * b[k];
    b[i] = s;
  }
}

// log of e^{pi i z}
cplx log_exp_pi_i(cplx z) { return {-kPi * z.imag(), std::remainder(kPi * z.real(), 2.0 * kPi)}; }

cplx wrap_phase(cplx z) { return {z.real(), std::remainder(z.imag(), 2.0 * kPi)}; }

void symmetrize(ComplexMatrix& om) {
  for (std::size_t i = 0; i < om.rows(); ++i)
    for (std::size_t j = i + 1; j < om.cols(); ++j)
      om(i, j) = om(j, i) = 0.5 * (om(i, j) + om(j, i));
}

}  // namespace

IntMatrix lll_basis(const RealMatrix& Y) {
  const std::size_t g = Y.rows();
  IntMatrix alpha = IntMatrix::identity(g);
  RealMatrix mu;
  std::vector<double> b;
  std::size_t k = 1;
  for (int guard = 0; k < g && guard < 10000; ++guard) {
    for (std::size_t j = k; j-- > 0;) {
      gram_schmidt(gram(alpha, Y), mu, b);
      const double q = std::round(mu(k, j));
      if (q == 0.0) continue;
      const auto qi = static_cast<std::int64_t>(q);
      for (std::size_t r = 0; r < g; ++r) alpha(r, k) -= qi * alpha(r, j);
    }
    gram_schmidt(gram(alpha, Y), mu, b);
    if (b[k] < (0.99 - mu(k, k - 1) * mu(k, k - 1)) * b[k - 1]) {
      for (std::size_t r = 0; r < g; ++r) std::swap(alpha(r, k), alpha(r, k - 1));
      k = std::max<std::size_t>(k - 1, 1);
    } else {
      ++k;
    }
  }
  return alpha;
}

ReductionTrace reduce_point(const SiegelJacobiPoint& p, const ReductionOptions& opts) {
  const std::size_t g = p.g(), m = p.m(), n = g * m;
  const bool lattice = opts.lattice_reduction && g >= 2;
  ComplexMatrix om = p.omega(), z = p.z();
  ReductionTrace tr{p, cplx(1.0), {}, {}, true};

  auto budget_left = [&] { return tr.steps.size() < opts.max_steps; };
  auto push = [&](ReductionStep st) {
    tr.log_multiplier = wrap_phase(tr.log_multiplier + st.log_factor);
    st.factor = std::exp(st.log_factor);
    tr.steps.push_back(std::move(st));
  };
  for (;;) {
    bool moved = false;

    // Unimodular change of basis making Im Omega LLL-reduced.
    if (lattice) {
      const IntMatrix alpha = lll_basis(imag_part(om));
      if (alpha != IntMatrix::identity(g)) {
        if (!budget_left()) { tr.converged = false; break; }
        const ComplexMatrix a = to_complex(alpha);
        om = a.transpose() * om * a;
        symmetrize(om);
        z = z * a;
        double mag = 0.0;
        for (const cplx& e : om.data()) mag = std::max(mag, std::abs(e));
        tr.exponent_mass += kPi * static_cast<double>(n + 2) * mag;
        ReductionStep st{ReductionStep::Kind::Basis, {}, {}, {}, {}, 0.0, 1.0, 0.0, alpha};
        push(std::move(st));
        moved = true;
      }
    }

    // Integer translation of Re Omega.
    IntMatrix b(g, g);
    bool any = false;
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = i; j < g; ++j) {
        const double x = om(i, j).real();
        double r = (i != j || opts.odd_translations) ? round_half_to_zero(x)
                                                     : 2.0 * round_half_to_zero(0.5 * x);
        b(i, j) = b(j, i) = static_cast<std::int64_t>(r);
        any |= r != 0.0;
      }
    if (any) {
      if (!budget_left()) { tr.converged = false; break; }
      ReductionStep st{ReductionStep::Kind::Translation, {}, {}, b, ComplexMatrix(m, g), 0.0, 1.0, 0.0, {}};
      for (std::size_t i = 0; i < g; ++i)
        if (b(i, i) % 2 != 0)
          for (std::size_t k = 0; k < m; ++k) st.z_shift(k, i) = 0.5;
      om -= to_complex(b);
      z += st.z_shift;
      push(std::move(st));
      moved = true;
    }

    // Shift Z by the period lattice Z^(m,g) Omega + Z^(m,g).
    {
      const RealMatrix Y = imag_part(om);
      const RealMatrix coord = imag_part(z) * inverse(Y);
      IntMatrix lambda(m, g), mu(m, g);
      bool nz = false;
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < g; ++i) {
          lambda(k, i) = static_cast<std::int64_t>(round_half_to_zero(coord(k, i)));
          nz |= lambda(k, i) != 0;
        }
      const RealMatrix re = real_part(z - to_complex(lambda) * om);
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < g; ++i) {
          mu(k, i) = static_cast<std::int64_t>(round_half_to_zero(re(k, i)));
          nz |= mu(k, i) != 0;
        }
      if (nz) {
        if (!budget_left()) { tr.converged = false; break; }
        const ComplexMatrix lc = to_complex(lambda);
        const ComplexMatrix z_new = z - lc * om - to_complex(mu);
        const cplx arg = quad_trace(lc, om) + 2.0 * pair_trace(lc, z_new);
        tr.exponent_mass += kPi * static_cast<double>(n + 2) * std::abs(arg) + 8.0;
        push({ReductionStep::Kind::ZShift, lambda, mu, {}, {}, 0.0, 1.0, log_exp_pi_i(-arg), {}});
        z = z_new;
        moved = true;
      }
    }

    // Inversion, only when it improves the smallest eigenvalue of Im Omega.
    bool inverted = false;
    {
      const double lmin = min_eigenvalue_sym(imag_part(om));
      if (lmin <= opts.inversion_threshold) {
        const ComplexMatrix oinv = inverse(om);
        ComplexMatrix om_new = -oinv;
        symmetrize(om_new);
        if (min_eigenvalue_sym(imag_part(om_new)) > lmin * (1.0 + 1e-12)) {
          if (!budget_left()) { tr.converged = false; break; }
          cplx d = det(om);
          for (std::size_t i = 0; i < g; ++i) d *= cplx(0.0, -1.0);
          const ComplexMatrix z_new = z * oinv;
          const cplx arg = quad_trace(z, oinv);
          const cplx lf = log_exp_pi_i(-arg) + std::log(principal_half_power(d, -static_cast<int>(m)));
          tr.exponent_mass += kPi * static_cast<double>(n + 2) * std::abs(arg) + 8.0 * static_cast<double>(n + g);
          tr.det_factors.push_back(d);
          push({ReductionStep::Kind::Inversion, {}, {}, {}, {}, d, 1.0, lf, {}});
          om = std::move(om_new);
          z = z_new;
          moved = inverted = true;
        }
      }
    }

    // Inversion of the first coordinate; raises det Im Omega by 1/|Omega_11|^2.
    if (lattice && !inverted && std::abs(om(0, 0)) < 1.0 - 1e-12) {
      if (!budget_left()) { tr.converged = false; break; }
      const SymplecticElement s = partial_inversion(g);
      const ComplexMatrix C = to_complex(s.C());
      const ComplexMatrix minv = inverse(C * om + to_complex(s.D()));
      ComplexMatrix om_new = (to_complex(s.A()) * om + to_complex(s.B())) * minv;
      symmetrize(om_new);
      const cplx d = om(0, 0) / cplx(0.0, 1.0);
      const cplx arg = quad_trace(z, minv * C);
      const cplx lf = log_exp_pi_i(-arg) + std::log(principal_half_power(d, -static_cast<int>(m)));
      tr.exponent_mass += kPi * static_cast<double>(n + 2) * std::abs(arg) + 8.0 * static_cast<double>(n + g);
      tr.det_factors.push_back(d);
      push({ReductionStep::Kind::PartialInversion, {}, {}, {}, {}, d, 1.0, lf, {}});
      z = z * minv;
      om = std::move(om_new);
      moved = true;
    }

    if (!moved) break;
  }
  tr.multiplier = std::exp(tr.log_multiplier);
  tr.reduced_point = SiegelJacobiPoint(om, z);
  return tr;
}

SiegelJacobiPoint replay(const ReductionTrace& trace) {
  ComplexMatrix om = trace.reduced_point.omega(), z = trace.reduced_point.z();
  const std::size_t g = om.rows();
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    switch (it->kind) {
      case ReductionStep::Kind::ZShift:
        z = z + to_complex(it->lambda) * om + to_complex(it->mu);
        break;
      case ReductionStep::Kind::Translation:
        om += to_complex(it->b);
        z -= it->z_shift;
        break;
      case ReductionStep::Kind::Inversion: {
        const ComplexMatrix inv = inverse(om);
        om = -inv;
        z = -(z * inv);
        break;
      }
      case ReductionStep::Kind::Basis: {
        const ComplexMatrix ai = to_complex(unimodular_inverse(it->alpha));
        om = ai.transpose() * om * ai;
        z = z * ai;
        break;
      }
      case ReductionStep::Kind::PartialInversion: {
        const SymplecticElement s = partial_inversion(g).inverse();
        const ComplexMatrix minv = inverse(to_complex(s.C()) * om + to_complex(s.D()));
        om = (to_complex(s.A()) * om + to_complex(s.B())) * minv;
        z = z * minv;
        break;
      }
    }
    symmetrize(om);
  }
  return SiegelJacobiPoint(om, z);
}

ThetaResult theta_with_trace(const SiegelJacobiPoint& p, double tol, const ReductionOptions& opts,
                             double term_budget) {
  if (!(tol > 0.0)) throw DomainError("theta: tol must be positive");
  return theta_with_trace_log(p, std::log(tol), opts, term_budget);
}

ThetaResult theta_with_trace_log(const SiegelJacobiPoint& p, double log_tol,
                                 const ReductionOptions& opts, double term_budget) {
  ReductionTrace tr = reduce_point(p, opts);
  const double log_scale = tr.log_multiplier.real();
  ThetaValue v = theta_direct_log(tr.reduced_point, log_tol - log_scale, term_budget);
  // scale by |multiplier| without forming it
  auto scaled = [&](double x) { return x > 0.0 ? std::exp(log_scale + std::log(x)) : 0.0; };
  constexpr double u = std::numeric_limits<double>::epsilon() / 2;
  const double mod = std::abs(tr.multiplier);
  const cplx value = (mod > 0.0 && std::isfinite(mod)) || v.value == 0.0
                         ? tr.multiplier * v.value
                         : std::exp(tr.log_multiplier + std::log(v.value));
  ThetaValue out{value, scaled(v.tail_bound), v.terms_used,
                 scaled(v.rounding_estimate) + std::abs(value) * u * tr.exponent_mass};
  return {out, std::move(tr), v};
}

ThetaValue theta(const SiegelJacobiPoint& p, double tol, const ReductionOptions& opts) {
  ThetaValue v = theta_with_trace(p, tol, opts).value;
  if (!std::isfinite(std::abs(v.value)))
    throw NumericError("theta: |Theta| exceeds the double range at this point");
  return v;
}

}  // namespace sjtheta
