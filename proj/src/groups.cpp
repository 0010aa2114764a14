#include "sjtheta/groups.hpp"

#include <cmath>

#include "sjtheta/sampling.hpp"

namespace sjtheta {

namespace {

std::int64_t add_ck(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 overflow in group arithmetic");
  return r;
}

std::int64_t mul_ck(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 overflow in group arithmetic");
  return r;
}

IntMatrix neg(IntMatrix a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = -a(i, j);
  return a;
}

}  // namespace

IntMatrix checked_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matmul " + a.shape() + " x " + b.shape());
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) s = add_ck(s, mul_ck(a(i, k), b(k, j)));
      c(i, j) = s;
    }
  return c;
}

IntMatrix checked_add(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("add " + a.shape() + " + " + b.shape());
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = add_ck(a(i, j), b(i, j));
  return c;
}

IntMatrix checked_sub(const IntMatrix& a, const IntMatrix& b) { return checked_add(a, neg(b)); }

IntMatrix symplectic_form(std::size_t g) {
  IntMatrix J(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    J(i, g + i) = 1;
    J(g + i, i) = -1;
  }
  return J;
}

bool is_symplectic(const IntMatrix& M) {
  if (!M.square() || M.rows() % 2 != 0 || M.rows() == 0) return false;
  const IntMatrix J = symplectic_form(M.rows() / 2);
  return checked_mul(checked_mul(M.transpose(), J), M) == J;
}

// --- Sp(2g, Z) ---------------------------------------------------------------

SymplecticElement::SymplecticElement(IntMatrix m) : g_(m.rows() / 2), m_(std::move(m)) {
  if (!is_symplectic(m_)) throw ValidationError("matrix is not symplectic");
}

SymplecticElement SymplecticElement::identity(std::size_t g) {
  return SymplecticElement(IntMatrix::identity(2 * g));
}

SymplecticElement SymplecticElement::from_blocks(const IntMatrix& A, const IntMatrix& B,
                                                 const IntMatrix& C, const IntMatrix& D) {
  const std::size_t g = A.rows();
  for (const IntMatrix* blk : {&A, &B, &C, &D})
    if (blk->rows() != g || blk->cols() != g) throw DimensionError("symplectic blocks must be g x g");
  IntMatrix m(2 * g, 2 * g);
  m.set_block(0, 0, A);
  m.set_block(0, g, B);
  m.set_block(g, 0, C);
  m.set_block(g, g, D);
  return SymplecticElement(std::move(m));
}

SymplecticElement SymplecticElement::inverse() const {
  return from_blocks(D().transpose(), neg(B().transpose()), neg(C().transpose()),
                     A().transpose());
}

SymplecticElement operator*(const SymplecticElement& a, const SymplecticElement& b) {
  if (a.g_ != b.g_) throw DimensionError("symplectic degree mismatch");
  return SymplecticElement(checked_mul(a.m_, b.m_));
}

bool is_theta_element(const SymplecticElement& gamma) {
  const IntMatrix ac = checked_mul(gamma.A().transpose(), gamma.C());
  const IntMatrix bd = checked_mul(gamma.B().transpose(), gamma.D());
  for (std::size_t i = 0; i < gamma.g(); ++i)
    if (ac(i, i) % 2 != 0 || bd(i, i) % 2 != 0) return false;
  return true;
}

// --- Heisenberg group --------------------------------------------------------

HeisenbergElement::HeisenbergElement(IntMatrix lambda, IntMatrix mu, IntMatrix kappa)
    : lambda_(std::move(lambda)), mu_(std::move(mu)), kappa_(std::move(kappa)) {
  const std::size_t m = lambda_.rows(), g = lambda_.cols();
  if (m == 0 || g == 0 || mu_.rows() != m || mu_.cols() != g || kappa_.rows() != m ||
      kappa_.cols() != m)
    throw DimensionError("Heisenberg element needs lambda, mu in Z^(m,g) and kappa in Z^(m,m)");
  if (!is_symmetric(checked_add(kappa_, checked_mul(mu_, lambda_.transpose()))))
    throw ValidationError("kappa + mu tlambda is not symmetric");
}

HeisenbergElement HeisenbergElement::identity(std::size_t g, std::size_t m) {
  return HeisenbergElement(IntMatrix(m, g), IntMatrix(m, g), IntMatrix(m, m));
}

std::int64_t HeisenbergElement::twist_trace() const {
  return checked_add(kappa_, checked_mul(mu_, lambda_.transpose())).trace();
}

HeisenbergElement heisenberg_mul(const HeisenbergElement& x, const HeisenbergElement& y) {
  if (x.g() != y.g() || x.m() != y.m()) throw DimensionError("Heisenberg degree mismatch");
  IntMatrix kappa = checked_add(x.kappa(), y.kappa());
  kappa = checked_add(kappa, checked_mul(x.lambda(), y.mu().transpose()));
  kappa = checked_sub(kappa, checked_mul(x.mu(), y.lambda().transpose()));
  return HeisenbergElement(checked_add(x.lambda(), y.lambda()), checked_add(x.mu(), y.mu()),
                           std::move(kappa));
}

// --- Jacobi group ------------------------------------------------------------

JacobiGroupElement::JacobiGroupElement(SymplecticElement gamma_, HeisenbergElement h_)
    : gamma(std::move(gamma_)), h(std::move(h_)) {
  if (gamma.g() != h.g()) throw DimensionError("Jacobi element: degree of gamma and (l,mu;k) differ");
}

JacobiGroupElement JacobiGroupElement::identity(std::size_t g, std::size_t m) {
  return {SymplecticElement::identity(g), HeisenbergElement::identity(g, m)};
}

namespace {

// (lambda, mu) gamma as an m x 2g row pair, split back into halves.
std::pair<IntMatrix, IntMatrix> twist_by(const HeisenbergElement& h, const SymplecticElement& gamma) {
  const std::size_t g = h.g(), m = h.m();
  IntMatrix row(m, 2 * g);
  row.set_block(0, 0, h.lambda());
  row.set_block(0, g, h.mu());
  IntMatrix t = checked_mul(row, gamma.matrix());
  return {t.block(0, 0, m, g), t.block(0, g, m, g)};
}

}  // namespace

JacobiGroupElement jacobi_mul(const JacobiGroupElement& x, const JacobiGroupElement& y) {
  if (x.g() != y.g() || x.m() != y.m()) throw DimensionError("Jacobi degree mismatch");
  auto [lt, mt] = twist_by(x.h, y.gamma);
  IntMatrix kappa = checked_add(x.h.kappa(), y.h.kappa());
  kappa = checked_add(kappa, checked_mul(lt, y.h.mu().transpose()));
  kappa = checked_sub(kappa, checked_mul(mt, y.h.lambda().transpose()));
  return {x.gamma * y.gamma,
          HeisenbergElement(checked_add(lt, y.h.lambda()), checked_add(mt, y.h.mu()),
                            std::move(kappa))};
}

JacobiGroupElement jacobi_inverse(const JacobiGroupElement& x) {
  SymplecticElement ginv = x.gamma.inverse();
  auto [lt, mt] = twist_by(x.h, ginv);
  // kappa* = -kappa + l~ tmu~ - mu~ tl~
  IntMatrix kappa = neg(x.h.kappa());
  kappa = checked_add(kappa, checked_mul(lt, mt.transpose()));
  kappa = checked_sub(kappa, checked_mul(mt, lt.transpose()));
  return {std::move(ginv), HeisenbergElement(neg(lt), neg(mt), std::move(kappa))};
}

SiegelJacobiPoint act(const JacobiGroupElement& x, const SiegelJacobiPoint& p) {
  if (x.g() != p.g() || x.m() != p.m()) throw DimensionError("act: element and point shapes differ");
  const ComplexMatrix& om = p.omega();
  const ComplexMatrix A = to_complex(x.gamma.A()), B = to_complex(x.gamma.B());
  const ComplexMatrix C = to_complex(x.gamma.C()), D = to_complex(x.gamma.D());
  const ComplexMatrix cinv = inverse(C * om + D);
  ComplexMatrix om_new = (A * om + B) * cinv;
  for (std::size_t i = 0; i < om_new.rows(); ++i)
    for (std::size_t j = i + 1; j < om_new.cols(); ++j)
      om_new(i, j) = om_new(j, i) = 0.5 * (om_new(i, j) + om_new(j, i));
  ComplexMatrix z_new =
      (p.z() + to_complex(x.h.lambda()) * om + to_complex(x.h.mu())) * cinv;
  return SiegelJacobiPoint(std::move(om_new), std::move(z_new));
}

// --- generators --------------------------------------------------------------

IntMatrix unimodular_inverse(const IntMatrix& alpha) {
  if (!alpha.square()) throw DimensionError("alpha must be square");
  const RealMatrix a = to_real(alpha);
  const double d = det(a);
  if (std::abs(std::abs(d) - 1.0) > 1e-9) throw ValidationError("alpha is not unimodular");
  const RealMatrix inv = inverse(a);
  IntMatrix r(alpha.rows(), alpha.cols());
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) = std::llround(inv(i, j));
  if (checked_mul(alpha, r) != IntMatrix::identity(alpha.rows()))
    throw ValidationError("alpha is not unimodular");
  return r;
}

namespace {

struct GeneratorBuilder {
  std::size_t g, m;

  JacobiGroupElement operator()(const SLetter& s) const {
    return {SymplecticElement::identity(g), HeisenbergElement(s.lambda, s.mu, s.kappa)};
  }
  JacobiGroupElement operator()(const TLetter& t) const {
    if (t.b.rows() != g || !is_symmetric(t.b))
      throw ValidationError("T-letter needs a symmetric g x g integer matrix");
    for (std::size_t i = 0; i < g; ++i)
      if (t.b(i, i) % 2 != 0) throw ValidationError("T-letter matrix must have even diagonal");
    const IntMatrix I = IntMatrix::identity(g);
    return {SymplecticElement::from_blocks(I, t.b, IntMatrix(g, g), I),
            HeisenbergElement::identity(g, m)};
  }
  JacobiGroupElement operator()(const GLetter& a) const {
    if (a.alpha.rows() != g) throw DimensionError("G-letter alpha must be g x g");
    return {SymplecticElement::from_blocks(a.alpha.transpose(), IntMatrix(g, g), IntMatrix(g, g),
                                           unimodular_inverse(a.alpha)),
            HeisenbergElement::identity(g, m)};
  }
  JacobiGroupElement operator()(const SigmaLetter&) const {
    const IntMatrix I = IntMatrix::identity(g);
    return {SymplecticElement::from_blocks(IntMatrix(g, g), neg(I), I, IntMatrix(g, g)),
            HeisenbergElement::identity(g, m)};
  }
};

}  // namespace

JacobiGroupElement make_generator(const Letter& letter, std::size_t g, std::size_t m) {
  return std::visit(GeneratorBuilder{g, m}, letter);
}

JacobiGroupElement compose_word(const GeneratorWord& w, std::size_t g, std::size_t m) {
  JacobiGroupElement acc = JacobiGroupElement::identity(g, m);
  for (const auto& letter : w) acc = jacobi_mul(acc, make_generator(letter, g, m));
  return acc;
}

namespace {

IntMatrix random_int_matrix(Rng& rng, std::size_t r, std::size_t c) {
  IntMatrix a(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) a(i, j) = rng.uniform_int(-2, 2);
  return a;
}

IntMatrix random_symmetric(Rng& rng, std::size_t n, bool even_diagonal) {
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = even_diagonal ? 2 * rng.uniform_int(-1, 1) : rng.uniform_int(-2, 2);
    for (std::size_t j = i + 1; j < n; ++j) a(i, j) = a(j, i) = rng.uniform_int(-2, 2);
  }
  return a;
}

// Product of 1..3 elementary moves: row swap, sign flip, or a +-1 shear.
IntMatrix random_unimodular(Rng& rng, std::size_t g) {
  IntMatrix a = IntMatrix::identity(g);
  const auto moves = rng.uniform_int(1, 3);
  for (std::int64_t k = 0; k < moves; ++k) {
    IntMatrix e = IntMatrix::identity(g);
    const auto kind = g == 1 ? 1 : rng.uniform_int(0, 2);
    if (kind == 1) {
      const auto i = static_cast<std::size_t>(rng.uniform_int(0, g - 1));
      e(i, i) = -1;
    } else {
      const auto i = static_cast<std::size_t>(rng.uniform_int(0, g - 1));
      auto j = static_cast<std::size_t>(rng.uniform_int(0, g - 2));
      if (j >= i) ++j;
      if (kind == 0) {
        e(i, i) = e(j, j) = 0;
        e(i, j) = e(j, i) = 1;
      } else {
        e(i, j) = rng.uniform_int(0, 1) ? 1 : -1;
      }
    }
    a = checked_mul(a, e);
  }
  return a;
}

}  // namespace

GeneratorWord random_theta_word(std::size_t g, std::size_t m, std::size_t length,
                                std::uint64_t seed) {
  if (length > 64) throw DomainError("random_theta_word: length is capped at 64");
  Rng rng(seed);
  GeneratorWord w;
  w.reserve(length);
  for (std::size_t k = 0; k < length; ++k) {
    switch (rng.uniform_int(0, 3)) {
      case 0: {
        IntMatrix lambda = random_int_matrix(rng, m, g);
        IntMatrix mu = random_int_matrix(rng, m, g);
        IntMatrix sym = random_symmetric(rng, m, false);
        IntMatrix kappa = checked_sub(sym, checked_mul(mu, lambda.transpose()));
        w.emplace_back(SLetter{std::move(lambda), std::move(mu), std::move(kappa)});
        break;
      }
      case 1:
        w.emplace_back(TLetter{random_symmetric(rng, g, true)});
        break;
      case 2:
        w.emplace_back(GLetter{random_unimodular(rng, g)});
        break;
      default:
        w.emplace_back(SigmaLetter{});
    }
  }
  return w;
}

}  // namespace sjtheta
