// Integer arithmetic for Sp(2g,Z), the integral Heisenberg group and the
// Jacobi modular group Sp(2g,Z) x| H_Z^(g,m), with the holomorphic action
// on the Siegel-Jacobi space.
//
// All products are overflow-checked; exceeding int64 throws OverflowError.

#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "sjtheta/linalg.hpp"
#include "sjtheta/point.hpp"

namespace sjtheta {

/// J_g = [[0, I], [-I, 0]].
IntMatrix symplectic_form(std::size_t g);

/// Exact test of tM J_g M = J_g.
bool is_symplectic(const IntMatrix& M);

IntMatrix checked_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix checked_add(const IntMatrix& a, const IntMatrix& b);
IntMatrix checked_sub(const IntMatrix& a, const IntMatrix& b);

class SymplecticElement {
 public:
  explicit SymplecticElement(IntMatrix m);
  static SymplecticElement identity(std::size_t g);
  static SymplecticElement from_blocks(const IntMatrix& A, const IntMatrix& B,
                                       const IntMatrix& C, const IntMatrix& D);

  std::size_t g() const { return g_; }
  const IntMatrix& matrix() const { return m_; }
  IntMatrix A() const { return m_.block(0, 0, g_, g_); }
  IntMatrix B() const { return m_.block(0, g_, g_, g_); }
  IntMatrix C() const { return m_.block(g_, 0, g_, g_); }
  IntMatrix D() const { return m_.block(g_, g_, g_, g_); }

  /// J^{-1} tM J = [[tD, -tB], [-tC, tA]].
  SymplecticElement inverse() const;

  friend SymplecticElement operator*(const SymplecticElement& a, const SymplecticElement& b);
  friend bool operator==(const SymplecticElement& a, const SymplecticElement& b) {
    return a.m_ == b.m_;
  }

 private:
  std::size_t g_;
  IntMatrix m_;
};

/// Diagonals of tA C and tB D both even.
bool is_theta_element(const SymplecticElement& gamma);

/// (lambda, mu; kappa) with lambda, mu in Z^(m,g), kappa in Z^(m,m) and
/// kappa + mu tlambda symmetric.
class HeisenbergElement {
 public:
  HeisenbergElement(IntMatrix lambda, IntMatrix mu, IntMatrix kappa);
  static HeisenbergElement identity(std::size_t g, std::size_t m);

  std::size_t g() const { return lambda_.cols(); }
  std::size_t m() const { return lambda_.rows(); }
  const IntMatrix& lambda() const { return lambda_; }
  const IntMatrix& mu() const { return mu_; }
  const IntMatrix& kappa() const { return kappa_; }

  /// trace(kappa + mu tlambda); e^{-pi i} of it is the sign carried by J.
  std::int64_t twist_trace() const;

  friend bool operator==(const HeisenbergElement& a, const HeisenbergElement& b) {
    return a.lambda_ == b.lambda_ && a.mu_ == b.mu_ && a.kappa_ == b.kappa_;
  }

 private:
  IntMatrix lambda_, mu_, kappa_;
};

HeisenbergElement heisenberg_mul(const HeisenbergElement& x, const HeisenbergElement& y);

struct JacobiGroupElement {
  JacobiGroupElement(SymplecticElement gamma_, HeisenbergElement h_);
  static JacobiGroupElement identity(std::size_t g, std::size_t m);

  std::size_t g() const { return gamma.g(); }
  std::size_t m() const { return h.m(); }

  SymplecticElement gamma;
  HeisenbergElement h;

  friend bool operator==(const JacobiGroupElement& a, const JacobiGroupElement& b) {
    return a.gamma == b.gamma && a.h == b.h;
  }
};

/// (g, (l,mu;k)) . (g', (l',mu';k')) = (g g', (l~ + l', mu~ + mu';
/// k + k' + l~ tmu' - mu~ tl')) with (l~, mu~) = (l, mu) g'.
JacobiGroupElement jacobi_mul(const JacobiGroupElement& x, const JacobiGroupElement& y);
JacobiGroupElement jacobi_inverse(const JacobiGroupElement& x);

/// ((A Om + B)(C Om + D)^{-1}, (Z + l Om + mu)(C Om + D)^{-1}).
SiegelJacobiPoint act(const JacobiGroupElement& x, const SiegelJacobiPoint& p);

// Generators of the theta subgroup of the Jacobi modular group.
struct SLetter {
  IntMatrix lambda, mu, kappa;
};
/// Translation by a symmetric integer B with even diagonal.
struct TLetter {
  IntMatrix b;
};
/// diag(t alpha, alpha^{-1}) for alpha in GL(g, Z).
struct GLetter {
  IntMatrix alpha;
};
struct SigmaLetter {};

using Letter = std::variant<SLetter, TLetter, GLetter, SigmaLetter>;
using GeneratorWord = std::vector<Letter>;

/// Exact inverse of a unimodular integer matrix; throws ValidationError when
/// det != +-1.
IntMatrix unimodular_inverse(const IntMatrix& alpha);

JacobiGroupElement make_generator(const Letter& letter, std::size_t g, std::size_t m);

/// Left-to-right product of the letters; the empty word is the identity.
JacobiGroupElement compose_word(const GeneratorWord& w, std::size_t g, std::size_t m);

/// Deterministic random word: kinds uniform, parameters in [-2, 2], T
/// diagonals even, alpha a product of elementary unimodular moves.
GeneratorWord random_theta_word(std::size_t g, std::size_t m, std::size_t length,
                                std::uint64_t seed);

}  // namespace sjtheta
