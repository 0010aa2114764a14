#include "sjtheta/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sjtheta {

cplx principal_half_power(cplx z, int k) {
  if (z == cplx(0.0, 0.0)) {
    if (k < 0) throw DomainError("principal_half_power: zero to a negative power");
    return k == 0 ? cplx(1.0) : cplx(0.0);
  }
  // std::sqrt puts -x - 0i on the lower side of the cut; normalize so that
  // arg(sqrt z) = pi/2 on the whole negative real axis.
  if (z.imag() == 0.0) z = cplx(z.real(), 0.0);
  cplx w = std::sqrt(z);
  cplx result(1.0);
  int n = k < 0 ? -k : k;
  cplx base = w;
  while (n) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return k < 0 ? cplx(1.0) / result : result;
}

namespace {

template <class T>
struct LU {
  Matrix<T> lu;
  std::vector<std::size_t> perm;
  int sign = 1;
  double min_pivot = 0.0;
};

template <class T>
LU<T> lu_decompose(const Matrix<T>& M) {
  if (!M.square()) throw DimensionError("LU of non-square " + M.shape());
  const std::size_t n = M.rows();
  LU<T> f{M, std::vector<std::size_t>(n), 1, INFINITY};
  std::iota(f.perm.begin(), f.perm.end(), 0);
  auto& a = f.lu;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > best) best = std::abs(a(i, k)), p = i;
    f.min_pivot = std::min(f.min_pivot, best);
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      std::swap(f.perm[k], f.perm[p]);
      f.sign = -f.sign;
    }
    if (best == 0.0) continue;
    for (std::size_t i = k + 1; i < n; ++i) {
      T l = a(i, k) / a(k, k);
      a(i, k) = l;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= l * a(k, j);
    }
  }
  if (n == 0) f.min_pivot = 0.0;
  return f;
}

template <class T>
T det_impl(const Matrix<T>& M) {
  if (M.rows() == 0 && M.square()) return T{1};
  auto f = lu_decompose(M);
  T d = static_cast<T>(f.sign);
  for (std::size_t i = 0; i < M.rows(); ++i) d *= f.lu(i, i);
  return d;
}

template <class T>
Matrix<T> inverse_impl(const Matrix<T>& M) {
  auto f = lu_decompose(M);
  const std::size_t n = M.rows();
  double row_norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += std::norm(cplx(M(i, j)));
    row_norm = std::max(row_norm, std::sqrt(s));
  }
  T d = static_cast<T>(f.sign);
  for (std::size_t i = 0; i < n; ++i) d *= f.lu(i, i);
  if (!(std::abs(d) > 1e-12 * std::pow(row_norm, static_cast<double>(n))))
    throw SingularMatrixError("matrix is numerically singular (smallest pivot " +
                                  std::to_string(f.min_pivot) + ")",
                              f.min_pivot);

  Matrix<T> inv(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<T> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = f.perm[i] == col ? T{1} : T{0};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) x[i] -= f.lu(i, j) * x[j];
    for (std::size_t i = n; i-- > 0;) {
      for (std::size_t j = i + 1; j < n; ++j) x[i] -= f.lu(i, j) * x[j];
      x[i] /= f.lu(i, i);
    }
    for (std::size_t i = 0; i < n; ++i) inv(i, col) = x[i];
  }
  return inv;
}

}  // namespace

cplx det(const ComplexMatrix& M) { return det_impl(M); }
double det(const RealMatrix& M) { return det_impl(M); }
ComplexMatrix inverse(const ComplexMatrix& M) { return inverse_impl(M); }
RealMatrix inverse(const RealMatrix& M) { return inverse_impl(M); }

std::vector<double> eigenvalues_sym(const RealMatrix& Y) {
  if (!Y.square()) throw DimensionError("eigenvalues of non-square " + Y.shape());
  const std::size_t n = Y.rows();
  RealMatrix a = Y;
  double scale = 0.0;
  for (double x : a.data()) scale = std::max(scale, std::abs(x));
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
    if (std::sqrt(off) <= 1e-15 * scale) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

double min_eigenvalue_sym(const RealMatrix& Y) {
  if (!is_symmetric(Y)) throw ValidationError("min_eigenvalue_sym: matrix not symmetric");
  auto ev = eigenvalues_sym(Y);
  if (ev.empty()) throw DimensionError("min_eigenvalue_sym: empty matrix");
  return ev.front();
}

RealMatrix real_part(const ComplexMatrix& M) {
  RealMatrix r(M.rows(), M.cols());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) r(i, j) = M(i, j).real();
  return r;
}

RealMatrix imag_part(const ComplexMatrix& M) {
  RealMatrix r(M.rows(), M.cols());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) r(i, j) = M(i, j).imag();
  return r;
}

ComplexMatrix to_complex(const RealMatrix& M) {
  ComplexMatrix c(M.rows(), M.cols());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) c(i, j) = M(i, j);
  return c;
}

ComplexMatrix to_complex(const IntMatrix& M) {
  ComplexMatrix c(M.rows(), M.cols());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) c(i, j) = static_cast<double>(M(i, j));
  return c;
}

RealMatrix to_real(const IntMatrix& M) {
  RealMatrix r(M.rows(), M.cols());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) r(i, j) = static_cast<double>(M(i, j));
  return r;
}

bool all_finite(const ComplexMatrix& M) {
  return std::all_of(M.data().begin(), M.data().end(), [](cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

bool is_symmetric(const RealMatrix& M) {
  if (!M.square()) return false;
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = i + 1; j < M.cols(); ++j)
      if (M(i, j) != M(j, i)) return false;
  return true;
}

bool is_symmetric(const IntMatrix& M) {
  if (!M.square()) return false;
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = i + 1; j < M.cols(); ++j)
      if (M(i, j) != M(j, i)) return false;
  return true;
}

double frobenius_norm(const RealMatrix& M) {
  double s = 0.0;
  for (double x : M.data()) s += x * x;
  return std::sqrt(s);
}

double frobenius_norm(const ComplexMatrix& M) {
  double s = 0.0;
  for (cplx x : M.data()) s += std::norm(x);
  return std::sqrt(s);
}

double max_abs(const ComplexMatrix& M) {
  double s = 0.0;
  for (cplx x : M.data()) s = std::max(s, std::abs(x));
  return s;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("max_abs_diff: shape mismatch");
  double s = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k)
    s = std::max(s, std::abs(a.data()[k] - b.data()[k]));
  return s;
}

}  // namespace sjtheta
