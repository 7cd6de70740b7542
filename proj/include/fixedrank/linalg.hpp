#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace fixedrank {

using Index = Eigen::Index;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RealVector = Eigen::VectorXd;
using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<std::complex<double>>;

template <class Scalar>
inline constexpr bool is_complex_field = Eigen::NumTraits<Scalar>::IsComplex != 0;

namespace detail {

inline void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

// Re tr(a^t b) where ^t is the field transpose; the real inner product used
// throughout, so complex manifolds are treated as real Riemannian manifolds.
template <class Scalar>
double re_dot(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  return std::real(Scalar(a.conjugate().cwiseProduct(b).sum()));
}

}  // namespace detail

// t-transpose: plain transpose over the reals, conjugate transpose over the
// complex numbers.
template <class Scalar>
Matrix<Scalar> ttranspose(const Matrix<Scalar>& a) {
  return a.adjoint();
}

template <class Scalar>
Matrix<Scalar> sym(const Matrix<Scalar>& a) {
  detail::require(a.rows() == a.cols(), "sym: input must be square");
  return 0.5 * (a + a.adjoint()).eval();
}

template <class Scalar>
Matrix<Scalar> asym(const Matrix<Scalar>& a) {
  detail::require(a.rows() == a.cols(), "asym: input must be square");
  return 0.5 * (a - a.adjoint()).eval();
}

// Eigenvalue decomposition of a t-symmetric matrix: P = C diag(values) C^t
// with C t-orthogonal and real eigenvalues sorted in descending order.
template <class Scalar>
struct TsymEigen {
  Matrix<Scalar> vectors;
  RealVector values;

  Matrix<Scalar> reconstruct() const {
    return vectors * values.asDiagonal() * vectors.adjoint();
  }

  // C f(diag) C^t for a real scalar function f applied to the eigenvalues.
  template <class F>
  Matrix<Scalar> map_values(F&& f) const {
    RealVector mapped = values.unaryExpr(std::forward<F>(f));
    return vectors * mapped.asDiagonal() * vectors.adjoint();
  }
};

template <class Scalar>
TsymEigen<Scalar> eig_tsym(const Matrix<Scalar>& p, double symmetry_tol = 1e-8) {
  detail::require(p.rows() == p.cols(), "eig_tsym: input must be square");
  const double scale = std::max(1.0, p.norm());
  if ((p - p.adjoint()).norm() > symmetry_tol * scale)
    throw std::invalid_argument("eig_tsym: input is not t-symmetric");
  // Symmetrize before factoring so downstream formulas see an exactly
  // t-symmetric operator even when the input carries roundoff.
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver(sym(p));
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eig_tsym: eigenvalue iteration failed");
  const Index n = p.rows();
  TsymEigen<Scalar> out;
  out.vectors.resize(n, n);
  out.values.resize(n);
  for (Index i = 0; i < n; ++i) {
    out.vectors.col(i) = solver.eigenvectors().col(n - 1 - i);
    out.values[i] = solver.eigenvalues()[n - 1 - i];
  }
  return out;
}

enum class SpdFun { Sqrt, InvSqrt, Inverse, Exp, Log };

namespace detail {

inline bool positive_definite(const RealVector& values, double rel_tol) {
  if (values.size() == 0) return true;
  const double largest = values.maxCoeff();
  return largest > 0.0 && values.minCoeff() > rel_tol * largest;
}

}  // namespace detail

// Matrix function of a t-symmetric matrix, applied through the eigenbasis.
// Sqrt/InvSqrt/Inverse/Log require positive definiteness; Exp accepts any
// t-symmetric input.
template <class Scalar>
Matrix<Scalar> spd_fun(const Matrix<Scalar>& p, SpdFun fn, double pd_rel_tol = 1e-12) {
  TsymEigen<Scalar> eig = eig_tsym(p);
  if (fn != SpdFun::Exp && !detail::positive_definite(eig.values, pd_rel_tol))
    throw std::domain_error("spd_fun: matrix is not positive definite");
  Matrix<Scalar> out;
  switch (fn) {
    case SpdFun::Sqrt:
      out = eig.map_values([](double x) { return std::sqrt(x); });
      break;
    case SpdFun::InvSqrt:
      out = eig.map_values([](double x) { return 1.0 / std::sqrt(x); });
      break;
    case SpdFun::Inverse:
      out = eig.map_values([](double x) { return 1.0 / x; });
      break;
    case SpdFun::Exp:
      out = eig.map_values([](double x) { return std::exp(x); });
      break;
    case SpdFun::Log:
      out = eig.map_values([](double x) { return std::log(x); });
      break;
  }
  return sym(out);
}

// Orthonormal basis of the orthogonal complement of span(u), as the trailing
// columns of a full QR factor. Returns an m x 0 matrix when u is square.
template <class Scalar>
Matrix<Scalar> complement_basis(const Matrix<Scalar>& u, double orthonormal_tol = 1e-8) {
  const Index m = u.rows(), p = u.cols();
  detail::require(p <= m, "complement_basis: more columns than rows");
  Matrix<Scalar> gram = u.adjoint() * u;
  if ((gram - Matrix<Scalar>::Identity(p, p)).norm() > orthonormal_tol)
    throw std::invalid_argument("complement_basis: columns are not orthonormal");
  Eigen::HouseholderQR<Matrix<Scalar>> qr(u);
  Matrix<Scalar> q = qr.householderQ();
  return q.rightCols(m - p);
}

// Orthogonal polar factor of a full-column-rank matrix.
template <class Scalar>
Matrix<Scalar> polar_factor(const Matrix<Scalar>& a) {
  Eigen::JacobiSVD<Matrix<Scalar>> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

// Seeded generator for all randomized inputs. No global state: every routine
// that draws randomness takes one of these (or a seed) explicitly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }  // [0, 1)
  std::uint64_t integer() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

// Iid standard Gaussian entries; complex entries get independent Gaussian
// real and imaginary parts.
template <class Scalar>
Matrix<Scalar> rand_matrix(Index rows, Index cols, Rng& rng) {
  Matrix<Scalar> out(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) {
      if constexpr (is_complex_field<Scalar>)
        out(i, j) = Scalar(rng.normal(), rng.normal());
      else
        out(i, j) = rng.normal();
    }
  return out;
}

template <class Scalar>
Matrix<Scalar> rand_stiefel(Index m, Index p, Rng& rng) {
  detail::require(p <= m, "rand_stiefel: p must not exceed m");
  return polar_factor(rand_matrix<Scalar>(m, p, rng));
}

template <class Scalar>
Matrix<Scalar> rand_stiefel(Index m, Index p, std::uint64_t seed) {
  Rng rng(seed);
  return rand_stiefel<Scalar>(m, p, rng);
}

// Random positive definite matrix with eigenvalues in [1/e, e], so the
// condition number stays moderate across test draws.
template <class Scalar>
Matrix<Scalar> rand_spd(Index p, Rng& rng) {
  Matrix<Scalar> basis = rand_stiefel<Scalar>(p, p, rng);
  RealVector values(p);
  for (Index i = 0; i < p; ++i) values[i] = std::exp(2.0 * rng.uniform() - 1.0);
  return sym((basis * values.asDiagonal() * basis.adjoint()).eval());
}

template <class Scalar>
Matrix<Scalar> rand_spd(Index p, std::uint64_t seed) {
  Rng rng(seed);
  return rand_spd<Scalar>(p, rng);
}

}  // namespace fixedrank
