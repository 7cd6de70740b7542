#pragma once

#include "fixedrank/ambient.hpp"
#include "fixedrank/linalg.hpp"
#include "fixedrank/lyapunov.hpp"

#include <utility>

namespace fixedrank {

// A representative (U, P, V) of an equivalence class on the product of two
// Stiefel manifolds with the positive definite cone; the represented
// fixed-rank matrix is U P V^t. Complement bases and the eigendecomposition
// of P are computed once at construction and shared by every geometric
// operation. Immutable after construction, safe to use concurrently.
template <class Scalar>
class Point {
 public:
  Point(Matrix<Scalar> left, Matrix<Scalar> middle, Matrix<Scalar> right,
        double feasibility_tol = 1e-8)
      : u_(std::move(left)), p_(std::move(middle)), v_(std::move(right)) {
    const Index m = u_.rows(), n = v_.rows(), r = u_.cols();
    detail::require(r >= 1, "point: rank must be positive");
    detail::require(p_.rows() == r && p_.cols() == r && v_.cols() == r,
                    "point: inconsistent factor shapes");
    detail::require(r <= m && r <= n, "point: rank exceeds a dimension");
    const Matrix<Scalar> id = Matrix<Scalar>::Identity(r, r);
    if ((u_.adjoint() * u_ - id).norm() > feasibility_tol)
      throw std::invalid_argument("point: left factor is not orthonormal");
    if ((v_.adjoint() * v_ - id).norm() > feasibility_tol)
      throw std::invalid_argument("point: right factor is not orthonormal");
    if ((p_ - p_.adjoint()).norm() > feasibility_tol * std::max(1.0, p_.norm()))
      throw std::invalid_argument("point: middle factor is not t-symmetric");
    p_ = sym(p_);
    p_eigen_ = eig_tsym(p_);
    if (!detail::positive_definite(p_eigen_.values, 1e-12))
      throw std::invalid_argument("point: middle factor is not positive definite");
    p_inverse_ = sym(p_eigen_.map_values([](double x) { return 1.0 / x; }));
    u_complement_ = complement_basis(u_, 10.0 * feasibility_tol);
    v_complement_ = complement_basis(v_, 10.0 * feasibility_tol);
  }

  Index rows() const { return u_.rows(); }
  Index cols() const { return v_.rows(); }
  Index rank() const { return u_.cols(); }

  const Matrix<Scalar>& u() const { return u_; }
  const Matrix<Scalar>& p() const { return p_; }
  const Matrix<Scalar>& v() const { return v_; }
  const Matrix<Scalar>& u_complement() const { return u_complement_; }
  const Matrix<Scalar>& v_complement() const { return v_complement_; }
  const TsymEigen<Scalar>& p_eigen() const { return p_eigen_; }
  const Matrix<Scalar>& p_inverse() const { return p_inverse_; }

  LyapunovContext<Scalar> lyapunov(double beta, double delta) const {
    return make_lyapunov_context(p_eigen_, beta, delta);
  }

  AmbientVector<Scalar> coords() const { return {u_, p_, v_}; }

 private:
  Matrix<Scalar> u_, p_, v_;
  Matrix<Scalar> u_complement_, v_complement_;
  TsymEigen<Scalar> p_eigen_;
  Matrix<Scalar> p_inverse_;
};

template <class Scalar>
Point<Scalar> random_point(Index m, Index n, Index rank, Rng& rng) {
  Matrix<Scalar> u = rand_stiefel<Scalar>(m, rank, rng);
  Matrix<Scalar> p = rand_spd<Scalar>(rank, rng);
  Matrix<Scalar> v = rand_stiefel<Scalar>(n, rank, rng);
  return Point<Scalar>(std::move(u), std::move(p), std::move(v));
}

template <class Scalar>
Point<Scalar> random_point(Index m, Index n, Index rank, std::uint64_t seed) {
  Rng rng(seed);
  return random_point<Scalar>(m, n, rank, rng);
}

}  // namespace fixedrank
