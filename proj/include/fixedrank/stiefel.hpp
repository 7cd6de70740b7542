#pragma once

#include "fixedrank/linalg.hpp"

namespace fixedrank {

// Projection onto the tangent space of the Stiefel manifold at u. This is the
// orthogonal projection for every metric of the family
//   <w, w> = alpha0 tr(w^t w) + (alpha1 - alpha0) tr(w^t u u^t w),
// since the normal directions u*S (S t-symmetric) are eigenvectors of the
// metric operator.
template <class Scalar>
Matrix<Scalar> stiefel_tangent_project(const Matrix<Scalar>& u, const Matrix<Scalar>& w) {
  detail::require(u.rows() == w.rows() && u.cols() == w.cols(),
                  "stiefel_tangent_project: shape mismatch");
  return w - u * sym((u.adjoint() * w).eval());
}

struct StiefelGeodesicOptions {
  double rel_tol = 1e-12;          // local error control of the integrator
  double abs_tol = 1e-12;
  double feasibility_tol = 1e-10;  // polar re-orthonormalization trigger
  double tangency_tol = 1e-8;      // relative, on the initial velocity
  int max_steps = 1000000;
};

namespace detail {

template <class Scalar>
struct StiefelOdeState {
  Matrix<Scalar> x;  // position on the manifold
  Matrix<Scalar> w;  // velocity

  StiefelOdeState& axpy(double a, const StiefelOdeState& o) {
    x += a * o.x;
    w += a * o.w;
    return *this;
  }

  double norm() const { return std::sqrt(x.squaredNorm() + w.squaredNorm()); }
};

// Geodesic equation of the alpha0/alpha1 metric in second-order form:
//   x'' = -2 kappa (w b - x b^2) - x (w^t w),   b = x^t w,
// with kappa = (alpha1 - alpha0)/alpha0. For alpha0 = alpha1 this reduces to
// the embedded-metric equation x'' = -x (w^t w).
template <class Scalar>
StiefelOdeState<Scalar> stiefel_ode_rhs(const StiefelOdeState<Scalar>& s, double kappa) {
  Matrix<Scalar> b = s.x.adjoint() * s.w;
  Matrix<Scalar> accel =
      -2.0 * kappa * (s.w * b - s.x * (b * b).eval()) - s.x * (s.w.adjoint() * s.w).eval();
  return {s.w, std::move(accel)};
}

}  // namespace detail

// Stiefel geodesic of the alpha0/alpha1 metric family, by adaptive
// Dormand-Prince 5(4) integration of the geodesic equation. Supports both
// directions of time; re-orthonormalizes through the polar factor whenever
// the feasibility residual drifts past the configured threshold.
template <class Scalar>
Matrix<Scalar> stiefel_geodesic(const Matrix<Scalar>& u, const Matrix<Scalar>& eta, double t,
                                double alpha0, double alpha1,
                                const StiefelGeodesicOptions& opt = {}) {
  detail::require(alpha0 > 0.0 && alpha1 > 0.0,
                  "stiefel_geodesic: metric weights must be positive");
  detail::require(u.rows() == eta.rows() && u.cols() == eta.cols(),
                  "stiefel_geodesic: shape mismatch");
  const double speed = eta.norm();
  if (t == 0.0 || speed == 0.0) return u;
  if (sym((u.adjoint() * eta).eval()).norm() > opt.tangency_tol * speed)
    throw std::invalid_argument("stiefel_geodesic: velocity is not tangent");

  const double kappa = (alpha1 - alpha0) / alpha0;
  using State = detail::StiefelOdeState<Scalar>;
  State y{u, eta};

  // Dormand-Prince coefficients.
  static const double a2[] = {1.0 / 5};
  static const double a3[] = {3.0 / 40, 9.0 / 40};
  static const double a4[] = {44.0 / 45, -56.0 / 15, 32.0 / 9};
  static const double a5[] = {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729};
  static const double a6[] = {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176,
                              -5103.0 / 18656};
  static const double b5[] = {35.0 / 384,     0.0, 500.0 / 1113, 125.0 / 192,
                              -2187.0 / 6784, 11.0 / 84};
  static const double b4[] = {5179.0 / 57600,    0.0,          7571.0 / 16695, 393.0 / 640,
                              -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

  const double dir = t > 0.0 ? 1.0 : -1.0;
  const double span = std::abs(t);
  double tau = 0.0;
  double h = std::min(span, 0.1 / std::max(1.0, speed));
  int steps = 0;

  while (tau < span) {
    if (++steps > opt.max_steps)
      throw std::runtime_error("stiefel_geodesic: step limit exceeded");
    h = std::min(h, span - tau);
    const double hs = dir * h;

    State k1 = detail::stiefel_ode_rhs(y, kappa);
    State s2 = y;
    s2.axpy(hs * a2[0], k1);
    State k2 = detail::stiefel_ode_rhs(s2, kappa);
    State s3 = y;
    s3.axpy(hs * a3[0], k1).axpy(hs * a3[1], k2);
    State k3 = detail::stiefel_ode_rhs(s3, kappa);
    State s4 = y;
    s4.axpy(hs * a4[0], k1).axpy(hs * a4[1], k2).axpy(hs * a4[2], k3);
    State k4 = detail::stiefel_ode_rhs(s4, kappa);
    State s5 = y;
    s5.axpy(hs * a5[0], k1).axpy(hs * a5[1], k2).axpy(hs * a5[2], k3).axpy(hs * a5[3], k4);
    State k5 = detail::stiefel_ode_rhs(s5, kappa);
    State s6 = y;
    s6.axpy(hs * a6[0], k1)
        .axpy(hs * a6[1], k2)
        .axpy(hs * a6[2], k3)
        .axpy(hs * a6[3], k4)
        .axpy(hs * a6[4], k5);
    State k6 = detail::stiefel_ode_rhs(s6, kappa);

    State y5 = y;
    y5.axpy(hs * b5[0], k1)
        .axpy(hs * b5[2], k3)
        .axpy(hs * b5[3], k4)
        .axpy(hs * b5[4], k5)
        .axpy(hs * b5[5], k6);
    State k7 = detail::stiefel_ode_rhs(y5, kappa);

    State y4 = y;
    y4.axpy(hs * b4[0], k1)
        .axpy(hs * b4[2], k3)
        .axpy(hs * b4[3], k4)
        .axpy(hs * b4[4], k5)
        .axpy(hs * b4[5], k6)
        .axpy(hs * b4[6], k7);

    State diff = y5;
    diff.axpy(-1.0, y4);
    const double scale = opt.abs_tol + opt.rel_tol * std::max(y.norm(), y5.norm());
    const double err = diff.norm() / scale;

    if (err <= 1.0) {
      y = std::move(y5);
      tau += h;
      Matrix<Scalar> gram = y.x.adjoint() * y.x;
      if ((gram - Matrix<Scalar>::Identity(u.cols(), u.cols())).norm() > opt.feasibility_tol) {
        y.x = polar_factor(y.x);
        y.w = stiefel_tangent_project(y.x, y.w);
      }
    }
    const double factor = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
    h *= std::min(5.0, std::max(0.2, factor));
  }
  return y.x;
}

}  // namespace fixedrank
