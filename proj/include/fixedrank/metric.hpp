#pragma once

#include "fixedrank/ambient.hpp"
#include "fixedrank/point.hpp"

namespace fixedrank {

// The five weights of the ambient metric
//   g[w] = [alpha0 w_U + (alpha1-alpha0) U U^t w_U,
//           beta P^-1 w_P P^-1,
//           gamma0 w_V + (gamma1-gamma0) V V^t w_V].
// All ones recovers the constant-Stiefel-metric special case.
struct MetricParams {
  double alpha0 = 1.0;
  double alpha1 = 1.0;
  double beta = 1.0;
  double gamma0 = 1.0;
  double gamma1 = 1.0;

  double delta() const { return alpha1 + gamma1; }

  void validate() const {
    if (!(alpha0 > 0.0 && alpha1 > 0.0 && beta > 0.0 && gamma0 > 0.0 && gamma1 > 0.0))
      throw std::invalid_argument("metric: all weights must be positive");
  }

  static MetricParams ones() { return {}; }
};

template <class Scalar>
AmbientVector<Scalar> metric_apply(const Point<Scalar>& y, const AmbientVector<Scalar>& w,
                                   const MetricParams& mp) {
  return {mp.alpha0 * w.u + (mp.alpha1 - mp.alpha0) * (y.u() * (y.u().adjoint() * w.u).eval()),
          mp.beta * (y.p_inverse() * w.p * y.p_inverse()).eval(),
          mp.gamma0 * w.v + (mp.gamma1 - mp.gamma0) * (y.v() * (y.v().adjoint() * w.v).eval())};
}

template <class Scalar>
AmbientVector<Scalar> metric_inverse_apply(const Point<Scalar>& y, const AmbientVector<Scalar>& w,
                                           const MetricParams& mp) {
  const double ia0 = 1.0 / mp.alpha0, ia1 = 1.0 / mp.alpha1;
  const double ig0 = 1.0 / mp.gamma0, ig1 = 1.0 / mp.gamma1;
  return {ia0 * w.u + (ia1 - ia0) * (y.u() * (y.u().adjoint() * w.u).eval()),
          (y.p() * w.p * y.p()).eval() / mp.beta,
          ig0 * w.v + (ig1 - ig0) * (y.v() * (y.v().adjoint() * w.v).eval())};
}

// Riemannian pairing <a, g b> in the flat ambient inner product.
template <class Scalar>
double metric_inner(const Point<Scalar>& y, const AmbientVector<Scalar>& a,
                    const AmbientVector<Scalar>& b, const MetricParams& mp) {
  return ambient_inner(a, metric_apply(y, b, mp));
}

template <class Scalar>
double metric_norm(const Point<Scalar>& y, const AmbientVector<Scalar>& a,
                   const MetricParams& mp) {
  return std::sqrt(std::max(0.0, metric_inner(y, a, a, mp)));
}

// Directional derivative (D_xi g) w of the metric operator along a tangent
// direction xi, with w held fixed.
template <class Scalar>
AmbientVector<Scalar> metric_deriv(const Point<Scalar>& y, const AmbientVector<Scalar>& xi,
                                   const AmbientVector<Scalar>& w, const MetricParams& mp) {
  const Matrix<Scalar>& pi = y.p_inverse();
  Matrix<Scalar> left = (pi * xi.p * pi * w.p * pi).eval();
  Matrix<Scalar> right = (pi * w.p * pi * xi.p * pi).eval();
  return {(mp.alpha1 - mp.alpha0) *
              (xi.u * (y.u().adjoint() * w.u).eval() + y.u() * (xi.u.adjoint() * w.u).eval()),
          -mp.beta * (left + right),
          (mp.gamma1 - mp.gamma0) *
              (xi.v * (y.v().adjoint() * w.v).eval() + y.v() * (xi.v.adjoint() * w.v).eval())};
}

}  // namespace fixedrank
