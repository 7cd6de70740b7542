#pragma once

#include "fixedrank/linalg.hpp"

namespace fixedrank {

// A triple in the ambient product space K^{m x p} + K^{p x p} + K^{n x p}.
// The same value type serves as an off-manifold evaluation point and as a
// direction (arbitrary, tangent, or horizontal) attached to a point; the
// refinements differ only by which residuals vanish.
template <class Scalar>
struct AmbientVector {
  Matrix<Scalar> u;
  Matrix<Scalar> p;
  Matrix<Scalar> v;

  static AmbientVector zero(Index m, Index n, Index rank) {
    return {Matrix<Scalar>::Zero(m, rank), Matrix<Scalar>::Zero(rank, rank),
            Matrix<Scalar>::Zero(n, rank)};
  }

  double norm() const {
    return std::sqrt(u.squaredNorm() + p.squaredNorm() + v.squaredNorm());
  }

  AmbientVector& operator+=(const AmbientVector& o) {
    u += o.u;
    p += o.p;
    v += o.v;
    return *this;
  }

  AmbientVector& operator-=(const AmbientVector& o) {
    u -= o.u;
    p -= o.p;
    v -= o.v;
    return *this;
  }

  AmbientVector& operator*=(double s) {
    u *= s;
    p *= s;
    v *= s;
    return *this;
  }
};

template <class Scalar>
AmbientVector<Scalar> operator+(AmbientVector<Scalar> a, const AmbientVector<Scalar>& b) {
  a += b;
  return a;
}

template <class Scalar>
AmbientVector<Scalar> operator-(AmbientVector<Scalar> a, const AmbientVector<Scalar>& b) {
  a -= b;
  return a;
}

template <class Scalar>
AmbientVector<Scalar> operator-(AmbientVector<Scalar> a) {
  a *= -1.0;
  return a;
}

template <class Scalar>
AmbientVector<Scalar> operator*(double s, AmbientVector<Scalar> a) {
  a *= s;
  return a;
}

template <class Scalar>
AmbientVector<Scalar> operator*(AmbientVector<Scalar> a, double s) {
  a *= s;
  return a;
}

// Flat pairing on the ambient space: sum of Re tr(a^t b) over the slots.
template <class Scalar>
double ambient_inner(const AmbientVector<Scalar>& a, const AmbientVector<Scalar>& b) {
  return detail::re_dot(a.u, b.u) + detail::re_dot(a.p, b.p) + detail::re_dot(a.v, b.v);
}

template <class Scalar>
AmbientVector<Scalar> rand_ambient(Index m, Index n, Index rank, Rng& rng) {
  detail::require(rank <= m && rank <= n, "rand_ambient: rank exceeds a dimension");
  return {rand_matrix<Scalar>(m, rank, rng), rand_matrix<Scalar>(rank, rank, rng),
          rand_matrix<Scalar>(n, rank, rng)};
}

template <class Scalar>
AmbientVector<Scalar> rand_ambient(Index m, Index n, Index rank, std::uint64_t seed) {
  Rng rng(seed);
  return rand_ambient<Scalar>(m, n, rank, rng);
}

}  // namespace fixedrank
