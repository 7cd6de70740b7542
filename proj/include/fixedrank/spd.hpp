#pragma once

#include "fixedrank/linalg.hpp"

namespace fixedrank {

// Geodesic of the affine-invariant metric on positive definite matrices:
//   gamma(t) = P^{1/2} exp(t P^{-1/2} eta P^{-1/2}) P^{1/2}.
// Closed form, positive definite for every real t.
template <class Scalar>
Matrix<Scalar> spd_geodesic(const Matrix<Scalar>& p, const Matrix<Scalar>& eta, double t) {
  detail::require(p.rows() == eta.rows() && p.cols() == eta.cols(),
                  "spd_geodesic: shape mismatch");
  TsymEigen<Scalar> eig = eig_tsym(p);
  if (!detail::positive_definite(eig.values, 1e-12))
    throw std::domain_error("spd_geodesic: base point is not positive definite");
  Matrix<Scalar> root = eig.map_values([](double x) { return std::sqrt(x); });
  Matrix<Scalar> iroot = eig.map_values([](double x) { return 1.0 / std::sqrt(x); });
  Matrix<Scalar> inner = sym((iroot * sym(eta) * iroot).eval());
  Matrix<Scalar> grown = eig_tsym(inner).map_values([t](double x) { return std::exp(t * x); });
  return sym((root * grown * root).eval());
}

// Symmetrize and lift eigenvalues below rel_floor * lambda_max. Keeps
// additive steps of finite-difference curves inside the positive cone.
template <class Scalar>
Matrix<Scalar> spd_floor(const Matrix<Scalar>& p, double rel_floor = 1e-10) {
  TsymEigen<Scalar> eig = eig_tsym(sym(p));
  const double largest = eig.values.size() > 0 ? eig.values.maxCoeff() : 0.0;
  if (!(largest > 0.0)) throw std::domain_error("spd_floor: no positive eigenvalue");
  const double floor_value = rel_floor * largest;
  return sym(eig.map_values([floor_value](double x) { return std::max(x, floor_value); }));
}

}  // namespace fixedrank
