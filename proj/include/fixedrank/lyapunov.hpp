#pragma once

#include "fixedrank/linalg.hpp"

namespace fixedrank {

// The operator L(P) X = (1/beta - 2/delta) X + 1/delta (P^-1 X P + P X P^-1)
// and its closed-form inverse through the eigenbasis of P. Self-adjoint on
// t-symmetric matrices; its inverse is a by-entry division in the eigenbasis.
template <class Scalar>
struct LyapunovContext {
  TsymEigen<Scalar> eigen;  // of P, eigenvalues descending
  RealMatrix weights;       // entrywise-positive divisor matrix
  double beta = 1.0;
  double delta = 2.0;
  Matrix<Scalar> p;
  Matrix<Scalar> p_inv;
};

template <class Scalar>
LyapunovContext<Scalar> make_lyapunov_context(const TsymEigen<Scalar>& eigen, double beta,
                                              double delta) {
  detail::require(beta > 0.0 && delta > 0.0, "lyapunov: beta and delta must be positive");
  if (!detail::positive_definite(eigen.values, 1e-12))
    throw std::domain_error("lyapunov: base matrix is not positive definite");
  const Index p = eigen.values.size();
  LyapunovContext<Scalar> ctx;
  ctx.eigen = eigen;
  ctx.beta = beta;
  ctx.delta = delta;
  ctx.p = sym(eigen.reconstruct());
  ctx.p_inv = sym(eigen.map_values([](double x) { return 1.0 / x; }));
  ctx.weights.resize(p, p);
  const double base = 1.0 / beta - 2.0 / delta;
  for (Index i = 0; i < p; ++i)
    for (Index j = 0; j < p; ++j) {
      const double li = eigen.values[i], lj = eigen.values[j];
      ctx.weights(i, j) = base + (lj / li + li / lj) / delta;
    }
  // Each entry is at least 1/beta since x + 1/x >= 2; a violation means the
  // eigenvalues were corrupted.
  if (!(ctx.weights.minCoeff() > 0.0))
    throw std::logic_error("lyapunov: divisor matrix has a non-positive entry");
  return ctx;
}

template <class Scalar>
LyapunovContext<Scalar> make_lyapunov_context(const Matrix<Scalar>& p, double beta,
                                              double delta) {
  return make_lyapunov_context(eig_tsym(p), beta, delta);
}

template <class Scalar>
Matrix<Scalar> lyapunov_apply(const LyapunovContext<Scalar>& ctx, const Matrix<Scalar>& x) {
  detail::require(x.rows() == ctx.p.rows() && x.cols() == ctx.p.cols(),
                  "lyapunov_apply: shape mismatch");
  const double base = 1.0 / ctx.beta - 2.0 / ctx.delta;
  return base * x + (ctx.p_inv * x * ctx.p + ctx.p * x * ctx.p_inv) / ctx.delta;
}

// Inverse of lyapunov_apply on t-symmetric inputs:
// L(P)^-1 Z = C { (C^t Z C) ./ weights } C^t.
template <class Scalar>
Matrix<Scalar> lyapunov_solve(const LyapunovContext<Scalar>& ctx, const Matrix<Scalar>& z) {
  detail::require(z.rows() == ctx.p.rows() && z.cols() == ctx.p.cols(),
                  "lyapunov_solve: shape mismatch");
  const Matrix<Scalar>& c = ctx.eigen.vectors;
  Matrix<Scalar> rotated = c.adjoint() * z * c;
  Matrix<Scalar> divided = rotated.cwiseQuotient(ctx.weights.template cast<Scalar>());
  return c * divided * c.adjoint();
}

}  // namespace fixedrank
