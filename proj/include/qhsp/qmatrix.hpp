#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <complex>

#include "qhsp/quaternion.hpp"

namespace qhsp {

//------------------------------------------------------------------------------
// Quaternionic matrix types
//------------------------------------------------------------------------------
// Matrices act on the left of column vectors; scalars multiply vectors on the
// right (H^n is a right module). All sizes used in the toolkit are small and
// fixed, so Eigen's lazy coefficient product applies and the Hamilton product
// order is preserved.

template <class S, int N, int M = N>
using QM = Eigen::Matrix<Quat<S>, N, M>;

using QMat2 = QM<double, 2>;
using QMat3 = QM<double, 3>;
using QVec2 = QM<double, 2, 1>;
using QVec3 = QM<double, 3, 1>;
using QMat2r = QM<Rational, 2>;
using QMat3r = QM<Rational, 3>;

using CMat = Eigen::MatrixXcd;
using CMat4 = Eigen::Matrix4cd;
using CMat6 = Eigen::Matrix<std::complex<double>, 6, 6>;
using CVec6 = Eigen::Matrix<std::complex<double>, 6, 1>;

/// Conjugate transpose. Eigen's .adjoint() would not conjugate a custom
/// non-complex scalar, so the quaternionic adjoint is a free function.
template <class Derived>
auto adjointq(const Eigen::MatrixBase<Derived>& A) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Derived::ColsAtCompileTime, Derived::RowsAtCompileTime> R(A.cols(),
                                                                                  A.rows());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j) R(j, i) = A(i, j).conj();
  return R;
}

/// The form matrix J' = diag(I_n, -1) of the signature (n,1) Hermitian form.
template <class S, int N>
QM<S, N> jform() {
  QM<S, N> J = QM<S, N>::Zero();
  for (int i = 0; i < N - 1; ++i) J(i, i) = Quat<S>(S(1));
  J(N - 1, N - 1) = Quat<S>(S(-1));
  return J;
}

/// <v,w> = sum_{i<n} conj(v_i) w_i - conj(v_n) w_n, conjugate linear in the
/// first slot, right linear in the second.
template <class S, int N>
Quat<S> herm(const QM<S, N, 1>& v, const QM<S, N, 1>& w) {
  Quat<S> s;
  for (int i = 0; i < N - 1; ++i) s += v(i).conj() * w(i);
  s -= v(N - 1).conj() * w(N - 1);
  return s;
}

template <class Derived>
double frob(const Eigen::MatrixBase<Derived>& A) {
  double s = 0;
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j) s += double(A(i, j).norm_sq());
  return std::sqrt(s);
}

//------------------------------------------------------------------------------
// Group and Lie algebra membership
//------------------------------------------------------------------------------

/// A* J' A = J' within tol (float backend).
template <int N>
bool is_in_sp(const QM<double, N>& A, double tol = 1e-9) {
  QM<double, N> J = jform<double, N>();
  return frob(adjointq(A) * J * A - J) < tol;
}

/// Exact membership for rational matrices.
template <int N>
bool is_in_sp_exact(const QM<Rational, N>& A) {
  QM<Rational, N> J = jform<Rational, N>();
  QM<Rational, N> R = adjointq(A) * J * A - J;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (!R(i, j).is_zero()) return false;
  return true;
}

/// X* J' + J' X = 0 within tol.
template <int N>
bool is_in_sp_lie(const QM<double, N>& X, double tol = 1e-9) {
  QM<double, N> J = jform<double, N>();
  return frob(adjointq(X) * J + J * X) < tol;
}

template <int N>
bool is_in_sp_lie_exact(const QM<Rational, N>& X) {
  QM<Rational, N> J = jform<Rational, N>();
  QM<Rational, N> R = adjointq(X) * J + J * X;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (!R(i, j).is_zero()) return false;
  return true;
}

/// Inverse of a group element without any division: A^{-1} = J' A* J'.
template <class S, int N>
QM<S, N> sp_inverse(const QM<S, N>& A) {
  QM<S, N> J = jform<S, N>();
  return J * adjointq(A) * J;
}

//------------------------------------------------------------------------------
// Complexification GL_n(H) -> GL_2n(C)
//------------------------------------------------------------------------------
// A = alpha + j beta maps to [[alpha, -conj(beta)], [beta, conj(alpha)]],
// acting on (X, Y) stacked where v = X + jY. The image commutes with the
// quaternionic structure map M J = J conj(M), J = [[0, -I], [I, 0]].

template <int N>
CMat complexify(const QM<double, N>& A) {
  CMat M(2 * N, 2 * N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      auto [a, b] = split_cj(A(i, j));
      M(i, j) = a;
      M(i, j + N) = -std::conj(b);
      M(i + N, j) = b;
      M(i + N, j + N) = std::conj(a);
    }
  return M;
}

/// Fixed-size complexification for any scalar backend.
template <class S, int N>
Eigen::Matrix<std::complex<S>, 2 * N, 2 * N> complexify_t(const QM<S, N>& A) {
  Eigen::Matrix<std::complex<S>, 2 * N, 2 * N> M;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      auto [a, b] = split_cj(A(i, j));
      M(i, j) = a;
      M(i, j + N) = -std::conj(b);
      M(i + N, j) = b;
      M(i + N, j + N) = std::conj(a);
    }
  return M;
}

template <class S, int N>
QM<S, N, 1> realify_vec_t(const Eigen::Matrix<std::complex<S>, 2 * N, 1>& v) {
  QM<S, N, 1> q;
  for (int i = 0; i < N; ++i) q(i) = join_cj(v(i), v(i + N));
  return q;
}

/// J = [[0, -I_n], [I_n, 0]] of size 2n.
inline CMat structure_j(int n) {
  CMat J = CMat::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    J(i, i + n) = -1.0;
    J(i + n, i) = 1.0;
  }
  return J;
}

/// The H-linear part of an arbitrary complex matrix: (M - J conj(M) J)/2.
inline CMat quaternionic_part(const CMat& M) {
  CMat J = structure_j(int(M.rows()) / 2);
  return 0.5 * (M - J * M.conjugate() * J);
}

/// Inverse of complexify; throws NotQuaternionic when M J != J conj(M).
template <int N>
QM<double, N> realify(const CMat& M, double tol = 1e-9) {
  if (M.rows() != 2 * N || M.cols() != 2 * N)
    throw DimensionMismatch("realify: expected size " + std::to_string(2 * N));
  CMat J = structure_j(N);
  if ((M * J - J * M.conjugate()).norm() > tol * (1.0 + M.norm()))
    throw NotQuaternionic("matrix does not commute with the quaternionic structure");
  QM<double, N> A;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) A(i, j) = join_cj(M(i, j), M(i + N, j));
  return A;
}

/// Quaternionic column vector from a stacked complex 2n-vector.
template <int N>
QM<double, N, 1> realify_vec(const Eigen::VectorXcd& v) {
  QM<double, N, 1> q;
  for (int i = 0; i < N; ++i) q(i) = join_cj(v(i), v(i + N));
  return q;
}

//------------------------------------------------------------------------------
// Exponential and logarithm
//------------------------------------------------------------------------------

/// Matrix exponential by scaling and squaring with a plain series; fine for
/// the small well-scaled inputs used here.
template <class S, int N>
QM<S, N> qexpm(const QM<S, N>& X) {
  static_assert(std::is_floating_point_v<S>, "float backend only");
  double nrm = frob(X);
  int k = 0;
  while (nrm > 0.5) { nrm /= 2; ++k; }
  QM<S, N> Xs = X / Quat<S>(S(1ll << k));
  QM<S, N> term = QM<S, N>::Identity();
  QM<S, N> sum = term;
  for (int n = 1; n <= 24; ++n) {
    term = term * Xs / Quat<S>(S(n));
    sum += term;
  }
  for (int i = 0; i < k; ++i) sum = sum * sum;
  return sum;
}

/// Principal logarithm through the complexification: eigen-decompose the
/// 2N x 2N image, take principal logs of the eigenvalues, map back. Throws
/// LogDivergent for eigenvalues on the negative real axis or an
/// ill-conditioned eigenbasis.
template <int N>
QM<double, N> qlogm(const QM<double, N>& A, double tol = 1e-9) {
  CMat M = complexify<N>(A);
  Eigen::ComplexEigenSolver<CMat> es(M);
  if (es.info() != Eigen::Success) throw LogDivergent("eigen decomposition failed");
  Eigen::VectorXcd lam = es.eigenvalues();
  CMat V = es.eigenvectors();
  Eigen::JacobiSVD<CMat> svd(V);
  double cond = svd.singularValues()(0) / svd.singularValues()(svd.singularValues().size() - 1);
  if (!std::isfinite(cond) || cond > 1e10)
    throw LogDivergent("non-diagonalizable input");
  Eigen::VectorXcd loglam(lam.size());
  for (int i = 0; i < lam.size(); ++i) {
    std::complex<double> l = lam(i);
    if (std::abs(l) < 1e-14 || (l.real() < 0 && std::abs(l.imag()) < 1e-12 * std::abs(l.real())))
      throw LogDivergent("eigenvalue on the branch cut");
    loglam(i) = std::log(l);
  }
  CMat L = V * loglam.asDiagonal() * V.inverse();
  return realify<N>(L, std::max(tol, 1e-7 * (1.0 + L.norm())));
}

} // namespace qhsp
