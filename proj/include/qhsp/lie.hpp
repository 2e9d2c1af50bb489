#pragma once

#include <Eigen/Dense>
#include <array>

#include "qhsp/qmatrix.hpp"

namespace qhsp {

//------------------------------------------------------------------------------
// sp(2,1) in fixed coordinates
//------------------------------------------------------------------------------
// A Lie algebra element is a vector in R^21 with the published basis order
//
//   0..2    sp(1) block:      M(0,0) = i, j, k
//   3..6    H^2 block, x1:    M(1,0) = 1, i, j, k   (M(0,1) = -conj x1)
//   7..10   H^2 block, x2:    M(2,0) = 1, i, j, k   (M(0,2) = +conj x2)
//   11..13  sp(1,1) block:    M(1,1) = i, j, k
//   14..17  sp(1,1) block:    M(2,1) = 1, i, j, k   (M(1,2) = conj M(2,1))
//   18..20  sp(1,1) block:    M(2,2) = i, j, k
//
// All modules share this ordering; cocycles and brackets agree coordinatewise.

using LieVec = Eigen::Matrix<double, 21, 1>;

constexpr int kSp1Begin = 0, kSp1End = 3;
constexpr int kH2Begin = 3, kH2End = 11;
constexpr int kSp11Begin = 11, kSp11End = 21;

/// The 21 basis matrices, in order.
const std::array<QMat3, 21>& sp21_basis();

/// Coordinates -> matrix.
QMat3 lie_to_matrix(const LieVec& v);

/// Matrix -> coordinates. Checks X* J' + J' X = 0 within tol and that the
/// reconstruction reproduces X; throws DomainError otherwise.
LieVec lie_from_matrix(const QMat3& X, double tol = 1e-7);

/// Coordinate read-off without the structure check (the linear projection
/// onto sp(2,1) in these coordinates; used for finite differences).
LieVec lie_project(const QMat3& X);

/// Block projections (sp(1), H^2, sp(1,1) coordinate ranges).
struct LieDecomposition {
  LieVec sp1_part, h2_part, sp11_part;
};
LieDecomposition decompose(const LieVec& v);

/// Bracket in coordinates, computed through the matrices.
LieVec lie_bracket(const LieVec& a, const LieVec& b);

/// Ad(g) as a 21 x 21 real matrix, X -> g X g^{-1} with g in Sp(2,1).
Eigen::Matrix<double, 21, 21> ad_matrix(const QMat3& g);

} // namespace qhsp
