#include "qhsp/lie.hpp"

#include "qhsp/errors.hpp"

namespace qhsp {

namespace {

QMat3 basis_matrix(int idx) {
  QMat3 M = QMat3::Zero();
  auto unit = [](int c) {
    switch (c) {
      case 0: return Qd(1);
      case 1: return Qd::I();
      case 2: return Qd::J();
      default: return Qd::K();
    }
  };
  if (idx < kSp1End) {
    M(0, 0) = unit(idx + 1);
  } else if (idx < kH2End) {
    int c = (idx - kH2Begin) % 4;
    int row = (idx - kH2Begin) / 4 + 1; // 1 or 2
    Qd q = unit(c);
    M(row, 0) = q;
    // Y = -X* J_1 row: M(0,1) = -conj(x1), M(0,2) = +conj(x2)
    if (row == 1)
      M(0, 1) = -q.conj();
    else
      M(0, 2) = q.conj();
  } else if (idx < 14) {
    M(1, 1) = unit(idx - 11 + 1);
  } else if (idx < 18) {
    Qd q = unit(idx - 14);
    M(2, 1) = q;
    M(1, 2) = q.conj();
  } else {
    M(2, 2) = unit(idx - 18 + 1);
  }
  return M;
}

} // namespace

const std::array<QMat3, 21>& sp21_basis() {
  static const std::array<QMat3, 21> basis = [] {
    std::array<QMat3, 21> b;
    for (int i = 0; i < 21; ++i) b[i] = basis_matrix(i);
    return b;
  }();
  return basis;
}

QMat3 lie_to_matrix(const LieVec& v) {
  QMat3 M = QMat3::Zero();
  const auto& B = sp21_basis();
  for (int i = 0; i < 21; ++i)
    if (v(i) != 0.0) M += B[i] * Qd(v(i));
  return M;
}

LieVec lie_project(const QMat3& X) {
  LieVec v;
  v(0) = X(0, 0).x; v(1) = X(0, 0).y; v(2) = X(0, 0).z;
  v(3) = X(1, 0).w; v(4) = X(1, 0).x; v(5) = X(1, 0).y; v(6) = X(1, 0).z;
  v(7) = X(2, 0).w; v(8) = X(2, 0).x; v(9) = X(2, 0).y; v(10) = X(2, 0).z;
  v(11) = X(1, 1).x; v(12) = X(1, 1).y; v(13) = X(1, 1).z;
  v(14) = X(2, 1).w; v(15) = X(2, 1).x; v(16) = X(2, 1).y; v(17) = X(2, 1).z;
  v(18) = X(2, 2).x; v(19) = X(2, 2).y; v(20) = X(2, 2).z;
  return v;
}

LieVec lie_from_matrix(const QMat3& X, double tol) {
  if (!is_in_sp_lie<3>(X, tol * (1.0 + frob(X))))
    throw DomainError("matrix is not in sp(2,1)");
  LieVec v = lie_project(X);
  if (frob(lie_to_matrix(v) - X) > tol * (1.0 + frob(X)))
    throw DomainError("matrix does not match the sp(2,1) coordinate structure");
  return v;
}

LieDecomposition decompose(const LieVec& v) {
  LieDecomposition d;
  d.sp1_part = LieVec::Zero();
  d.h2_part = LieVec::Zero();
  d.sp11_part = LieVec::Zero();
  d.sp1_part.segment<3>(kSp1Begin) = v.segment<3>(kSp1Begin);
  d.h2_part.segment<8>(kH2Begin) = v.segment<8>(kH2Begin);
  d.sp11_part.segment<10>(kSp11Begin) = v.segment<10>(kSp11Begin);
  return d;
}

LieVec lie_bracket(const LieVec& a, const LieVec& b) {
  QMat3 A = lie_to_matrix(a), B = lie_to_matrix(b);
  return lie_from_matrix(A * B - B * A);
}

Eigen::Matrix<double, 21, 21> ad_matrix(const QMat3& g) {
  QMat3 gi = sp_inverse<double, 3>(g);
  Eigen::Matrix<double, 21, 21> M;
  const auto& B = sp21_basis();
  for (int i = 0; i < 21; ++i) M.col(i) = lie_from_matrix(g * B[i] * gi);
  return M;
}

} // namespace qhsp
