#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qhsp/lie.hpp"
#include "qhsp/qmatrix.hpp"

using namespace qhsp;

namespace {

std::mt19937_64 rng(12345);

Qd random_quat(double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return {u(rng), u(rng), u(rng), u(rng)};
}

Qd random_unit_quat() {
  Qd q = random_quat();
  return q / qabs(q);
}

template <int N>
QM<double, N> random_qmat(double scale = 1.0) {
  QM<double, N> A;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) A(i, j) = random_quat(scale);
  return A;
}

// Hand-rolled product as the oracle for Eigen's coefficient-based path.
template <int N>
QM<double, N> reference_product(const QM<double, N>& A, const QM<double, N>& B) {
  QM<double, N> C = QM<double, N>::Zero();
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k) C(i, j) += A(i, k) * B(k, j);
  return C;
}

QMat3 random_sp21(double scale = 0.4) {
  LieVec v;
  std::uniform_real_distribution<double> u(-scale, scale);
  for (int i = 0; i < 21; ++i) v(i) = u(rng);
  return qexpm<double, 3>(lie_to_matrix(v));
}

} // namespace

TEST_CASE("quaternion algebra basics") {
  CHECK(qmul(Qd::I(), Qd::J()) == Qd::K());
  CHECK(qmul(Qd::J(), Qd::I()) == -Qd::K());
  Qd q{1, 1, 1, 1};
  CHECK(qconj(q) == Qd(1, -1, -1, -1));

  // conj is an involutive anti-automorphism
  for (int t = 0; t < 50; ++t) {
    Qd p = random_quat(), r = random_quat();
    CHECK(qabs(qconj(p * r) - qconj(r) * qconj(p)) < 1e-12);
    CHECK(qabs(qconj(qconj(p)) - p) < 1e-15);
    CHECK(p.norm_sq() >= 0.0);
    CHECK(qabs(p * qconj(p) - Qd(p.norm_sq())) < 1e-12);
  }

  // d q^{-1} is real for d = q
  Qd d = random_quat();
  CHECK(qabs(qimag(d * d.inverse())) < 1e-12);
}

TEST_CASE("eigen product matches the reference triple loop") {
  for (int t = 0; t < 20; ++t) {
    QMat3 A = random_qmat<3>(), B = random_qmat<3>();
    QMat3 C = A * B;
    CHECK(frob(C - reference_product<3>(A, B)) < 1e-12);
    QMat2 A2, B2;
    A2 << random_quat(), random_quat(), random_quat(), random_quat();
    B2 << random_quat(), random_quat(), random_quat(), random_quat();
    QMat2 C2 = A2 * B2;
    CHECK(frob(C2 - reference_product<2>(A2, B2)) < 1e-12);
  }
  // (AB)* = B* A*
  QMat3 A = random_qmat<3>(), B = random_qmat<3>();
  CHECK(frob(adjointq(A * B) - adjointq(B) * adjointq(A)) < 1e-12);
}

TEST_CASE("sp membership") {
  QMat3 I = QMat3::Identity();
  CHECK(is_in_sp<3>(I));

  QMat3 D = QMat3::Identity();
  D(0, 0) = random_unit_quat();
  CHECK(is_in_sp<3>(D));

  QMat3 Dbad = QMat3::Identity();
  Dbad(0, 0) = Qd(2);
  CHECK_FALSE(is_in_sp<3>(Dbad));

  // exact backend: diag(2,1,1) fails with top-left entry 4 != 1
  QMat3r Er = QMat3r::Identity();
  Er(0, 0) = Qr(Rational(2));
  CHECK_FALSE(is_in_sp_exact<3>(Er));
  QMat3r Ir = QMat3r::Identity();
  CHECK(is_in_sp_exact<3>(Ir));

  // closure under product and sp_inverse
  for (int t = 0; t < 10; ++t) {
    QMat3 A = random_sp21(), B = random_sp21();
    CHECK(is_in_sp<3>(A, 1e-7));
    CHECK(is_in_sp<3>(QMat3(A * B), 1e-7));
    CHECK(frob(sp_inverse<double, 3>(A) * A - I) < 1e-7);
  }
}

TEST_CASE("sp Lie algebra membership") {
  QMat3 X = QMat3::Zero();
  X(0, 0) = Qd::I();
  CHECK(is_in_sp_lie<3>(X));

  QMat3 Y = QMat3::Zero();
  Y(0, 0) = Qd(1);
  CHECK_FALSE(is_in_sp_lie<3>(Y));

  // H^2 block with matching Y row
  QMat3 Z = QMat3::Zero();
  Qd x1 = random_quat(), x2 = random_quat();
  Z(1, 0) = x1;
  Z(2, 0) = x2;
  Z(0, 1) = -x1.conj();
  Z(0, 2) = x2.conj();
  CHECK(is_in_sp_lie<3>(Z));
}

TEST_CASE("complexification") {
  // A = [j] maps to [[0,-1],[1,0]]
  QM<double, 1> Aj;
  Aj(0, 0) = Qd::J();
  CMat M = complexify<1>(Aj);
  CHECK(std::abs(M(0, 0)) < 1e-15);
  CHECK(std::abs(M(0, 1) + 1.0) < 1e-15);
  CHECK(std::abs(M(1, 0) - 1.0) < 1e-15);
  CHECK(std::abs(M(1, 1)) < 1e-15);

  CHECK((complexify<3>(QMat3::Identity()) - CMat::Identity(6, 6)).norm() < 1e-15);

  // multiplicative, structure equation, monomorphism
  for (int t = 0; t < 20; ++t) {
    QMat3 A = random_qmat<3>(), B = random_qmat<3>();
    CMat cA = complexify<3>(A), cB = complexify<3>(B);
    CHECK((complexify<3>(QMat3(A * B)) - cA * cB).norm() < 1e-12);
    CMat J = structure_j(3);
    CHECK((cA * J - J * cA.conjugate()).norm() < 1e-12);
    if (cA.norm() < 1e-12) CHECK(frob(A) < 1e-12);
  }

  // monomorphism: no basis matrix is in the kernel
  for (int e = 0; e < 9; ++e)
    for (int c = 0; c < 4; ++c) {
      QMat3 B = QMat3::Zero();
      Qd unit = c == 0 ? Qd(1) : (c == 1 ? Qd::I() : (c == 2 ? Qd::J() : Qd::K()));
      B(e / 3, e % 3) = unit;
      CHECK(complexify<3>(B).norm() > 0.9);
    }

  // round trip and failure mode
  QMat3 A = random_qmat<3>();
  CHECK(frob(realify<3>(complexify<3>(A)) - A) < 1e-12);

  CMat bad = CMat::Zero(2, 2);
  bad(0, 0) = 1.0;
  bad(1, 1) = 2.0;
  CHECK_THROWS_AS(realify<1>(bad), NotQuaternionic);

  // the projection onto the H-linear part is always quaternionic
  CMat R = CMat::Random(6, 6) + std::complex<double>(0, 1) * CMat::Random(6, 6);
  CMat P = quaternionic_part(R);
  CHECK_NOTHROW(realify<3>(P, 1e-9));
}

TEST_CASE("lie coordinates and decomposition") {
  // dimension count and round trip
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 20; ++t) {
    LieVec v;
    for (int i = 0; i < 21; ++i) v(i) = u(rng);
    QMat3 X = lie_to_matrix(v);
    CHECK(is_in_sp_lie<3>(X, 1e-9));
    CHECK((lie_from_matrix(X) - v).norm() < 1e-12);

    auto d = decompose(v);
    CHECK((d.sp1_part + d.h2_part + d.sp11_part - v).norm() < 1e-15);

    // [sp1, sp11] = 0; [sp1, H2] and [sp11, H2] stay in the H2 range
    QMat3 A = lie_to_matrix(d.sp1_part), B = lie_to_matrix(d.sp11_part),
          H = lie_to_matrix(d.h2_part);
    CHECK(frob(A * B - B * A) < 1e-12);
    LieVec br1 = lie_from_matrix(QMat3(A * H - H * A));
    LieVec br2 = lie_from_matrix(QMat3(B * H - H * B));
    auto d1 = decompose(br1), d2 = decompose(br2);
    CHECK(d1.sp1_part.norm() < 1e-12);
    CHECK(d1.sp11_part.norm() < 1e-12);
    CHECK(d2.sp1_part.norm() < 1e-12);
    CHECK(d2.sp11_part.norm() < 1e-12);
  }

  CHECK(decompose(LieVec::Zero()).h2_part.norm() == 0.0);

  LieVec e0 = LieVec::Zero();
  e0(0) = 1.0;
  QMat3 X = lie_to_matrix(e0);
  CHECK(qabs(X(0, 0) - Qd::I()) < 1e-15);
  auto d = decompose(lie_from_matrix(X));
  CHECK((d.sp1_part - e0).norm() < 1e-15);
  CHECK(d.h2_part.norm() < 1e-15);
  CHECK(d.sp11_part.norm() < 1e-15);
}

TEST_CASE("ad matrix and exp/log") {
  for (int t = 0; t < 10; ++t) {
    QMat3 g = random_sp21();
    auto Ad = ad_matrix(g);
    LieVec v;
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 21; ++i) v(i) = u(rng);
    QMat3 lhs = lie_to_matrix(LieVec(Ad * v));
    QMat3 rhs = g * lie_to_matrix(v) * sp_inverse<double, 3>(g);
    CHECK(frob(lhs - rhs) < 1e-9);
  }

  // log inverts exp near the identity
  LieVec v = LieVec::Zero();
  v(4) = 0.3;
  v(12) = -0.2;
  v(15) = 0.1;
  QMat3 g = qexpm<double, 3>(lie_to_matrix(v));
  QMat3 L = qlogm<3>(g);
  CHECK(frob(L - lie_to_matrix(v)) < 1e-9);
}
