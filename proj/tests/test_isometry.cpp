#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qhsp/isometry.hpp"
#include "qhsp/lie.hpp"

using namespace qhsp;

namespace {

std::mt19937_64 rng(777);

Qd random_quat(double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return {u(rng), u(rng), u(rng), u(rng)};
}

QMat3 random_sp21(double scale = 0.4) {
  LieVec v;
  std::uniform_real_distribution<double> u(-scale, scale);
  for (int i = 0; i < 21; ++i) v(i) = u(rng);
  return qexpm<double, 3>(lie_to_matrix(v));
}

// Loxodromic translation of length 2s along the standard geodesic.
QMat3 standard_loxodromic(double s) {
  QMat2 B;
  B << Qd(std::cosh(s)), Qd(std::sinh(s)), Qd(std::sinh(s)), Qd(std::cosh(s));
  return embed_block(B);
}

// Least squares slope of log(ray_length_sq) over t in [5,10].
double fitted_slope(const Qd& v1, const Qd& v2) {
  int n = 51;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    double t = 5.0 + 5.0 * i / (n - 1);
    double y = std::log(ray_length_sq(v1, v2, t));
    sx += t; sy += y; sxx += t * t; sxy += t * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace

TEST_CASE("parabolic normal form constraints") {
  // a = 1: identity
  QMat2 P1 = parabolic_center_solve(1.0);
  CHECK(frob(P1 - QMat2::Identity()) < 1e-12);

  // a = 2 worked values
  QMat2 P = parabolic_center_solve(2.0);
  double r3 = std::sqrt(3.0);
  CHECK(qabs(P(0, 0) - Qd(2)) < 1e-12);
  CHECK(qabs(P(0, 1) - Qd(-1.5, r3 / 2, 0, 0)) < 1e-12);
  CHECK(qabs(P(1, 0) - Qd(1.5, -r3 / 2, 0, 0)) < 1e-12);
  CHECK(qabs(P(1, 1) - Qd(-1, r3, 0, 0)) < 1e-12);
  CHECK(P(0, 0).norm_sq() - P(1, 0).norm_sq() == doctest::Approx(1.0).epsilon(1e-12));

  // all four constraints for random a in [1,10]; also Sp(1,1) membership
  std::uniform_real_distribution<double> ua(1.0, 10.0);
  for (int t = 0; t < 100; ++t) {
    double a = ua(rng);
    QMat2 M = parabolic_center_solve(a);
    Qd A = M(0, 0), B = M(0, 1), C = M(1, 0), D = M(1, 1);
    Qd lam = A + B;
    CHECK(qabs(C + D - lam) < 1e-12);
    CHECK(std::abs(lam.norm_sq() - 1.0) < 1e-12);
    CHECK(std::abs(lam.w - 1.0 / a) < 1e-12);
    CHECK(std::abs(A.norm_sq() - C.norm_sq() - 1.0) < 1e-12);
    CHECK(std::abs(D.norm_sq() - B.norm_sq() - 1.0) < 1e-12);
    CHECK(qabs(A.conj() * B - C.conj() * D) < 1e-12);
    CHECK(is_in_sp<2>(M, 1e-12));

    // fixes the boundary point (0,1,1) projectively
    QVec3 p = QVec3::Zero();
    p(1) = Qd(1);
    p(2) = Qd(1);
    QVec3 img = embed_block(M) * p;
    CHECK(qabs(img(1) - lam) < 1e-12);
    CHECK(qabs(img(2) - lam) < 1e-12);
    CHECK(qabs(img(0)) < 1e-12);
  }

  CHECK_THROWS_AS(parabolic_center_solve(0.5), DomainError);
}

TEST_CASE("classification trichotomy") {
  CHECK(classify(QMat3::Identity()).kind == IsometryKind::Elliptic);
  IsometryClass lox = classify(standard_loxodromic(0.8));
  CHECK(lox.kind == IsometryKind::Loxodromic);
  // witness eigenvalue of the translation by 2s is e^s
  CHECK(std::abs(lox.top_eigenvalue) == doctest::Approx(std::exp(0.8)).epsilon(1e-10));
  CHECK(classify(embed_block(parabolic_center_solve(2.0))).kind == IsometryKind::Parabolic);

  QMat3 notin = QMat3::Identity();
  notin(0, 0) = Qd(3);
  CHECK_THROWS_AS(classify(notin), NotInGroup);

  // conjugation invariance
  for (int t = 0; t < 8; ++t) {
    QMat3 g = random_sp21();
    auto conj_of = [&](const QMat3& A) {
      return QMat3(g * A * sp_inverse<double, 3>(g));
    };
    CHECK(classify(conj_of(standard_loxodromic(0.5))).kind == IsometryKind::Loxodromic);
    CHECK(classify(conj_of(embed_block(parabolic_center_solve(3.0)))).kind ==
          IsometryKind::Parabolic);
    QMat3 rot = QMat3::Identity();
    rot(0, 0) = Qd(std::cos(0.7), std::sin(0.7), 0, 0);
    CHECK(classify(conj_of(rot)).kind == IsometryKind::Elliptic);
  }
}

TEST_CASE("quaternionic line stabilizers") {
  QLine std_line = standard_qline();

  CHECK(stabilizes_qline(QMat3::Identity(), std_line));

  // block-diagonal elements stabilize the standard line
  for (int t = 0; t < 10; ++t) {
    QMat2 B = parabolic_center_solve(1.0 + t * 0.3);
    Qd q = random_quat();
    q = q / qabs(q);
    CHECK(stabilizes_qline(embed_block(B, q), std_line));
  }

  // a general parabolic with nonzero off-block entry does not
  // (built by conjugating so that x != 0 appears)
  QMat3 g = random_sp21(0.6);
  QMat3 A = g * embed_block(parabolic_center_solve(2.0)) * sp_inverse<double, 3>(g);
  CHECK_FALSE(stabilizes_qline(A, std_line));

  // equivariance: stabilizes(A, L) iff stabilizes(gAg^-1, gL)
  for (int t = 0; t < 10; ++t) {
    QMat3 h = random_sp21();
    QMat3 S = embed_block(parabolic_center_solve(1.7), Qd(0, 1, 0, 0));
    QLine hL = qline_apply(h, std_line);
    CHECK(stabilizes_qline(QMat3(h * S * sp_inverse<double, 3>(h)), hL));
  }

  // degenerate span rejected
  QVec3 n1 = QVec3::Zero(), n2 = QVec3::Zero();
  n1(1) = Qd(1); n1(2) = Qd(1);   // null vector
  n2(1) = Qd(2); n2(2) = Qd(2);   // same null line
  CHECK_THROWS_AS(make_qline(n1, n2), DegenerateLine);
}

TEST_CASE("invariant line search") {
  // block-diagonal generators: the standard line is found
  std::vector<QMat3> gens = {standard_loxodromic(0.6),
                             embed_block(parabolic_center_solve(2.0), Qd(0, 0, 1, 0))};
  auto L = invariant_qline_search(gens);
  REQUIRE(L.has_value());
  CHECK(qline_equal(*L, standard_qline()));

  // single generator: the standard line is among the candidates
  auto cands = invariant_qline_candidates(standard_loxodromic(0.9));
  bool found = false;
  for (const auto& C : cands)
    if (qline_equal(C, standard_qline())) found = true;
  CHECK(found);
}

TEST_CASE("ray squared-length formulas") {
  // delta_t stays in [0, 1) and starts at 0
  CHECK(ray_delta(0.0) == 0.0);
  for (double t : {0.1, 1.0, 5.0, 30.0}) {
    CHECK(ray_delta(t) >= 0.0);
    CHECK(ray_delta(t) < 1.0);
  }

  // t = 0: |v1|^2 + |v2|^2
  Qd v1 = random_quat(), v2 = random_quat();
  CHECK(ray_length_sq(v1, v2, 0.0) ==
        doctest::Approx(v1.norm_sq() + v2.norm_sq()).epsilon(1e-12));

  // v2 = -v1: exactly e^{-t} * 2 |v1|^2
  for (double t : {0.3, 1.0, 2.5, 7.0}) {
    CHECK(ray_length_sq(v1, -v1, t) ==
          doctest::Approx(std::exp(-t) * 2.0 * v1.norm_sq()).epsilon(1e-10));
  }

  // hand-evaluated sample: v = (1,0), t = ln 2 -> 5/4
  CHECK(ray_length_sq(Qd(1), Qd(0), std::log(2.0)) == doctest::Approx(1.25).epsilon(1e-12));

  // the two algebraic forms agree on 1000 random samples (checked inside),
  // and values are positive
  std::uniform_real_distribution<double> ut(0.0, 12.0);
  for (int i = 0; i < 1000; ++i) {
    double v = ray_length_sq(random_quat(), random_quat(), ut(rng));
    CHECK(v >= 0.0);
  }
}

TEST_CASE("decay exponents") {
  CHECK(decay_exponent(Qd(1), Qd(1)) == +1);
  Qd q = random_quat();
  CHECK(decay_exponent(q, -q) == -1);
  CHECK_THROWS_AS(decay_exponent(Qd(0), Qd(0)), ZeroVector);

  // fitted slope oracle
  CHECK(std::abs(fitted_slope(Qd(1), Qd(0)) - 1.0) < 0.05);
  CHECK(std::abs(fitted_slope(q, -q) + 1.0) < 0.05);
  Qd w1 = random_quat(), w2 = random_quat();
  CHECK(std::abs(fitted_slope(w1, w2) - decay_exponent(w1, w2)) < 0.05);
}
