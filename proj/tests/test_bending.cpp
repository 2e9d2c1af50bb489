#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qhsp/bending.hpp"

using namespace qhsp;

namespace {

std::mt19937_64 rng(2024);

Qd random_unit_quat() {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Qd q{u(rng), u(rng), u(rng), u(rng)};
  return q / qabs(q);
}

const SurfaceRep& so21() {
  static SurfaceRep rep = fuchsian_so21_rep(2);
  return rep;
}

QMat3 random_sp21(double scale = 0.4) {
  LieVec v;
  std::uniform_real_distribution<double> u(-scale, scale);
  for (int i = 0; i < 21; ++i) v(i) = u(rng);
  return qexpm<double, 3>(lie_to_matrix(v));
}

// bending parameters along the commutator curve, scaled by s
FixParams imag_params(double s, const Qd& dir) {
  FixParams p;
  p.q = Qd(1);
  p.d = Qd(std::cos(s), 0, 0, 0) + dir * Qd(std::sin(s));
  return p;
}

} // namespace

TEST_CASE("centralizer elements") {
  CHECK(frob(centralizer_element({Qd(1), Qd(1)}) - QMat3::Identity()) < 1e-15);

  for (int t = 0; t < 10; ++t) {
    FixParams p{random_unit_quat(), random_unit_quat()};
    QMat3 C = centralizer_element(p);
    CHECK(is_in_sp<3>(C, 1e-12));

    // fixes the standard geodesic pointwise: real points of span{e2, e3}
    std::uniform_real_distribution<double> u(-0.9, 0.9);
    QVec3 v = QVec3::Zero();
    v(1) = Qd(u(rng));
    v(2) = Qd(1);
    QVec3 img = C * v;
    // image equals v . q (projective fixing with factor q)
    CHECK(frob(QVec3(img - v * p.q)) < 1e-12);
  }

  CHECK_THROWS_AS(centralizer_element({Qd(2), Qd(1)}), NotUnit);

  // tangent action at a fixed point: the normal direction u goes to d u q^{-1}
  FixParams p{Qd(0, 0, 1, 0), Qd(0, 1, 0, 0)}; // q = j, d = i
  QMat3 C = centralizer_element(p);
  QVec3 tangent = QVec3::Zero();
  tangent(0) = Qd(1); // normal direction at the geodesic point e3
  QVec3 moved = C * tangent * p.q.inverse();
  CHECK(qabs(moved(0) - p.d * Qd(1) * p.q.inverse()) < 1e-12);

  // q = d makes d q^{-1} = 1: the real structure is preserved
  FixParams pr{Qd(0, 1, 0, 0), Qd(0, 1, 0, 0)};
  CHECK(qabs(qimag(pr.d * pr.q.inverse())) < 1e-12);
}

TEST_CASE("axis transport") {
  // a loxodromic along the standard geodesic transports to itself
  QMat2 B;
  double s = 0.7;
  B << Qd(std::cosh(s)), Qd(std::sinh(s)), Qd(std::sinh(s)), Qd(std::cosh(s));
  QMat3 lox = embed_block(B);
  QMat3 T = axis_frame(lox);
  QLine std_line = standard_qline();
  CHECK(qline_contains(std_line, QVec3(T.col(1))));
  CHECK(qline_contains(std_line, QVec3(T.col(2))));

  // transported centralizer commutes with the loxodromic
  for (int t = 0; t < 5; ++t) {
    QMat3 g = random_sp21();
    QMat3 conj = g * lox * sp_inverse<double, 3>(g);
    FixParams p{random_unit_quat(), random_unit_quat()};
    QMat3 E = transported_centralizer(conj, p);
    CHECK(is_in_sp<3>(E, 1e-7));
    CHECK(frob(E * conj - conj * E) < 1e-6 * frob(conj));
  }

  CHECK_THROWS_AS(axis_frame(QMat3::Identity()), NotLoxodromic);
}

TEST_CASE("amalgam bending satisfies the relator") {
  const SurfaceRep& rep = so21();
  Word c = parse_word("a1b1A1B1", 2);

  // identity parameters change nothing
  SurfaceRep same = bend_amalgam(rep, c, {Qd(1), Qd(1)});
  for (int g = 0; g < 4; ++g) CHECK(frob(same.images[g] - rep.images[g]) < 1e-9);

  for (int t = 0; t < 5; ++t) {
    FixParams p{random_unit_quat(), random_unit_quat()};
    SurfaceRep bent = bend_amalgam(rep, c, p);
    CHECK(relator_residual(bent) < 1e-8);
    // first handle untouched
    CHECK(frob(bent.images[0] - rep.images[0]) < 1e-12);
    CHECK(frob(bent.images[1] - rep.images[1]) < 1e-12);
  }

  CHECK_THROWS_AS(bend_amalgam(rep, parse_word("a1b1", 2), {Qd(1), Qd(1)}), DomainError);

  // all-identity representation has no loxodromic commutator
  SurfaceRep triv(2);
  triv.images.assign(4, QMat3::Identity());
  CHECK_THROWS_AS(bend_amalgam(triv, c, {Qd(1), Qd(1)}), NotLoxodromic);
}

TEST_CASE("lamination bending") {
  const SurfaceRep& rep = so21();

  // empty lamination is the identity deformation
  MeasuredLamination empty;
  empty.crossings.assign(4, {});
  SurfaceRep same = bend_lamination_rep(rep, empty);
  for (int g = 0; g < 4; ++g) CHECK(frob(same.images[g] - rep.images[g]) < 1e-12);

  // single separating curve reproduces bend_amalgam
  FixParams p{random_unit_quat(), random_unit_quat()};
  SurfaceRep viaAmalgam = bend_amalgam(rep, parse_word("a1b1A1B1", 2), p);
  SurfaceRep viaLam = bend_lamination_rep(rep, amalgam_lamination(p));
  for (int g = 0; g < 4; ++g) CHECK(frob(viaAmalgam.images[g] - viaLam.images[g]) < 1e-8);

  // two disjoint curves: still a homomorphism
  FixParams p2{random_unit_quat(), random_unit_quat()};
  SurfaceRep two = bend_lamination_rep(rep, two_curve_lamination(p, p2));
  CHECK(relator_residual(two) < 1e-8);

  // homomorphism property of single-word evaluation
  Word w1 = parse_word("a1b2", 2), w2 = parse_word("A2b1a1", 2);
  MeasuredLamination lam = two_curve_lamination(p, p2);
  QMat3 lhs = bend_lamination(rep, lam, w1 * w2);
  QMat3 rhs = bend_lamination(rep, lam, w1) * bend_lamination(rep, lam, w2);
  CHECK(frob(lhs - rhs) < 1e-8);

  // corrupted crossing data violates the Chasles consistency
  MeasuredLamination bad = two_curve_lamination(imag_params(0.7, Qd::I()), p2);
  bad.crossings[2].pop_back();
  CHECK_THROWS_AS(bend_lamination_rep(rep, bad), InconsistentCrossings);
}

TEST_CASE("lie closure ladder 3 -> 8 -> 21") {
  const SurfaceRep& rep = so21();

  // unbent: so(2,1)
  LieClosure unbent = lie_closure(rep.images);
  CHECK(unbent.dim == 3);

  // one bending with Im(d q^{-1}) != 0: su(2,1) conjugate
  SurfaceRep bent1 = bend_amalgam(rep, parse_word("a1b1A1B1", 2), imag_params(0.6, Qd::I()));
  LieClosure one = lie_closure(bent1.images);
  CHECK(one.dim == 8);

  // a second independent bending: everything
  SurfaceRep bent2 = bend_lamination_rep(
      rep, two_curve_lamination(imag_params(0.6, Qd::I()), imag_params(0.5, Qd::J())));
  LieClosure twoc = lie_closure(bent2.images);
  CHECK(twoc.dim == 21);

  // monotone along the ladder
  CHECK(unbent.dim <= one.dim);
  CHECK(one.dim <= twoc.dim);

  // branch-cut failure mode
  QMat3 half_turn = QMat3::Identity();
  half_turn(1, 1) = Qd(-1);
  half_turn(2, 2) = Qd(-1);
  CHECK_THROWS_AS(lie_closure({half_turn}), LogDivergent);
}

TEST_CASE("hull classification") {
  const SurfaceRep& rep = so21();

  HullReport real_report = hull_classify(rep);
  CHECK(real_report.kind == HullKind::Real);
  CHECK(real_report.closure_dim == 3);
  CHECK(real_report.commutant_dim >= 4);
  CHECK_FALSE(real_report.invariant_line.has_value());

  SurfaceRep su = fuchsian_su11_rep(2);
  HullReport line_report = hull_classify(su);
  CHECK(line_report.kind == HullKind::LineStabilizing);
  REQUIRE(line_report.invariant_line.has_value());
  CHECK(qline_equal(*line_report.invariant_line, standard_qline()));
  // H^2 = C^2 + conj(C^2) as a module, and the two summands are equivalent:
  // the endomorphism algebra is M_2(C), plus the quaternion scalar slot
  CHECK(commutant_dim(su.images) == 8);

  SurfaceRep bent1 = bend_amalgam(rep, parse_word("a1b1A1B1", 2), imag_params(0.6, Qd::I()));
  HullReport complex_report = hull_classify(bent1);
  CHECK(complex_report.kind == HullKind::Complex);
  CHECK(complex_report.commutant_dim == 2);

  SurfaceRep bent2 = bend_lamination_rep(
      rep, two_curve_lamination(imag_params(0.6, Qd::I()), imag_params(0.5, Qd::J())));
  HullReport full_report = hull_classify(bent2);
  CHECK(full_report.kind == HullKind::Full);
  CHECK(full_report.closure_dim == 21);
  CHECK_FALSE(full_report.invariant_line.has_value());
  CHECK(full_report.commutant_dim == 1);

  // conjugation invariance of the kind
  QMat3 g = random_sp21();
  SurfaceRep conj = bent1;
  for (auto& M : conj.images) M = g * M * sp_inverse<double, 3>(g);
  CHECK(hull_classify(conj).kind == HullKind::Complex);
}

TEST_CASE("bending tangents satisfy the integrability condition") {
  const SurfaceRep& rep = so21();
  CupContext ctx(group_rep(rep));
  Word c = parse_word("a1b1A1B1", 2);

  for (double eps : {1e-3, 1e-4}) {
    SurfaceRep bent = bend_amalgam(rep, c, imag_params(0.2 * eps, Qd::I()));
    Cocycle u = finite_difference_cocycle(rep, bent, eps);
    // approximate cocycle: d1 residual is O(eps)
    const auto& cc = ctx.adjoint_complex();
    CHECK((cc.d1 * u.values).norm() < 10 * eps * std::max(1.0, u.values.norm()));
    // the cup square class collapses as eps -> 0
    double n = ctx.cup_square_norm(u, 1e-1);
    CHECK(n < 10 * eps);
  }

  // at eps = 1e-4 the class norm is already below 1e-5
  double eps = 1e-4;
  SurfaceRep bent = bend_amalgam(rep, c, imag_params(0.2 * eps, Qd::I()));
  Cocycle u = finite_difference_cocycle(rep, bent, eps);
  CHECK(ctx.cup_square_norm(u, 1e-1) < 1e-5);
}
