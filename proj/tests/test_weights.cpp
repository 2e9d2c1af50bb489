#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qhsp/weights.hpp"
#include "qhsp/errors.hpp"

using namespace qhsp;

namespace {

std::mt19937_64 rng(4242);

CRat random_crat() {
  std::uniform_int_distribution<int> u(-2, 2);
  return CRat(Rational(u(rng)), Rational(u(rng)));
}

Sp4Mat random_sp4() {
  return sp4_from_blocks({random_crat(), random_crat(), random_crat(), random_crat()},
                         random_crat(), random_crat(), random_crat(), random_crat(),
                         random_crat(), random_crat());
}

} // namespace

TEST_CASE("rational arithmetic is exact") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a * b == Rational(1, 18));
  CHECK(a - a == Rational(0));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK((CRat(Rational(1), Rational(1)) * CRat(Rational(1), Rational(-1))) == CRat(2));
}

TEST_CASE("quadratic form P on the 2-form bases") {
  TwoForm om = omega_form();
  CHECK(wedge_quadratic_P(om, om) == CRat(1));

  // omega_1 .. omega_6 is P-orthonormal
  auto ob = omega_basis();
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      CHECK(wedge_quadratic_P(ob[i], ob[j]) == (i == j ? CRat(1) : CRat(0)));

  // v-basis pairings in the unnormalized scaling: P(v1,v3) = P(v2,v4) = 2,
  // P(v5,v5) = 1, all other pairs 0, and every v_i is orthogonal to omega
  auto v = w_5basis();
  for (int i = 0; i < 5; ++i) {
    CHECK(wedge_quadratic_P(v[i], om) == CRat(0));
    for (int j = 0; j < 5; ++j) {
      CRat expect(0);
      if ((i == 0 && j == 2) || (i == 2 && j == 0)) expect = CRat(2);
      if ((i == 1 && j == 3) || (i == 3 && j == 1)) expect = CRat(2);
      if (i == 4 && j == 4) expect = CRat(1);
      CHECK(wedge_quadratic_P(v[i], v[j]) == expect);
    }
  }
}

TEST_CASE("sp4 membership and the derivation action") {
  CHECK(in_sp4(sp4_cartan(1, 0)));
  CHECK(in_sp4(sp4_cartan(0, 1)));
  for (int t = 0; t < 20; ++t) CHECK(in_sp4(random_sp4()));

  Sp4Mat bad{};
  bad[0][0] = CRat(1); // diag(1,0,0,0) is not symplectic
  CHECK_FALSE(in_sp4(bad));
  CHECK_THROWS_AS(sp4_on_2forms(bad), NotInSp4);

  // zero maps to zero
  Sp4Mat zero{};
  W6Mat M0 = sp4_on_2forms(zero);
  for (auto& row : M0)
    for (auto& c : row) CHECK(c.is_zero());

  // diag(1,0,-1,0) annihilates omega and v5
  W6Mat M = sp4_on_2forms(sp4_cartan(1, 0));
  auto apply = [&](const TwoForm& f) {
    TwoForm img{};
    for (int r = 0; r < 6; ++r) {
      CRat s;
      for (int c = 0; c < 6; ++c) s += M[r][c] * f[c];
      img[r] = s;
    }
    return img;
  };
  for (const CRat& c : apply(omega_form())) CHECK(c.is_zero());
  for (const CRat& c : apply(w_5basis()[4])) CHECK(c.is_zero());
}

TEST_CASE("restriction to W: Cartan images and P-skewness") {
  auto [h1, h2] = cartan_images();
  CHECK(h1 == std::array<Rational, 5>{1, 1, -1, -1, 0});
  CHECK(h2 == std::array<Rational, 5>{-1, 1, 1, -1, 0});

  for (int t = 0; t < 20; ++t) {
    W5Mat R = restrict_to_W(sp4_on_2forms(random_sp4()));
    CHECK(is_p_skew(R));
  }
}

TEST_CASE("the induced map is a Lie algebra homomorphism") {
  for (int t = 0; t < 20; ++t) {
    Sp4Mat X = random_sp4(), Y = random_sp4();
    W5Mat lhs = restrict_to_W(sp4_on_2forms(sp4_bracket(X, Y)));
    W5Mat rhs = w5_bracket(restrict_to_W(sp4_on_2forms(X)),
                           restrict_to_W(sp4_on_2forms(Y)));
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) CHECK(lhs[i][j] == rhs[i][j]);
  }
}

TEST_CASE("weight transform") {
  auto [L1p, L2p] = weight_transform();
  CHECK(L1p.l1 == Rational(1, 2));
  CHECK(L1p.l2 == Rational(1, 2));
  CHECK(L2p.l1 == Rational(-1, 2));
  CHECK(L2p.l2 == Rational(1, 2));
}

TEST_CASE("weight multiples") {
  CHECK_FALSE(is_multiple(Weight{1, 0}, Weight{Rational(1, 2), Rational(1, 2)}));
  CHECK(is_multiple(Weight{1, 1}, Weight{Rational(1, 2), Rational(1, 2)}));
  CHECK(is_multiple(Weight{0, 0}, Weight{Rational(1, 2), Rational(1, 2)}));
  CHECK_THROWS_AS(is_multiple(Weight{1, 0}, Weight{0, 0}), ZeroWeight);
}

TEST_CASE("weights of the standard action on C^4") {
  // eigenvalues of the two Cartan generators on e1..e4 give the weight set
  // {L1, L2, -L1, -L2}
  Sp4Mat H1 = sp4_cartan(1, 0), H2 = sp4_cartan(0, 1);
  std::array<Weight, 4> ws;
  for (int k = 0; k < 4; ++k) ws[k] = Weight{H1[k][k].re, H2[k][k].re};
  CHECK(ws[0] == Weight{1, 0});
  CHECK(ws[1] == Weight{0, 1});
  CHECK(ws[2] == Weight{-1, 0});
  CHECK(ws[3] == Weight{0, -1});
}

TEST_CASE("spin lemma pipeline") {
  CHECK(lemma_spin_holds());
}
