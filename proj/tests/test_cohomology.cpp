#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qhsp/cohomology.hpp"

using namespace qhsp;

namespace {

std::mt19937_64 rng(99);

const SurfaceRep& fuchsian2() {
  static SurfaceRep rep = fuchsian_su11_rep(2);
  return rep;
}
const GroupRep& grep2() {
  static GroupRep g = group_rep(fuchsian2());
  return g;
}
const CupContext& ctx2() {
  static CupContext ctx(grep2());
  return ctx;
}

Cocycle random_combination(const std::vector<Cocycle>& basis) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Cocycle c = basis.at(0);
  c.values = u(rng) * basis[0].values;
  for (size_t i = 1; i < basis.size(); ++i) c.values += u(rng) * basis[i].values;
  return c;
}

// pointwise u(1) projection Re(i(a+d)) on sp(1,1)-block coordinates
double pi_u1(const Eigen::VectorXd& v21) { return -(v21(11) + v21(18)); }

} // namespace

TEST_CASE("trivial coefficients, genus 2") {
  CoefficientModule tm = trivial_module(4);
  CochainComplex cc = fox_complex(4, SurfacePresentation(2).relator, tm);
  CHECK(cc.d0.norm() == 0.0);
  CHECK(cc.d1.norm() == 0.0);
  auto dims = cohomology_dims(cc);
  CHECK(dims.h0 == 1);
  CHECK(dims.h1 == 4);
  CHECK(dims.h2 == 1);
  CHECK(h1_basis(cc).size() == 4);
}

TEST_CASE("cohomology dimensions of the Fuchsian representation") {
  const GroupRep& rep = grep2();

  struct Expect {
    Block b;
    int h0, h1, h2, dim;
  };
  // full 21-dim module and its three invariant summands, plus the W block
  std::vector<Expect> table = {{Block::All, 4, 50, 4, 21},
                               {Block::Sp1, 3, 12, 3, 3},
                               {Block::Sp11, 1, 22, 1, 10},
                               {Block::H2, 0, 16, 0, 8},
                               {Block::W, 0, 12, 0, 6}};
  for (const auto& e : table) {
    CAPTURE(block_name(e.b));
    CoefficientModule m = block_module(rep, e.b);
    CHECK(m.dim == e.dim);
    CochainComplex cc = fox_complex(rep.num_gens, rep.relator, m);
    CHECK((cc.d1 * cc.d0).norm() < 1e-8);
    auto dims = cohomology_dims(cc);
    CHECK(dims.h0 == e.h0);
    CHECK(dims.h1 == e.h1);
    CHECK(dims.h2 == e.h2);
    // Euler characteristic and duality
    CHECK(dims.h0 - dims.h1 + dims.h2 == (2 - 2 * 2) * e.dim);
    CHECK(dims.h0 == dims.h2);

    // h1_basis: right count, inside ker d1, orthogonal to im d0
    auto basis = h1_basis(cc);
    CHECK(int(basis.size()) == e.h1);
    for (const auto& u : basis) {
      CHECK((cc.d1 * u.values).norm() < 1e-8);
      CHECK((cc.d0.transpose() * u.values).norm() < 1e-8);
    }
  }
}

TEST_CASE("relator mismatch is rejected") {
  // non-commuting generator actions make the commutator relator act
  // nontrivially
  CoefficientModule m = trivial_module(4, 2);
  Eigen::MatrixXd bad1(2, 2), bad2(2, 2);
  bad1 << 2, 0, 0, 1;
  bad2 << 1, 1, 0, 1;
  m.action[0] = bad1;
  m.action_inv[0] = bad1.inverse();
  m.action[1] = bad2;
  m.action_inv[1] = bad2.inverse();
  CHECK_THROWS_AS(fox_complex(4, SurfacePresentation(2).relator, m), ActionRelatorMismatch);
}

TEST_CASE("intersection form calibration on trivial coefficients") {
  const GroupRep& rep = grep2();
  CoefficientModule tm = trivial_module(4);
  CochainComplex cc = fox_complex(4, rep.relator, tm);
  auto basis = h1_basis(cc);
  REQUIRE(basis.size() == 4);

  Eigen::Matrix4d G;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) G(i, j) = cup_pair_scalar(rep.relator, tm, basis[i], basis[j]);

  // antisymmetric of full rank 2g = 4: the symplectic intersection form
  CHECK((G + G.transpose()).norm() < 1e-10);
  Eigen::JacobiSVD<Eigen::Matrix4d> svd(G);
  CHECK(svd.singularValues()(3) > 1e-6);
}

TEST_CASE("pointwise u(1) bracket formula on the W block") {
  // X = j[[z,w],[-w,t]] embedded in sp(2,1) coordinates
  auto wvec = [](std::complex<double> z, std::complex<double> w, std::complex<double> t) {
    Eigen::VectorXd c(6);
    c << z.real(), z.imag(), w.real(), w.imag(), t.real(), t.imag();
    return Eigen::VectorXd(block_embedding(Block::W) * c);
  };
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 25; ++trial) {
    std::complex<double> z(u(rng), u(rng)), w(u(rng), u(rng)), t(u(rng), u(rng));
    std::complex<double> zp(u(rng), u(rng)), wp(u(rng), u(rng)), tp(u(rng), u(rng));
    Eigen::VectorXd br = lie_bracket(LieVec(wvec(z, w, t)), LieVec(wvec(zp, wp, tp)));
    double expect =
        2.0 * (std::conj(z) * zp + std::conj(t) * tp - 2.0 * std::conj(w) * wp).imag();
    CHECK(pi_u1(br) == doctest::Approx(expect).epsilon(1e-10));
  }
  // the worked entry: z = 1, z' = i gives 2 Im(i) = 2
  Eigen::VectorXd br = lie_bracket(LieVec(wvec(1, 0, 0)), LieVec(wvec({0, 1}, 0, 0)));
  CHECK(pi_u1(br) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("cup square: quadratic scaling, coboundaries, cocycle check") {
  const CupContext& ctx = ctx2();
  const CochainComplex& cc = ctx.adjoint_complex();
  auto basis = h1_basis(cc);
  Cocycle u = random_combination(basis);

  // quadratic in the cocycle
  H2Class c1 = ctx.cup_square(u);
  Cocycle u2 = u;
  u2.values *= 1.7;
  H2Class c2 = ctx.cup_square(u2);
  CHECK((c2.h0_coords - 1.7 * 1.7 * c1.h0_coords).norm() < 1e-8 * (1 + c1.h0_coords.norm()));

  // coboundaries have vanishing class
  Eigen::VectorXd v = Eigen::VectorXd::Random(21);
  Cocycle db;
  db.dim = 21;
  db.values = cc.d0 * v;
  CHECK(ctx.cup_square(db).h0_coords.norm() < 1e-8 * (1 + v.norm()));

  // and shifting by a coboundary does not move the class
  Cocycle shifted = u;
  shifted.values = u.values + db.values;
  H2Class c3 = ctx.cup_square(shifted);
  CHECK((c3.h0_coords - c1.h0_coords).norm() < 1e-7 * (1 + c1.h0_coords.norm()));

  // non-cocycles are rejected
  Cocycle junk;
  junk.dim = 21;
  junk.values = Eigen::VectorXd::Random(21 * 4);
  CHECK_THROWS_AS(ctx.cup_square(junk), NotACocycle);
}

TEST_CASE("sp(1) cup square formula") {
  // u = a x q + b x q' has class 2 (a cup b) [q, q']
  const GroupRep& rep = grep2();
  const CupContext& ctx = ctx2();
  CoefficientModule tm = trivial_module(4);
  CochainComplex tcc = fox_complex(4, rep.relator, tm);
  auto tb = h1_basis(tcc);

  for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 3}, {2, 3}}) {
    double sigma = cup_pair_scalar(rep.relator, tm, tb[i], tb[j]);
    // q = i, q' = j, [q, q'] = 2k
    Cocycle block;
    block.dim = 3;
    block.values.resize(3 * 4);
    for (int g = 0; g < 4; ++g) {
      block.values.segment(g * 3, 3) = Eigen::Vector3d(tb[i].value(g)(0), tb[j].value(g)(0), 0);
    }
    H2Class cls = ctx.cup_square(embed_cocycle(Block::Sp1, block));
    Eigen::Vector4d expect(0, 0, 4.0 * sigma, 0); // 2 sigma [i,j] = 4 sigma k
    CHECK((cls.h0_coords - expect).norm() < 1e-8 * (1 + std::abs(sigma)));
  }
}

TEST_CASE("cross terms die in cohomology") {
  // [u_sp1, u_h2] lands in H^2(H^2 block) = 0
  const GroupRep& rep = grep2();
  const CupContext& ctx = ctx2();

  CoefficientModule h2m = block_module(rep, Block::H2);
  auto h2b = h1_basis(fox_complex(4, rep.relator, h2m));
  Cocycle uh2 = embed_cocycle(Block::H2, random_combination(h2b));

  CoefficientModule s1m = block_module(rep, Block::Sp1);
  auto s1b = h1_basis(fox_complex(4, rep.relator, s1m));
  Cocycle usp1 = embed_cocycle(Block::Sp1, random_combination(s1b));

  H2Class cross = ctx.cup_pair(usp1, uh2);
  CHECK(cross.h0_coords.norm() < 1e-8);
}

TEST_CASE("sp(1) square solver hits random targets") {
  const CupContext& ctx = ctx2();
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 20; ++t) {
    Eigen::Vector3d target(u(rng), u(rng), u(rng));
    target.normalize();
    Cocycle v = solve_sp1_square(target, ctx);
    H2Class cls = ctx.cup_square(v);
    CHECK((cls.h0_coords.head<3>() - target).norm() < 1e-8);
    CHECK(std::abs(cls.h0_coords(3)) < 1e-8);
  }
  CHECK(solve_sp1_square(Eigen::Vector3d::Zero(), ctx).values.norm() == 0.0);
}

TEST_CASE("W block square solver attains both signs") {
  const CupContext& ctx = ctx2();
  for (double target : {0.8, -1.3, 2.0, -0.1}) {
    Cocycle w = solve_sp11_square(target, ctx);
    H2Class cls = ctx.cup_square(w);
    CHECK(cls.h0_coords(3) == doctest::Approx(target).epsilon(1e-7));
    CHECK(cls.h0_coords.head<3>().norm() < 1e-8);
  }
  CHECK(solve_sp11_square(0.0, ctx).values.norm() == 0.0);
}

TEST_CASE("flexibility construction") {
  const GroupRep& rep = grep2();
  const CupContext& ctx = ctx2();
  CoefficientModule h2m = block_module(rep, Block::H2);
  auto h2b = h1_basis(fox_complex(4, rep.relator, h2m));
  REQUIRE(h2b.size() == 16);

  for (int t = 0; t < 5; ++t) {
    Cocycle u = embed_cocycle(Block::H2, random_combination(h2b));
    FlexResult res = flex_deform(u, ctx);

    // vanishing obstruction, nonzero H^2 component equal to u
    CHECK(ctx.cup_square(res.x).h0_coords.norm() < 1e-8);
    Eigen::VectorXd diff = res.x.values - res.v_sp1.values - res.w_block.values - u.values;
    CHECK(diff.norm() < 1e-14);
    double h2norm = 0;
    for (int g = 0; g < 4; ++g)
      h2norm += res.x.value(g).segment(kH2Begin, 8).squaredNorm();
    CHECK(std::sqrt(h2norm) > 1e-8);
    // the correctors live off the H^2 block
    for (int g = 0; g < 4; ++g) {
      CHECK(res.v_sp1.value(g).segment(kH2Begin, 8).norm() < 1e-14);
      CHECK(res.w_block.value(g).segment(kH2Begin, 8).norm() < 1e-14);
    }
  }

  Cocycle zero;
  zero.dim = 21;
  zero.values = Eigen::VectorXd::Zero(21 * 4);
  CHECK_THROWS_AS(flex_deform(zero, ctx), ZeroInput);
}
