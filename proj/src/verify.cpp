#include "qhsp/verify.hpp"

#include <cmath>
#include <random>

#include "qhsp/bending.hpp"
#include "qhsp/cohomology.hpp"
#include "qhsp/isometry.hpp"
#include "qhsp/lie.hpp"
#include "qhsp/surfrep.hpp"
#include "qhsp/weights.hpp"
#include "qhsp/weil.hpp"

namespace qhsp {

namespace {

Qd random_quat(std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return {u(rng), u(rng), u(rng), u(rng)};
}

Qd random_unit_quat(std::mt19937_64& rng) {
  Qd q = random_quat(rng);
  return q / qabs(q);
}

QMat3 random_sp21(std::mt19937_64& rng, double scale = 0.4) {
  LieVec v;
  std::uniform_real_distribution<double> u(-scale, scale);
  for (int i = 0; i < 21; ++i) v(i) = u(rng);
  return qexpm<double, 3>(lie_to_matrix(v));
}

void check(Report& rep, const std::string& id, bool pass, double measured, double bound,
           const std::string& note = {}) {
  rep.checks.push_back({id, pass, measured, bound, note});
}

void check_below(Report& rep, const std::string& id, double measured, double bound,
                 const std::string& note = {}) {
  rep.checks.push_back({id, measured < bound, measured, bound, note});
}

void check_eq(Report& rep, const std::string& id, int measured, int expected,
              const std::string& note = {}) {
  rep.checks.push_back({id, measured == expected, double(measured), double(expected), note});
}

const SurfaceRep& cached_su11_rep() {
  static SurfaceRep rep = fuchsian_su11_rep(2);
  return rep;
}

const SurfaceRep& cached_so21_rep() {
  static SurfaceRep rep = fuchsian_so21_rep(2);
  return rep;
}

const CupContext& cached_cup_context() {
  static CupContext ctx(group_rep(cached_su11_rep()));
  return ctx;
}

FixParams imaginary_bend(double angle, const Qd& dir) {
  FixParams p;
  p.q = Qd(1);
  p.d = Qd(std::cos(angle)) + dir * Qd(std::sin(angle));
  return p;
}

} // namespace

//------------------------------------------------------------------------------
// qcore
//------------------------------------------------------------------------------

Report verify_qcore(const VerifyConfig& cfg) {
  Report rep{"qcore", {}, cfg};
  std::mt19937_64 rng(cfg.seed);

  // group closure under product and the form inverse
  double worst_prod = 0, worst_inv = 0;
  for (int t = 0; t < 25; ++t) {
    QMat3 A = random_sp21(rng), B = random_sp21(rng);
    QMat3 J = jform<double, 3>();
    worst_prod = std::max(worst_prod, frob(adjointq(A * B) * J * (A * B) - J));
    worst_inv =
        std::max(worst_inv, frob(sp_inverse<double, 3>(A) * A - QMat3::Identity()));
  }
  check_below(rep, "sp21_product_closure", worst_prod, 1e-7);
  check_below(rep, "sp21_form_inverse", worst_inv, 1e-7);

  // 21 coordinates, decomposition, block brackets
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst_rt = 0, worst_br = 0;
  for (int t = 0; t < 25; ++t) {
    LieVec v;
    for (int i = 0; i < 21; ++i) v(i) = u(rng);
    QMat3 X = lie_to_matrix(v);
    worst_rt = std::max(worst_rt, (lie_from_matrix(X) - v).norm());
    auto d = decompose(v);
    QMat3 A = lie_to_matrix(d.sp1_part), B = lie_to_matrix(d.sp11_part),
          H = lie_to_matrix(d.h2_part);
    worst_br = std::max(worst_br, frob(A * B - B * A));
    auto dH = decompose(lie_from_matrix(QMat3(A * H - H * A)));
    worst_br = std::max(worst_br, dH.sp1_part.norm() + dH.sp11_part.norm());
    auto dH2 = decompose(lie_from_matrix(QMat3(B * H - H * B)));
    worst_br = std::max(worst_br, dH2.sp1_part.norm() + dH2.sp11_part.norm());
  }
  check_eq(rep, "lie_dim_count", kSp1End - kSp1Begin + kH2End - kH2Begin + 21 - kSp11Begin, 21);
  check_below(rep, "lie_roundtrip", worst_rt, 1e-10);
  check_below(rep, "block_bracket_ranges", worst_br, 1e-10);

  // complexification: multiplicative monomorphism commuting with J
  double worst_mul = 0, worst_str = 0, worst_round = 0;
  for (int t = 0; t < 25; ++t) {
    QMat3 A, B;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        A(i, j) = random_quat(rng);
        B(i, j) = random_quat(rng);
      }
    CMat cA = complexify<3>(A), cB = complexify<3>(B);
    worst_mul = std::max(worst_mul, (complexify<3>(QMat3(A * B)) - cA * cB).norm());
    CMat J = structure_j(3);
    worst_str = std::max(worst_str, (cA * J - J * cA.conjugate()).norm());
    worst_round = std::max(worst_round, frob(realify<3>(cA) - A));
  }
  check_below(rep, "complexify_multiplicative", worst_mul, 1e-10);
  check_below(rep, "complexify_structure", worst_str, 1e-10);
  check_below(rep, "realify_roundtrip", worst_round, 1e-10);

  // exact backend membership
  QMat3r I = QMat3r::Identity();
  check(rep, "exact_identity_in_sp", is_in_sp_exact<3>(I), 1, 1);
  QMat3r D2 = QMat3r::Identity();
  D2(0, 0) = Qr(Rational(2));
  check(rep, "exact_diag2_not_in_sp", !is_in_sp_exact<3>(D2), 1, 1);
  QMat3r Xi = QMat3r::Zero();
  Xi(0, 0) = Qr(Rational(0), Rational(1), Rational(0), Rational(0));
  check(rep, "exact_imag_diag_in_lie", is_in_sp_lie_exact<3>(Xi), 1, 1);
  return rep;
}

//------------------------------------------------------------------------------
// stab: parabolic normal forms (acceptance 2)
//------------------------------------------------------------------------------

Report verify_stab(const VerifyConfig& cfg) {
  Report rep{"stab", {}, cfg};
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> ua(1.0, 10.0);

  double worst = 0;
  for (int t = 0; t < 100; ++t) {
    double a = ua(rng);
    QMat2 M = parabolic_center_solve(a);
    Qd A = M(0, 0), B = M(0, 1), C = M(1, 0), D = M(1, 1);
    Qd lam = A + B;
    double r = 0;
    r = std::max(r, double(qabs(C + D - lam)));
    r = std::max(r, std::abs(lam.norm_sq() - 1.0));
    r = std::max(r, std::abs(lam.w - 1.0 / a));
    r = std::max(r, std::abs(A.norm_sq() - C.norm_sq() - 1.0));
    r = std::max(r, std::abs(D.norm_sq() - B.norm_sq() - 1.0));
    r = std::max(r, double(qabs(A.conj() * B - C.conj() * D)));
    worst = std::max(worst, r);
    if (!is_in_sp<2>(M, 1e-12)) worst = std::max(worst, 1.0);
  }
  check_below(rep, "constraints_100_random", worst, 1e-12);

  // a = 2 worked values
  QMat2 P = parabolic_center_solve(2.0);
  double r3 = std::sqrt(3.0);
  double dev = 0;
  dev = std::max(dev, double(qabs(P(0, 0) - Qd(2))));
  dev = std::max(dev, double(qabs(P(0, 1) - Qd(-1.5, r3 / 2, 0, 0))));
  dev = std::max(dev, double(qabs(P(1, 0) - Qd(1.5, -r3 / 2, 0, 0))));
  dev = std::max(dev, double(qabs(P(1, 1) - Qd(-1, r3, 0, 0))));
  check_below(rep, "a2_worked_matrix", dev, 1e-12);
  check(rep, "a2_norm_identity", std::abs(P(0, 0).norm_sq() - P(1, 0).norm_sq() - 1.0) < 1e-12,
        P(0, 0).norm_sq() - P(1, 0).norm_sq(), 1.0);

  // the embedded element is parabolic and fixes (0,1,1)
  check(rep, "embedded_is_parabolic",
        classify(embed_block(parabolic_center_solve(2.0))).kind == IsometryKind::Parabolic, 1, 1);
  return rep;
}

//------------------------------------------------------------------------------
// weights (acceptance 1)
//------------------------------------------------------------------------------

Report verify_weights(const VerifyConfig& cfg) {
  Report rep{"weights", {}, cfg};
  auto [h1, h2] = cartan_images();
  bool h1ok = h1 == std::array<Rational, 5>{1, 1, -1, -1, 0};
  bool h2ok = h2 == std::array<Rational, 5>{-1, 1, 1, -1, 0};
  check(rep, "h1_exact", h1ok, h1ok, 1, "(1,1,-1,-1,0)");
  check(rep, "h2_exact", h2ok, h2ok, 1, "(-1,1,1,-1,0)");

  auto [L1p, L2p] = weight_transform();
  bool l1ok = L1p.l1 == Rational(1, 2) && L1p.l2 == Rational(1, 2);
  bool l2ok = L2p.l1 == Rational(-1, 2) && L2p.l2 == Rational(1, 2);
  check(rep, "L1prime_exact", l1ok, l1ok, 1, "(1/2, 1/2)");
  check(rep, "L2prime_exact", l2ok, l2ok, 1, "(-1/2, 1/2)");

  check(rep, "lemma_spin", lemma_spin_holds(), 1, 1,
        "L1 is not a multiple of the transported highest weight");

  // P pairings in the rescaled sense
  auto v = w_5basis();
  bool pok = wedge_quadratic_P(v[0], v[2]) == CRat(2) &&
             wedge_quadratic_P(v[1], v[3]) == CRat(2) &&
             wedge_quadratic_P(v[4], v[4]) == CRat(1) &&
             wedge_quadratic_P(omega_form(), omega_form()) == CRat(1);
  check(rep, "p_pairings_exact", pok, pok, 1);
  return rep;
}

//------------------------------------------------------------------------------
// metric (acceptance 3)
//------------------------------------------------------------------------------

Report verify_metric(const VerifyConfig& cfg) {
  Report rep{"metric", {}, cfg};
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> ut(0.0, 12.0);

  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    Qd v1 = random_quat(rng), v2 = random_quat(rng);
    auto [f1, f2] = ray_length_sq_forms(v1, v2, ut(rng));
    worst = std::max(worst, std::abs(f1 - f2) / std::max(1.0, std::abs(f1)));
  }
  check_below(rep, "two_forms_agree_1000", worst, 1e-10);

  Qd q = random_quat(rng);
  check_eq(rep, "decay_minus_one_exact", decay_exponent(q, -q), -1);

  auto fitted_slope = [](const Qd& v1, const Qd& v2) {
    int n = 51;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
      double t = 5.0 + 5.0 * i / (n - 1);
      double y = std::log(ray_length_sq(v1, v2, t));
      sx += t; sy += y; sxx += t * t; sxy += t * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
  };
  double worst_slope = 0;
  for (int i = 0; i < 10; ++i) {
    Qd v1 = random_quat(rng), v2 = random_quat(rng);
    if (qabs(v1 + v2) < 1e-6) continue;
    worst_slope = std::max(worst_slope, std::abs(fitted_slope(v1, v2) - 1.0));
  }
  check_below(rep, "generic_slope_plus_one", worst_slope, 0.05);
  check_below(rep, "hand_sample_5_4",
              std::abs(ray_length_sq(Qd(1), Qd(0), std::log(2.0)) - 1.25), 1e-12);
  return rep;
}

//------------------------------------------------------------------------------
// cohomology (acceptance 4 and 5)
//------------------------------------------------------------------------------

Report verify_cohomology(const VerifyConfig& cfg) {
  Report rep{"cohomology", {}, cfg};
  GroupRep grep = group_rep(cached_su11_rep());

  struct Expect {
    Block b;
    int h0, h1, h2, dim;
  };
  std::vector<Expect> table = {{Block::All, 4, 50, 4, 21},
                               {Block::Sp1, 3, 12, 3, 3},
                               {Block::Sp11, 1, 22, 1, 10},
                               {Block::H2, 0, 16, 0, 8}};
  for (const auto& e : table) {
    CochainComplex cc = fox_complex(grep.num_gens, grep.relator, block_module(grep, e.b));
    auto dims = cohomology_dims(cc);
    std::string tag = block_name(e.b);
    check_eq(rep, "h0_" + tag, dims.h0, e.h0);
    check_eq(rep, "h1_" + tag, dims.h1, e.h1);
    check_eq(rep, "h2_" + tag, dims.h2, e.h2);
    check_eq(rep, "euler_" + tag, dims.h0 - dims.h1 + dims.h2, -2 * e.dim);
    check_eq(rep, "duality_" + tag, dims.h0, dims.h2);
    check_below(rep, "d1d0_" + tag, (cc.d1 * cc.d0).norm(), 1e-7);
  }
  check_eq(rep, "euler_total_minus_42", 4 - 50 + 4, -42);

  // acceptance 5: intersection form calibration
  CoefficientModule tm = trivial_module(grep.num_gens);
  CochainComplex tcc = fox_complex(grep.num_gens, grep.relator, tm);
  auto basis = h1_basis(tcc);
  check_eq(rep, "trivial_h1_basis", int(basis.size()), 4);
  Eigen::Matrix4d G;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      G(i, j) = cup_pair_scalar(grep.relator, tm, basis[i], basis[j]);
  check_below(rep, "cup_gram_antisymmetric", (G + G.transpose()).norm(), 1e-10);
  Eigen::JacobiSVD<Eigen::Matrix4d> svd(G);
  check_eq(rep, "cup_gram_rank", (svd.singularValues().array() > 1e-7).count(), 4);
  return rep;
}

//------------------------------------------------------------------------------
// sp1 / sp11 solvers (acceptance 6)
//------------------------------------------------------------------------------

Report verify_sp1(const VerifyConfig& cfg) {
  Report rep{"sp1", {}, cfg};
  std::mt19937_64 rng(cfg.seed);
  const CupContext& ctx = cached_cup_context();

  double worst = 0;
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 20; ++t) {
    Eigen::Vector3d target(u(rng), u(rng), u(rng));
    target.normalize();
    H2Class cls = ctx.cup_square(solve_sp1_square(target, ctx));
    worst = std::max(worst, (cls.h0_coords.head<3>() - target).norm() +
                                std::abs(cls.h0_coords(3)));
  }
  check_below(rep, "sp1_20_random_targets", worst, 1e-8);
  return rep;
}

Report verify_sp11(const VerifyConfig& cfg) {
  Report rep{"sp11", {}, cfg};
  const CupContext& ctx = cached_cup_context();
  GroupRep grep = ctx.rep();

  // the u(1) quadratic form on H^1(W): full rank and both signs
  CoefficientModule wm = block_module(grep, Block::W);
  CochainComplex wcc = fox_complex(grep.num_gens, grep.relator, wm);
  auto wb = h1_basis(wcc);
  check_eq(rep, "w_h1_dim", int(wb.size()), 12);

  std::vector<Cocycle> emb;
  for (const Cocycle& c : wb) emb.push_back(embed_cocycle(Block::W, c));
  Eigen::MatrixXd G(wb.size(), wb.size());
  for (int i = 0; i < int(wb.size()); ++i)
    for (int j = i; j < int(wb.size()); ++j)
      G(i, j) = G(j, i) = ctx.cup_pair(emb[i], emb[j]).h0_coords(3);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G);
  double mn = es.eigenvalues().minCoeff(), mx = es.eigenvalues().maxCoeff();
  check(rep, "w_form_attains_both_signs", mn < -1e-8 && mx > 1e-8, mn, mx);
  double small = es.eigenvalues().cwiseAbs().minCoeff();
  check(rep, "w_form_full_rank", small > 1e-7 * std::max(std::abs(mn), mx), small,
        1e-7 * std::max(std::abs(mn), mx));

  // solver round trips on both signs
  double worst = 0;
  for (double target : {1.0, -1.0, 0.35, -2.1}) {
    H2Class cls = ctx.cup_square(solve_sp11_square(target, ctx));
    worst = std::max(worst,
                     std::abs(cls.h0_coords(3) - target) + cls.h0_coords.head<3>().norm());
  }
  check_below(rep, "sp11_targets", worst, 1e-8);
  return rep;
}

//------------------------------------------------------------------------------
// flex (acceptance 7)
//------------------------------------------------------------------------------

Report verify_flex(const VerifyConfig& cfg) {
  Report rep{"flex", {}, cfg};
  std::mt19937_64 rng(cfg.seed);
  const CupContext& ctx = cached_cup_context();
  GroupRep grep = ctx.rep();

  CoefficientModule h2m = block_module(grep, Block::H2);
  auto h2b = h1_basis(fox_complex(grep.num_gens, grep.relator, h2m));

  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst_cup = 0, min_h2 = 1e300;
  for (int t = 0; t < 5; ++t) {
    Cocycle blockc = h2b[0];
    blockc.values = u(rng) * h2b[0].values;
    for (size_t i = 1; i < h2b.size(); ++i) blockc.values += u(rng) * h2b[i].values;
    Cocycle uu = embed_cocycle(Block::H2, blockc);
    FlexResult res = flex_deform(uu, ctx);
    worst_cup = std::max(worst_cup, double(ctx.cup_square(res.x).h0_coords.norm()));
    double h2norm = 0;
    for (int g = 0; g < grep.num_gens; ++g)
      h2norm += res.x.value(g).segment(kH2Begin, 8).squaredNorm();
    min_h2 = std::min(min_h2, std::sqrt(h2norm));
  }
  check_below(rep, "flex_cup_square_vanishes", worst_cup, 1e-8);
  check(rep, "flex_h2_component_nonzero", min_h2 > 1e-8, min_h2, 1e-8);
  return rep;
}

//------------------------------------------------------------------------------
// weil (acceptance 8)
//------------------------------------------------------------------------------

Report verify_weil(const VerifyConfig& cfg) {
  Report rep{"weil", {}, cfg};
  std::mt19937_64 rng(cfg.seed);

  // finite cyclic group in the compact torus of the block subgroup
  GroupRep cyc;
  cyc.num_gens = 1;
  cyc.relator = Word(std::vector<int>(5, 1));
  QMat3 g = QMat3::Identity();
  g(0, 0) = Qd(std::cos(2 * M_PI / 5), std::sin(2 * M_PI / 5), 0, 0);
  cyc.images = {g};

  std::uniform_real_distribution<double> u(-0.5, 0.5);
  LieVec w;
  for (int i = 0; i < 21; ++i) w(i) = u(rng);
  FormalCurve curve = conjugated_constant_curve(cyc, w, 2);
  WeilResult res = weil_normalize(curve, {2, 1e-9});
  double recov = (res.conjugators.at(0) - w).segment(kH2Begin, 8).norm();
  double offblock = 0;
  for (const auto& order : res.normalized)
    for (const QMat3& M : order)
      for (int i = 1; i < 3; ++i)
        offblock = std::max(offblock, std::sqrt(M(0, i).norm_sq() + M(i, 0).norm_sq()));
  check_below(rep, "cyclic_roundtrip_conjugator", recov, 1e-10);
  check_below(rep, "cyclic_normalized_in_subgroup", offblock, 1e-10);

  // surface group with an H^2 class: obstruction at order 1
  GroupRep grep = group_rep(cached_su11_rep());
  CoefficientModule h2m = block_module(grep, Block::H2);
  auto basis = h1_basis(fox_complex(grep.num_gens, grep.relator, h2m));
  FormalCurve stuck = first_order_curve(grep, embed_cocycle(Block::H2, basis.at(0)));
  int raised_order = 0;
  try {
    weil_normalize(stuck, {1, 1e-8});
  } catch (const ObstructionNonzero& e) {
    raised_order = e.order();
  }
  check_eq(rep, "surface_obstruction_order", raised_order, 1);
  return rep;
}

//------------------------------------------------------------------------------
// bending (acceptance 9 relator part, acceptance 10)
//------------------------------------------------------------------------------

Report verify_bending(const VerifyConfig& cfg) {
  Report rep{"bending", {}, cfg};
  std::mt19937_64 rng(cfg.seed);
  const SurfaceRep& base = cached_so21_rep();
  Word c = parse_word("a1b1A1B1", 2);

  double worst = 0;
  for (int t = 0; t < 3; ++t) {
    FixParams p{random_unit_quat(rng), random_unit_quat(rng)};
    worst = std::max(worst, relator_residual(bend_amalgam(base, c, p)));
  }
  SurfaceRep two = bend_lamination_rep(
      base, two_curve_lamination(imaginary_bend(0.6, Qd::I()), imaginary_bend(0.5, Qd::J())));
  worst = std::max(worst, relator_residual(two));
  check_below(rep, "bent_relator_residual", worst, 1e-8);

  // single separating curve lamination agrees with the amalgam construction
  FixParams p{random_unit_quat(rng), random_unit_quat(rng)};
  SurfaceRep viaA = bend_amalgam(base, c, p);
  SurfaceRep viaL = bend_lamination_rep(base, amalgam_lamination(p));
  double agree = 0;
  for (int g2 = 0; g2 < 4; ++g2) agree = std::max(agree, frob(viaA.images[g2] - viaL.images[g2]));
  check_below(rep, "lamination_matches_amalgam", agree, 1e-8);

  // acceptance 10: finite-difference tangent cocycles
  CupContext ctx(group_rep(base));
  double eps = 1e-4;
  SurfaceRep bent = bend_amalgam(base, c, imaginary_bend(0.2 * eps, Qd::I()));
  Cocycle uf = finite_difference_cocycle(base, bent, eps);
  check_below(rep, "fd_cocycle_residual",
              (ctx.adjoint_complex().d1 * uf.values).norm() /
                  std::max(1.0, uf.values.norm()),
              1e-2);
  check_below(rep, "fd_cup_square_norm", ctx.cup_square_norm(uf, 1e-1), 1e-5);
  return rep;
}

//------------------------------------------------------------------------------
// hull (acceptance 9 ladder part)
//------------------------------------------------------------------------------

Report verify_hull(const VerifyConfig& cfg) {
  Report rep{"hull", {}, cfg};
  const SurfaceRep& base = cached_so21_rep();
  Word c = parse_word("a1b1A1B1", 2);

  HullReport real_rep = hull_classify(base);
  check_eq(rep, "closure_dim_unbent", real_rep.closure_dim, 3);
  check(rep, "kind_unbent_real", real_rep.kind == HullKind::Real, double(real_rep.closure_dim),
        3, to_string(real_rep.kind));
  check(rep, "commutant_contains_quaternions", real_rep.commutant_dim >= 4,
        real_rep.commutant_dim, 4);

  SurfaceRep bent1 = bend_amalgam(base, c, imaginary_bend(0.6, Qd::I()));
  HullReport complex_rep = hull_classify(bent1);
  check_eq(rep, "closure_dim_one_bend", complex_rep.closure_dim, 8);
  check(rep, "kind_one_bend_complex", complex_rep.kind == HullKind::Complex,
        double(complex_rep.closure_dim), 8, to_string(complex_rep.kind));

  SurfaceRep bent2 = bend_lamination_rep(
      base, two_curve_lamination(imaginary_bend(0.6, Qd::I()), imaginary_bend(0.5, Qd::J())));
  HullReport full_rep = hull_classify(bent2);
  check_eq(rep, "closure_dim_two_bends", full_rep.closure_dim, 21);
  check(rep, "kind_two_bends_full", full_rep.kind == HullKind::Full,
        double(full_rep.closure_dim), 21, to_string(full_rep.kind));
  check(rep, "no_invariant_line_when_full", !full_rep.invariant_line.has_value(), 1, 1);

  // monotone ladder
  check(rep, "ladder_monotone",
        real_rep.closure_dim <= complex_rep.closure_dim &&
            complex_rep.closure_dim <= full_rep.closure_dim,
        1, 1);

  // the Fuchsian representation keeps its line
  HullReport line_rep = hull_classify(cached_su11_rep());
  check(rep, "su11_line_stabilizing", line_rep.kind == HullKind::LineStabilizing, 1, 1,
        to_string(line_rep.kind));
  return rep;
}

//------------------------------------------------------------------------------
// dispatch
//------------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"qcore", "stab",  "weights", "metric",
                                                 "cohomology", "sp1", "sp11", "flex",
                                                 "weil",  "bending", "hull", "all"};
  return names;
}

Report run_suite(const std::string& name, const VerifyConfig& cfg) {
  if (name == "qcore") return verify_qcore(cfg);
  if (name == "stab") return verify_stab(cfg);
  if (name == "weights") return verify_weights(cfg);
  if (name == "metric") return verify_metric(cfg);
  if (name == "cohomology") return verify_cohomology(cfg);
  if (name == "sp1") return verify_sp1(cfg);
  if (name == "sp11") return verify_sp11(cfg);
  if (name == "flex") return verify_flex(cfg);
  if (name == "weil") return verify_weil(cfg);
  if (name == "bending") return verify_bending(cfg);
  if (name == "hull") return verify_hull(cfg);
  if (name == "all") {
    Report all{"all", {}, cfg};
    for (const std::string& n : suite_names()) {
      if (n == "all") continue;
      Report r = run_suite(n, cfg);
      for (auto& chk : r.checks) {
        chk.id = n + "." + chk.id;
        all.checks.push_back(chk);
      }
    }
    return all;
  }
  throw UnknownSuite("no suite named " + name);
}

} // namespace qhsp
