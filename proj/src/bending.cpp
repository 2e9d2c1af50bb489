#include "qhsp/bending.hpp"

#include <algorithm>
#include <cmath>

namespace qhsp {

namespace {

// The transport frame and the bent images are assembled from products whose
// intermediate norms reach 1e4-1e5; the construction runs in long double so
// the images land on the group well below the double-precision tolerances.

using QMat3L = QM<long double, 3>;
using QVec3L = QM<long double, 3, 1>;

QMat3L to_ld(const QMat3& A) {
  QMat3L B;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      B(i, j) = Ql{A(i, j).w, A(i, j).x, A(i, j).y, A(i, j).z};
  return B;
}

QMat3 to_d(const QMat3L& A) {
  QMat3 B;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      B(i, j) = Qd{double(A(i, j).w), double(A(i, j).x), double(A(i, j).y), double(A(i, j).z)};
  return B;
}

QMat3L eval_word_ld(const std::vector<QMat3L>& images, const Word& w) {
  QMat3L R = QMat3L::Identity();
  for (int l : w.letters) {
    int gen = std::abs(l) - 1;
    if (gen < 0 || gen >= int(images.size())) throw DomainError("word letter out of range");
    R = R * (l > 0 ? images[gen] : sp_inverse<long double, 3>(images[gen]));
  }
  return R;
}

// right-normalize by the largest coordinate; for real-axis elements this
// lands on the real representative of the H-eigenline
QVec3L normalize_rep(QVec3L x) {
  int imax = 0;
  long double m = 0;
  for (int i = 0; i < 3; ++i)
    if (x(i).norm_sq() > m) {
      m = x(i).norm_sq();
      imax = i;
    }
  if (double(m) < 1e-28) throw AxisDegenerate("zero eigenvector");
  x = x * x(imax).inverse();
  return x;
}

QMat3L centralizer_element_ld(const FixParams& p) {
  if (std::abs(p.q.norm_sq() - 1.0) > 1e-9 || std::abs(p.d.norm_sq() - 1.0) > 1e-9)
    throw NotUnit("fix parameters must be unit quaternions");
  QMat3L M = QMat3L::Zero();
  M(0, 0) = Ql{p.d.w, p.d.x, p.d.y, p.d.z};
  M(1, 1) = Ql{p.q.w, p.q.x, p.q.y, p.q.z};
  M(2, 2) = M(1, 1);
  return M;
}

QMat3L axis_frame_ld(const QMat3L& lox) {
  using CxL = std::complex<long double>;
  Eigen::Matrix<CxL, 6, 6> M = complexify_t<long double, 3>(lox);
  Eigen::ComplexEigenSolver<Eigen::Matrix<CxL, 6, 6>> es(M);
  const auto& lam = es.eigenvalues();
  int imax = 0, imin = 0;
  for (int i = 1; i < 6; ++i) {
    if (std::abs(lam(i)) > std::abs(lam(imax))) imax = i;
    if (std::abs(lam(i)) < std::abs(lam(imin))) imin = i;
  }
  if (std::abs(lam(imax)) < 1.0 + 1e-7 * (1.0 + frob(lox)))
    throw NotLoxodromic("axis transport needs a loxodromic element");

  QVec3L xp = normalize_rep(realify_vec_t<long double, 3>(es.eigenvectors().col(imax)));
  QVec3L xm = normalize_rep(realify_vec_t<long double, 3>(es.eigenvectors().col(imin)));

  // refine the attracting / repelling vectors by power iteration; the
  // spectral gap of a loxodromic makes a few steps machine-exact
  QMat3L loxi = sp_inverse<long double, 3>(lox);
  for (int it = 0; it < 6; ++it) {
    xp = normalize_rep(QVec3L(lox * xp));
    xm = normalize_rep(QVec3L(loxi * xm));
  }

  // boundary fixed points are null
  for (const QVec3L* x : {&xp, &xm}) {
    double n = frob(*x);
    if (std::abs(double(herm<long double, 3>(*x, *x).w)) > 1e-7 * n * n)
      throw AxisDegenerate("fixed vector is not null");
  }

  // balance Euclidean norms before pairing-normalizing, for a
  // well-conditioned frame
  xp = xp / Ql(frob(xp));
  xm = xm / Ql(frob(xm));
  Ql s = herm<long double, 3>(xp, xm);
  long double sn = qabs(s);
  if (double(sn) < 1e-9)
    throw AxisDegenerate("fixed points do not span a hyperbolic plane");
  xp = xp / Ql(std::sqrt(sn));
  xm = xm * (s.inverse() * Ql(std::sqrt(sn))); // now <xp, xm> = 1

  Ql r2(std::sqrt((long double)2.0));
  QVec3L y1 = (xp + xm) / r2;  // <y1,y1> = +1
  QVec3L y2 = (xp - xm) / r2;  // <y2,y2> = -1

  // positive-norm completion of the frame
  QVec3L y0;
  long double best = -1;
  for (int k = 0; k < 3; ++k) {
    QVec3L e = QVec3L::Zero();
    e(k) = Ql(1);
    QVec3L r = e - y1 * herm<long double, 3>(y1, e) + y2 * herm<long double, 3>(y2, e);
    long double nr = herm<long double, 3>(r, r).w;
    if (nr > best) {
      best = nr;
      y0 = r;
    }
  }
  if (double(best) < 1e-10) throw AxisDegenerate("cannot complete the frame");
  y0 = y0 / Ql(std::sqrt(best));

  QMat3L T;
  for (int i = 0; i < 3; ++i) {
    T(i, 0) = y0(i);
    T(i, 1) = y1(i);
    T(i, 2) = y2(i);
  }
  QMat3L J = jform<long double, 3>();
  if (frob(adjointq(T) * J * T - J) > 1e-6 * (1.0 + frob(T)))
    throw AxisDegenerate("transport frame failed the group membership check");
  // one Newton step toward exact symplectic membership
  QMat3L Z = adjointq(T) * J * T - J;
  T = T * (QMat3L::Identity() - (J * Z) / Ql(2.0));
  return T;
}

QMat3L transported_centralizer_ld(const QMat3L& lox, const FixParams& p) {
  QMat3L T = axis_frame_ld(lox);
  return T * centralizer_element_ld(p) * sp_inverse<long double, 3>(T);
}

} // namespace

QMat3 centralizer_element(const FixParams& p) {
  return to_d(centralizer_element_ld(p));
}

QMat3 axis_frame(const QMat3& lox, const ClassifyConfig& cfg) {
  IsometryClass cls = classify(lox, cfg);
  if (cls.kind != IsometryKind::Loxodromic)
    throw NotLoxodromic("axis transport needs a loxodromic element");
  return to_d(axis_frame_ld(to_ld(lox)));
}

QMat3 transported_centralizer(const QMat3& lox, const FixParams& p, const ClassifyConfig& cfg) {
  IsometryClass cls = classify(lox, cfg);
  if (cls.kind != IsometryKind::Loxodromic)
    throw NotLoxodromic("axis transport needs a loxodromic element");
  return to_d(transported_centralizer_ld(to_ld(lox), p));
}

SurfaceRep bend_amalgam(const SurfaceRep& rep, const Word& c_word, const FixParams& p) {
  if (rep.pres.genus < 2) throw DomainError("bending needs genus >= 2");
  Word expected = commutator_word(generator_word(0), generator_word(1));
  if (c_word.letters != expected.letters)
    throw DomainError("bend_amalgam expects the separating commutator [a1, b1]");

  std::vector<QMat3L> imgs;
  for (const QMat3& g : rep.images) imgs.push_back(to_ld(g));
  QMat3L C = eval_word_ld(imgs, c_word);
  { // loxodromic gate at double precision for the honest error kind
    IsometryClass cls = classify(evaluate_word(rep, c_word));
    if (cls.kind != IsometryKind::Loxodromic)
      throw NotLoxodromic("the commutator image is not loxodromic");
  }
  QMat3L E = transported_centralizer_ld(C, p);
  QMat3L Ei = sp_inverse<long double, 3>(E);

  SurfaceRep out = rep;
  for (int g = 2; g < rep.pres.num_generators(); ++g)
    out.images[g] = to_d(QMat3L(E * imgs[g] * Ei));
  validate_surface_rep(out);
  return out;
}

//------------------------------------------------------------------------------
// Laminations
//------------------------------------------------------------------------------

MeasuredLamination amalgam_lamination(const FixParams& p) {
  MeasuredLamination lam;
  lam.curves = {{parse_word("a1b1A1B1", 2), p}};
  lam.crossings.assign(4, {});
  // a2, b2 enter and leave the complement of the separating curve
  lam.crossings[2] = {{Word{}, 0, +1}, {parse_word("a2", 2), 0, -1}};
  lam.crossings[3] = {{Word{}, 0, +1}, {parse_word("b2", 2), 0, -1}};
  return lam;
}

MeasuredLamination two_curve_lamination(const FixParams& p1, const FixParams& p2) {
  MeasuredLamination lam;
  lam.curves = {{parse_word("a1b1A1B1", 2), p1}, {parse_word("a2", 2), p2}};
  lam.crossings.assign(4, {});
  lam.crossings[2] = {{Word{}, 0, +1}, {parse_word("a2", 2), 0, -1}};
  // b2 additionally crosses the a2 curve once
  lam.crossings[3] = {{Word{}, 0, +1},
                      {parse_word("b2", 2), 1, +1},
                      {parse_word("b2", 2), 0, -1}};
  return lam;
}

namespace {

std::vector<QMat3> bent_images(const SurfaceRep& rep, const MeasuredLamination& lam) {
  if (int(lam.crossings.size()) != rep.pres.num_generators())
    throw DimensionMismatch("crossing lists must cover every generator");

  std::vector<QMat3L> imgs;
  for (const QMat3& g : rep.images) imgs.push_back(to_ld(g));

  std::vector<QMat3L> E;
  for (const BendingCurve& c : lam.curves) {
    QMat3L axis = eval_word_ld(imgs, c.axis_word);
    IsometryClass cls = classify(evaluate_word(rep, c.axis_word));
    if (cls.kind != IsometryKind::Loxodromic)
      throw NotLoxodromic("lamination curve image is not loxodromic");
    E.push_back(transported_centralizer_ld(axis, c.weight));
  }

  std::vector<QMat3> out(rep.images.size());
  for (int g = 0; g < rep.pres.num_generators(); ++g) {
    QMat3L prod = QMat3L::Identity();
    for (const Crossing& cr : lam.crossings[g]) {
      if (cr.curve < 0 || cr.curve >= int(E.size()))
        throw DomainError("crossing references an unknown curve");
      QMat3L conj = eval_word_ld(imgs, cr.conjugator);
      QMat3L Ecur = cr.sign > 0 ? E[cr.curve] : sp_inverse<long double, 3>(E[cr.curve]);
      prod = prod * (conj * Ecur * sp_inverse<long double, 3>(conj));
    }
    out[g] = to_d(QMat3L(prod * imgs[g]));
  }
  return out;
}

} // namespace

QMat3 bend_lamination(const SurfaceRep& rep, const MeasuredLamination& lam, const Word& gamma) {
  return evaluate_word(bent_images(rep, lam), gamma);
}

SurfaceRep bend_lamination_rep(const SurfaceRep& rep, const MeasuredLamination& lam) {
  SurfaceRep out = rep;
  out.images = bent_images(rep, lam);
  double res = relator_residual(out);
  if (res > 100 * rep.tol)
    throw InconsistentCrossings("relator residual " + std::to_string(res) +
                                " after bending; crossing data violates the Chasles rule");
  return out;
}

//------------------------------------------------------------------------------
// Lie closure
//------------------------------------------------------------------------------

namespace {

// orthonormal column basis at the given relative singular value threshold
Eigen::MatrixXd column_basis(const Eigen::MatrixXd& M, double rel_tol) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 0) return Eigen::MatrixXd(M.rows(), 0);
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_tol * sv(0)) ++r;
  return svd.matrixU().leftCols(r);
}

} // namespace

LieClosure lie_closure(const std::vector<QMat3>& elements, double svd_tol) {
  if (elements.empty()) return {};
  Eigen::MatrixXd seeds(21, int(elements.size()));
  for (int i = 0; i < int(elements.size()); ++i) {
    LieVec v = lie_from_matrix(qlogm<3>(elements[i]));
    double n = v.norm();
    seeds.col(i) = n > 0 ? Eigen::Matrix<double, 21, 1>(v / n) : v;
  }

  Eigen::MatrixXd basis = column_basis(seeds, svd_tol);
  for (int sweep = 0; sweep < 22 && basis.cols() < 21; ++sweep) {
    int r = int(basis.cols());
    Eigen::MatrixXd ext(21, r + r * (r - 1) / 2);
    ext.leftCols(r) = basis;
    int c = r;
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) {
        LieVec br = lie_bracket(LieVec(basis.col(i)), LieVec(basis.col(j)));
        double n = br.norm();
        ext.col(c++) = n > 1e-14 ? Eigen::Matrix<double, 21, 1>(br / n) : LieVec::Zero();
      }
    Eigen::MatrixXd next = column_basis(ext, svd_tol);
    if (next.cols() == basis.cols()) break;
    basis = next;
  }

  LieClosure out;
  out.dim = int(basis.cols());
  for (int i = 0; i < basis.cols(); ++i) out.basis.push_back(LieVec(basis.col(i)));
  return out;
}

int commutant_dim(const std::vector<QMat3>& images, double svd_tol) {
  // X rho - rho X = 0 on the 36 real coordinates of M_3(H)
  auto mat_basis = [](int idx) {
    QMat3 M = QMat3::Zero();
    int entry = idx / 4, comp = idx % 4;
    Qd u = comp == 0 ? Qd(1) : (comp == 1 ? Qd::I() : (comp == 2 ? Qd::J() : Qd::K()));
    M(entry / 3, entry % 3) = u;
    return M;
  };
  auto vec_of = [](const QMat3& M) {
    Eigen::Matrix<double, 36, 1> v;
    int idx = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        v(idx++) = M(i, j).w;
        v(idx++) = M(i, j).x;
        v(idx++) = M(i, j).y;
        v(idx++) = M(i, j).z;
      }
    return v;
  };

  Eigen::MatrixXd L(36 * int(images.size()), 36);
  for (int g = 0; g < int(images.size()); ++g)
    for (int c = 0; c < 36; ++c) {
      QMat3 B = mat_basis(c);
      L.block<36, 1>(36 * g, c) = vec_of(QMat3(B * images[g] - images[g] * B));
    }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(L);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > svd_tol * sv(0)) ++rank;
  return 36 - rank;
}

const char* to_string(HullKind k) {
  switch (k) {
    case HullKind::Real: return "REAL";
    case HullKind::Complex: return "COMPLEX";
    case HullKind::Full: return "FULL";
    case HullKind::LineStabilizing: return "LINE_STABILIZING";
    default: return "OTHER";
  }
}

HullReport hull_classify(const SurfaceRep& rep) {
  HullReport report;
  report.invariant_line = invariant_qline_search(rep.images);
  report.commutant_dim = commutant_dim(rep.images);

  // closure seeds: generators plus pairwise products, skipping elements
  // whose principal logarithm fails
  std::vector<QMat3> samples;
  for (const QMat3& g : rep.images) samples.push_back(g);
  for (size_t i = 0; i < rep.images.size(); ++i)
    for (size_t j = i + 1; j < rep.images.size(); ++j)
      samples.push_back(rep.images[i] * rep.images[j]);
  std::vector<QMat3> usable;
  for (const QMat3& s : samples) {
    try {
      qlogm<3>(s);
      usable.push_back(s);
    } catch (const LogDivergent&) {
      // skip; enough convergent samples remain
    }
  }
  report.closure_dim = lie_closure(usable).dim;

  if (report.invariant_line)
    report.kind = HullKind::LineStabilizing;
  else if (report.closure_dim == 21)
    report.kind = HullKind::Full;
  else if (report.closure_dim == 8 && report.commutant_dim == 2)
    report.kind = HullKind::Complex;
  else if (report.closure_dim == 3 && report.commutant_dim >= 4)
    report.kind = HullKind::Real;
  else
    report.kind = HullKind::Other;
  return report;
}

Cocycle finite_difference_cocycle(const SurfaceRep& base, const SurfaceRep& bent, double eps) {
  int n = base.pres.num_generators();
  Cocycle u;
  u.dim = 21;
  u.values.resize(21 * n);
  for (int g = 0; g < n; ++g) {
    QMat3 M = (bent.images[g] * sp_inverse<double, 3>(base.images[g]) - QMat3::Identity()) /
              Qd(eps);
    u.values.segment<21>(21 * g) = lie_project(M);
  }
  return u;
}

} // namespace qhsp
