#include "qhsp/surfrep.hpp"

#include <cmath>
#include <complex>

namespace qhsp {

namespace {

using Cx = std::complex<double>;
using M2c = Eigen::Matrix2cd;

const Cx kImag(0.0, 1.0);

// Cayley element mapping the upper half plane to the disk.
const M2c kCayley = (M2c() << Cx(1, 0), Cx(0, -1), Cx(1, 0), Cx(0, 1)).finished();

// Disk Moebius transformations as SU(1,1) matrices [[a, b], [conj b, conj a]].

M2c mob_to_origin(const Cx& p) {
  double s = std::sqrt(1.0 - std::norm(p));
  M2c M;
  M << Cx(1.0 / s), -p / s, -std::conj(p) / s, Cx(1.0 / s);
  return M;
}

M2c mob_rot(double theta) {
  M2c M = M2c::Zero();
  M(0, 0) = std::polar(1.0, theta / 2);
  M(1, 1) = std::polar(1.0, -theta / 2);
  return M;
}

Cx mob_apply(const M2c& M, const Cx& z) {
  return (M(0, 0) * z + M(0, 1)) / (M(1, 0) * z + M(1, 1));
}

// Frame sending p to 0 and q to a positive real point.
M2c edge_frame(const Cx& p, const Cx& q) {
  M2c T = mob_to_origin(p);
  Cx w = mob_apply(T, q);
  return mob_rot(-std::arg(w)) * T;
}

// The orientation-preserving isometry with p1 -> p2, q1 -> q2 (requires
// equal hyperbolic lengths, which holds for congruent polygon sides).
M2c pair_map(const Cx& p1, const Cx& q1, const Cx& p2, const Cx& q2) {
  M2c F1 = edge_frame(p1, q1);
  M2c F2 = edge_frame(p2, q2);
  return F2.inverse() * F1;
}

// Side-pairing generators of the regular 4g-gon in SU(1,1). Edge k runs
// from vertex k to vertex k+1 counterclockwise and the boundary reads
// a1 b1 a1^- b1^- a2 b2 a2^- b2^-...; every pairing glues with an endpoint
// swap. The vertex cycle of this gluing spells
//   a1 B1 A1 b1 a2 B2 A2 b2 ... = 1
// for the raw pairing maps, so taking the b-generators to be the inverse
// pairings (b^+ edge onto b^- edge) turns it into the standard relator
// prod [a_i, b_i] = 1.
std::vector<M2c> polygon_generators_su11(int genus) {
  int n = 4 * genus;
  double coshR = 1.0 / std::pow(std::tan(M_PI / n), 2); // cot^2(pi/n)
  double re = std::sqrt((coshR - 1.0) / (coshR + 1.0)); // tanh(R/2)
  std::vector<Cx> v(n);
  for (int k = 0; k < n; ++k) v[k] = std::polar(re, (2.0 * k + 1.0) * M_PI / n);

  std::vector<M2c> gens(2 * genus);
  for (int i = 0; i < genus; ++i) {
    int base = 4 * i;
    auto P = [&](int k) { return v[k % n]; };
    // a_i: edge base+2 (inverted) onto edge base (straight), endpoints swapped
    gens[2 * i] = pair_map(P(base + 2), P(base + 3), P(base + 1), P(base));
    // b_i: edge base+1 onto edge base+3
    gens[2 * i + 1] = pair_map(P(base + 1), P(base + 2), P(base + 4), P(base + 3));
  }
  return gens;
}

Eigen::Matrix2d real_part_checked(const M2c& M, double tol = 1e-9) {
  Eigen::Matrix2d R;
  double imax = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      R(i, j) = M(i, j).real();
      imax = std::max(imax, std::abs(M(i, j).imag()));
    }
  if (imax > tol) throw DomainError("matrix is not real");
  return R;
}

Qd quat_of(const Cx& z) { return from_complex(z); }

} // namespace

std::vector<Eigen::Matrix2d> fuchsian_generators(int genus) {
  if (genus < 2) throw DomainError("fuchsian_generators: genus must be >= 2");
  std::vector<Eigen::Matrix2d> out;
  for (const M2c& N : polygon_generators_su11(genus))
    out.push_back(su11_to_sl2(N));
  return out;
}

Eigen::Matrix2cd to_su11(const Eigen::Matrix2d& M) {
  if (std::abs(M.determinant() - 1.0) > 1e-9) throw DetNotOne("to_su11: det != 1");
  return kCayley * M.cast<Cx>() * kCayley.inverse();
}

Eigen::Matrix2d su11_to_sl2(const Eigen::Matrix2cd& N) {
  return real_part_checked(kCayley.inverse() * N * kCayley);
}

QMat3 embed_su11(const Eigen::Matrix2cd& N) {
  Eigen::Matrix2cd eta = Eigen::Vector2cd(1, -1).asDiagonal();
  if ((N.adjoint() * eta * N - eta).norm() > 1e-9)
    throw NotInSU11("embed_su11: form diag(1,-1) not preserved");
  QMat3 M = QMat3::Zero();
  M(0, 0) = Qd(1);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) M(i + 1, j + 1) = quat_of(N(i, j));
  return M;
}

QMat3 embed_so21(const Eigen::Matrix3d& M) {
  Eigen::Matrix3d J = Eigen::Vector3d(1, 1, -1).asDiagonal();
  if ((M.transpose() * J * M - J).norm() > 1e-9)
    throw NotInSO21("embed_so21: form diag(1,1,-1) not preserved");
  QMat3 Q;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) Q(i, j) = Qd(M(i, j));
  return Q;
}

Eigen::Matrix3d sym_square(const Eigen::Matrix2d& M) {
  if (std::abs(M.determinant() - 1.0) > 1e-9) throw DetNotOne("sym_square: det != 1");
  // basis u1 = [[1,0],[0,-1]], u2 = [[0,1],[1,0]], u3 = I of symmetric
  // matrices; S = a u1 + b u2 + c u3 has -det(S) = a^2 + b^2 - c^2
  auto coords = [](const Eigen::Matrix2d& S) {
    return Eigen::Vector3d((S(0, 0) - S(1, 1)) / 2, S(0, 1), (S(0, 0) + S(1, 1)) / 2);
  };
  Eigen::Matrix2d u[3];
  u[0] << 1, 0, 0, -1;
  u[1] << 0, 1, 1, 0;
  u[2] << 1, 0, 0, 1;
  Eigen::Matrix3d R;
  for (int c = 0; c < 3; ++c) R.col(c) = coords(M * u[c] * M.transpose());
  return R;
}

QMat3 evaluate_word(const SurfaceRep& rep, const Word& w) {
  QMat3 R = QMat3::Identity();
  for (int l : w.letters) {
    int gen = std::abs(l) - 1;
    if (gen < 0 || gen >= int(rep.images.size()))
      throw DomainError("word letter out of range");
    R = R * (l > 0 ? rep.images[gen] : sp_inverse<double, 3>(rep.images[gen]));
  }
  return R;
}

double relator_residual(const SurfaceRep& rep) {
  QMat3 R = evaluate_word(rep, rep.pres.relator);
  QMat3 I = QMat3::Identity();
  return std::min(frob(R - I), frob(R + I));
}

void validate_surface_rep(const SurfaceRep& rep) {
  rep.pres.validate();
  if (int(rep.images.size()) != rep.pres.num_generators())
    throw DomainError("wrong number of generator images");
  for (const QMat3& A : rep.images)
    if (!is_in_sp<3>(A, rep.tol * (1.0 + frob(A))))
      throw NotInGroup("generator image is not in Sp(2,1)");
  double res = relator_residual(rep);
  if (res > rep.tol * 100)
    throw DomainError("relator residual " + std::to_string(res) + " exceeds tolerance");
}

SurfaceRep fuchsian_su11_rep(int genus) {
  SurfaceRep rep(genus);
  for (const M2c& N : polygon_generators_su11(genus)) rep.images.push_back(embed_su11(N));
  validate_surface_rep(rep);
  return rep;
}

SurfaceRep fuchsian_so21_rep(int genus) {
  SurfaceRep rep(genus);
  for (const Eigen::Matrix2d& M : fuchsian_generators(genus))
    rep.images.push_back(embed_so21(sym_square(M)));
  validate_surface_rep(rep);
  return rep;
}

} // namespace qhsp
