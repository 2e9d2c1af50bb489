#include "qhsp/weil.hpp"

#include <cmath>

namespace qhsp {

namespace {

using Poly = std::vector<QMat3>; // coefficient of t^k at index k

Poly poly_of(const QMat3& c0, int order) {
  Poly p(order + 1, QMat3::Zero());
  p[0] = c0;
  return p;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  int n = int(a.size()) - 1;
  Poly c(n + 1, QMat3::Zero());
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
  return c;
}

// inverse of a series whose constant term is a group element
Poly poly_inv(const Poly& a) {
  int n = int(a.size()) - 1;
  QMat3 a0i = sp_inverse<double, 3>(a[0]);
  Poly b(n + 1, QMat3::Zero());
  b[0] = a0i;
  for (int k = 1; k <= n; ++k) {
    QMat3 s = QMat3::Zero();
    for (int j = 1; j <= k; ++j) s += a[j] * b[k - j];
    b[k] = QMat3(-(a0i * s));
  }
  return b;
}

Poly word_series(const std::vector<Poly>& gens, const Word& w) {
  int order = int(gens.at(0).size()) - 1;
  Poly R = poly_of(QMat3::Identity(), order);
  for (int l : w.letters) {
    const Poly& g = gens[std::abs(l) - 1];
    R = poly_mul(R, l > 0 ? g : poly_inv(g));
  }
  return R;
}

// exp(W t^p) truncated: group-valued conjugator series
Poly poly_exp(const QMat3& W, int p, int order) {
  Poly g = poly_of(QMat3::Identity(), order);
  QMat3 Wm = QMat3::Identity();
  double fact = 1.0;
  for (int m = 1; m * p <= order; ++m) {
    Wm = Wm * W;
    fact *= m;
    g[m * p] = Wm / Qd(fact);
  }
  return g;
}

// matrix coordinates on M_3(H) = R^36 and the off-block projector
Eigen::Matrix<double, 36, 1> mat_to_vec(const QMat3& M) {
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
}

bool offblock_entry(int i, int j) { return (i == 0) != (j == 0); }

QMat3 offblock(const QMat3& M) {
  QMat3 R = QMat3::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (offblock_entry(i, j)) R(i, j) = M(i, j);
  return R;
}

} // namespace

FormalCurve conjugated_constant_curve(const GroupRep& rep, const LieVec& w, int order,
                                      int power) {
  Poly g = poly_exp(lie_to_matrix(w), power, order);
  Poly gi = poly_inv(g);

  FormalCurve curve;
  curve.rep = rep;
  curve.cochains.assign(order, std::vector<QMat3>(rep.num_gens, QMat3::Zero()));
  for (int s = 0; s < rep.num_gens; ++s) {
    Poly S = poly_mul(poly_mul(gi, poly_of(rep.images[s], order)), g);
    QMat3 rinv = sp_inverse<double, 3>(rep.images[s]);
    for (int j = 1; j <= order; ++j) curve.cochains[j - 1][s] = S[j] * rinv;
  }
  return curve;
}

FormalCurve first_order_curve(const GroupRep& rep, const Cocycle& a1) {
  if (a1.dim != 21) throw DimensionMismatch("expected 21-coordinate cocycle");
  FormalCurve curve;
  curve.rep = rep;
  curve.cochains.assign(1, std::vector<QMat3>(rep.num_gens, QMat3::Zero()));
  for (int s = 0; s < rep.num_gens; ++s)
    curve.cochains[0][s] = lie_to_matrix(a1.value(s));
  return curve;
}

WeilResult weil_normalize(const FormalCurve& curve, const WeilOptions& opt) {
  const GroupRep& rep = curve.rep;
  int n_gens = rep.num_gens;
  int order = std::min<int>(opt.max_order, std::max<int>(1, int(curve.cochains.size())));

  // current series per generator
  std::vector<Poly> S(n_gens);
  std::vector<QMat3> rho_inv(n_gens);
  double scale = 1.0;
  for (int s = 0; s < n_gens; ++s) {
    S[s] = poly_of(rep.images[s], order);
    for (int j = 1; j <= order; ++j)
      if (j - 1 < int(curve.cochains.size())) S[s][j] = curve.cochains[j - 1][s] * rep.images[s];
    rho_inv[s] = sp_inverse<double, 3>(rep.images[s]);
    scale = std::max(scale, frob(rep.images[s]));
  }

  // 36 x 21 embedding of sp(2,1) into matrix coordinates, and the
  // generator-wise coboundary on matrix space restricted to it
  Eigen::Matrix<double, 36, 21> L;
  for (int c = 0; c < 21; ++c) L.col(c) = mat_to_vec(sp21_basis()[c]);

  auto d0_matrix = [&](const QMat3& W, int s) {
    return QMat3(W - QMat3(rep.images[s] * W * rho_inv[s]));
  };

  const QMat3 Jp = jform<double, 3>();

  WeilResult out;
  for (int j = 1; j <= order; ++j) {
    // homomorphism equation at order j: relator series vanishes
    Poly R = word_series(S, rep.relator);
    // relator may close on -I; both lifts conjugate the same way
    double lift = std::min(frob(R[0] - QMat3::Identity()), frob(R[0] + QMat3::Identity()));
    if (lift > 1e-6 * scale) throw DomainError("curve base point violates the relator");
    if (frob(R[j]) > opt.tol * std::pow(scale, double(rep.relator.letters.size())))
      throw DomainError("curve fails the homomorphism equation at order " + std::to_string(j));

    // current coefficients a_j, with the formal group-curve constraint
    //   A_j* J' + J' A_j + sum_k A_k* J' A_{j-k} = 0
    std::vector<QMat3> aj(n_gens);
    double anorm = 0;
    for (int s = 0; s < n_gens; ++s) {
      aj[s] = S[s][j] * rho_inv[s];
      QMat3 C = adjointq(aj[s]) * Jp + Jp * aj[s];
      for (int k = 1; k < j; ++k) {
        QMat3 Ak = S[s][k] * rho_inv[s];
        QMat3 Ajk = S[s][j - k] * rho_inv[s];
        C += adjointq(Ak) * Jp * Ajk;
      }
      if (frob(C) > 100 * opt.tol * (1.0 + frob(aj[s])))
        throw DomainError("curve leaves the group at order " + std::to_string(j));
      anorm = std::max(anorm, frob(offblock(aj[s])));
    }

    if (anorm < opt.tol) {
      out.conjugators.push_back(LieVec::Zero());
      out.normalized.push_back(aj);
      continue;
    }

    // solve off-block(a_j - d0 w) = 0 in least squares over w in sp(2,1)
    Eigen::MatrixXd A(36 * n_gens, 21);
    Eigen::VectorXd rhs(36 * n_gens);
    for (int s = 0; s < n_gens; ++s) {
      for (int c = 0; c < 21; ++c)
        A.block<36, 1>(36 * s, c) = mat_to_vec(offblock(d0_matrix(sp21_basis()[c], s)));
      rhs.segment<36>(36 * s) = mat_to_vec(offblock(aj[s]));
    }
    Eigen::VectorXd w = A.colPivHouseholderQr().solve(rhs);
    double resid = (A * w - rhs).norm();
    if (resid > opt.tol * (1.0 + rhs.norm()))
      throw ObstructionNonzero(j, "class modulo the subalgebra is not a coboundary (residual " +
                                      std::to_string(resid) + ")");

    // conjugate the whole curve by the group-valued exp(lie(w) t^j)
    Poly g = poly_exp(lie_to_matrix(LieVec(w)), j, order);
    Poly gi = poly_inv(g);
    for (int s = 0; s < n_gens; ++s) S[s] = poly_mul(poly_mul(gi, S[s]), g);

    out.conjugators.push_back(LieVec(-w));
    std::vector<QMat3> bj(n_gens);
    for (int s = 0; s < n_gens; ++s) {
      bj[s] = S[s][j] * rho_inv[s];
      if (frob(offblock(bj[s])) > 100 * opt.tol * (1.0 + frob(bj[s])))
        throw DomainError("normalization failed to land in the subgroup at order " +
                          std::to_string(j));
    }
    out.normalized.push_back(bj);
  }
  return out;
}

} // namespace qhsp
