#include "qhsp/isometry.hpp"

#include <algorithm>
#include <cmath>

#include "qhsp/errors.hpp"

namespace qhsp {

//------------------------------------------------------------------------------
// Classification
//------------------------------------------------------------------------------

IsometryClass classify(const QMat3& A, const ClassifyConfig& cfg) {
  if (!is_in_sp<3>(A, cfg.group_tol * (1.0 + frob(A))))
    throw NotInGroup("classify: A is not in Sp(2,1)");

  Eigen::ComplexEigenSolver<CMat> es(complexify<3>(A));
  Eigen::VectorXcd lam = es.eigenvalues();
  double maxmod = 0;
  std::complex<double> top = 0;
  for (int i = 0; i < lam.size(); ++i)
    if (std::abs(lam(i)) > maxmod) {
      maxmod = std::abs(lam(i));
      top = lam(i);
    }

  Eigen::JacobiSVD<CMat> svd(es.eigenvectors());
  const auto& sv = svd.singularValues();
  double cond = sv(0) / std::max(sv(sv.size() - 1), 1e-300);

  // Jordan blocks split their eigenvalues by about sqrt(eps * ||A||), so the
  // unit band is applied relative to the matrix scale.
  double band = cfg.unit_band * (1.0 + frob(A));
  IsometryClass cls{IsometryKind::Parabolic, top, cond};
  if (maxmod > 1.0 + band)
    cls.kind = IsometryKind::Loxodromic;
  else if (cond < cfg.cond_max)
    cls.kind = IsometryKind::Elliptic;
  return cls;
}

const char* to_string(IsometryKind k) {
  switch (k) {
    case IsometryKind::Elliptic: return "Elliptic";
    case IsometryKind::Parabolic: return "Parabolic";
    default: return "Loxodromic";
  }
}

//------------------------------------------------------------------------------
// Parabolic normal form
//------------------------------------------------------------------------------

QMat2 parabolic_center_solve(double a) {
  if (a < 1.0) throw DomainError("parabolic_center_solve: a must be >= 1");
  Qd lam(1.0 / a, std::sqrt(std::max(0.0, 1.0 - 1.0 / (a * a))), 0.0, 0.0);
  Qd qa(a);
  QMat2 B;
  B << qa, lam - qa, qa - lam, Qd(2) * lam - qa;
  return B;
}

QMat3 embed_block(const QMat2& B, const Qd& q) {
  QMat3 M = QMat3::Zero();
  M(0, 0) = q;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) M(i + 1, j + 1) = B(i, j);
  return M;
}

//------------------------------------------------------------------------------
// Quaternionic lines
//------------------------------------------------------------------------------

namespace {

double vec_norm(const QVec3& v) { return frob(v); }

// Signed norm <v,v> (real by construction).
double self_pairing(const QVec3& v) { return herm<double, 3>(v, v).w; }

} // namespace

QLine make_qline(const QVec3& w1, const QVec3& w2, double tol) {
  double scale = vec_norm(w1) * vec_norm(w1) + vec_norm(w2) * vec_norm(w2);
  if (scale < tol) throw DegenerateLine("zero spanning vectors");

  // pick the spanning combination with the largest |<v,v>| / ||v||^2
  std::vector<QVec3> cands = {w1, w2, w1 + w2, w1 - w2};
  const QVec3* best = nullptr;
  double best_ratio = 0;
  for (const auto& c : cands) {
    double n = vec_norm(c);
    if (n < 1e-14) continue;
    double r = std::abs(self_pairing(c)) / (n * n);
    if (r > best_ratio) {
      best_ratio = r;
      best = &c;
    }
  }
  if (!best || best_ratio < tol)
    throw DegenerateLine("restricted form vanishes on the span");

  double s1 = self_pairing(*best);
  double e1 = s1 > 0 ? 1.0 : -1.0;
  QVec3 u = *best / Qd(std::sqrt(std::abs(s1)));

  // orthogonalize the more independent of w1, w2 against u
  auto residual = [&](const QVec3& w) {
    return QVec3(w - u * (Qd(e1) * herm<double, 3>(u, w)));
  };
  QVec3 r1 = residual(w1), r2 = residual(w2);
  QVec3 v = vec_norm(r1) > vec_norm(r2) ? r1 : r2;
  double s2 = self_pairing(v);
  double n2 = vec_norm(v);
  if (n2 < tol || std::abs(s2) / (n2 * n2) < tol)
    throw DegenerateLine("restricted form is degenerate");
  double e2 = s2 > 0 ? 1.0 : -1.0;
  if (e1 == e2) throw DegenerateLine("span is not of signature (1,1)");
  v = v / Qd(std::sqrt(std::abs(s2)));

  QLine L;
  L.u_plus = e1 > 0 ? u : v;
  L.u_minus = e1 > 0 ? v : u;
  return L;
}

QLine standard_qline() {
  QVec3 e2 = QVec3::Zero(), e3 = QVec3::Zero();
  e2(1) = Qd(1);
  e3(2) = Qd(1);
  return make_qline(e2, e3);
}

QVec3 qline_project(const QLine& line, const QVec3& v) {
  return QVec3(line.u_plus * herm<double, 3>(line.u_plus, v) -
               line.u_minus * herm<double, 3>(line.u_minus, v));
}

bool qline_contains(const QLine& line, const QVec3& v, double tol) {
  double n = vec_norm(v);
  if (n < 1e-14) return true;
  return vec_norm(QVec3(v - qline_project(line, v))) < tol * n;
}

bool qline_equal(const QLine& a, const QLine& b, double tol) {
  return qline_contains(a, b.u_plus, tol) && qline_contains(a, b.u_minus, tol) &&
         qline_contains(b, a.u_plus, tol) && qline_contains(b, a.u_minus, tol);
}

QLine qline_apply(const QMat3& g, const QLine& line) {
  return make_qline(QVec3(g * line.u_plus), QVec3(g * line.u_minus));
}

bool stabilizes_qline(const QMat3& A, const QLine& line, double tol) {
  for (const QVec3& u : {line.u_plus, line.u_minus}) {
    QVec3 img = A * u;
    if (!qline_contains(line, img, tol)) return false;
  }
  return true;
}

std::vector<QLine> invariant_qline_candidates(const QMat3& g, double tol) {
  Eigen::ComplexEigenSolver<CMat> es(complexify<3>(g));
  CMat V = es.eigenvectors();

  // quaternionic representatives, right-normalized by the largest coordinate
  std::vector<QVec3> xs;
  for (int c = 0; c < 6; ++c) {
    QVec3 x = realify_vec<3>(V.col(c));
    int imax = 0;
    double m = 0;
    for (int i = 0; i < 3; ++i)
      if (x(i).norm_sq() > m) {
        m = x(i).norm_sq();
        imax = i;
      }
    if (m < 1e-20) continue;
    x = x * x(imax).inverse();
    // snap tiny components so exact block structures give exact spans
    for (int i = 0; i < 3; ++i) {
      for (double* comp : {&x(i).w, &x(i).x, &x(i).y, &x(i).z})
        if (std::abs(*comp) < 1e-12) *comp = 0.0;
    }
    xs.push_back(x);
  }

  std::vector<QLine> lines;
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = i + 1; j < xs.size(); ++j) {
      try {
        QLine L = make_qline(xs[i], xs[j], std::max(tol, 1e-7));
        bool dup = false;
        for (const auto& K : lines)
          if (qline_equal(K, L)) { dup = true; break; }
        if (!dup) lines.push_back(L);
      } catch (const DegenerateLine&) {
        // skipped: pair does not span a signature (1,1) plane
      }
    }
  return lines;
}

std::optional<QLine> invariant_qline_search(const std::vector<QMat3>& gens, double tol) {
  for (const QMat3& seed : gens) {
    for (const QLine& L : invariant_qline_candidates(seed)) {
      bool ok = true;
      for (const QMat3& g : gens)
        if (!stabilizes_qline(g, L, tol)) { ok = false; break; }
      if (ok) return L;
    }
  }
  return std::nullopt;
}

//------------------------------------------------------------------------------
// Ray metric growth
//------------------------------------------------------------------------------

double ray_delta(double t) {
  double e = std::exp(t);
  return (e - 1.0) / (e + 1.0);
}

std::pair<double, double> ray_length_sq_forms(const Qd& v1, const Qd& v2, double t) {
  if (t < 0) throw DomainError("ray_length_sq: t must be >= 0");
  double d = ray_delta(t);
  double n1 = v1.norm_sq(), n2 = v2.norm_sq();
  double cross = (v1 * v2.conj() + v2 * v1.conj()).w; // 2 Re(v1 conj(v2))

  double expanded = 2.0 * d / (1.0 - d * d) * (v1 + v2).norm_sq() +
                    (1.0 - d) / (1.0 + d) * (n1 + n2);
  double unexpanded = (1.0 + d * d) / (1.0 - d * d) * (n1 + n2) +
                      d / (1.0 - d * d) * 2.0 * cross;
  return {expanded, unexpanded};
}

double ray_length_sq(const Qd& v1, const Qd& v2, double t) {
  auto [expanded, unexpanded] = ray_length_sq_forms(v1, v2, t);
  double scale = std::max(1.0, std::abs(expanded));
  if (std::abs(expanded - unexpanded) > 1e-10 * scale)
    throw DomainError("ray_length_sq: algebraic forms disagree");
  return expanded;
}

int decay_exponent(const Qd& v1, const Qd& v2, double tol) {
  double scale = std::sqrt(v1.norm_sq() + v2.norm_sq());
  if (scale < tol) throw ZeroVector("decay_exponent: v = 0");
  return qabs(v1 + v2) < tol * scale ? -1 : +1;
}

} // namespace qhsp
