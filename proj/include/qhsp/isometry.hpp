#pragma once

#include <optional>
#include <vector>

#include "qhsp/qmatrix.hpp"

namespace qhsp {

//------------------------------------------------------------------------------
// Classification of isometries of the quaternionic hyperbolic plane
//------------------------------------------------------------------------------

enum class IsometryKind { Elliptic, Parabolic, Loxodromic };

struct IsometryClass {
  IsometryKind kind;
  std::complex<double> top_eigenvalue; // witness: largest-modulus eigenvalue
  double eigenbasis_condition;         // witness: condition of the eigenbasis
};

struct ClassifyConfig {
  double group_tol = 1e-7;  // membership residual
  double unit_band = 1e-7;  // eigenvalue modulus band around 1
  double cond_max = 1e8;    // diagonalizability threshold
};

/// Trichotomy on the complexified 6x6 spectrum: loxodromic iff some
/// eigenvalue has modulus > 1 + band; elliptic iff all moduli are within the
/// band and the matrix is diagonalizable; parabolic otherwise.
IsometryClass classify(const QMat3& A, const ClassifyConfig& cfg = {});

const char* to_string(IsometryKind k);

//------------------------------------------------------------------------------
// Parabolic normal form of the quaternionic-line stabilizer
//------------------------------------------------------------------------------

/// The 2x2 block [[a, l-a], [a-l, 2l-a]] with l = 1/a + i sqrt(1 - 1/a^2),
/// the center parabolic fixing the boundary point (0,1,1). Requires a >= 1;
/// a = 1 gives the identity.
QMat2 parabolic_center_solve(double a);

/// diag(q, B) as a 3x3 matrix over H.
QMat3 embed_block(const QMat2& B, const Qd& q = Qd(1));

//------------------------------------------------------------------------------
// Quaternionic lines
//------------------------------------------------------------------------------

/// A quaternionic line (projectively: totally geodesic H^1_H), stored as a
/// spanning pair normalized so the restricted Hermitian form is diag(1,-1).
struct QLine {
  QVec3 u_plus;  // <u+,u+> = 1
  QVec3 u_minus; // <u-,u-> = -1, <u+,u-> = 0
};

/// Normalize a spanning pair; throws DegenerateLine when the restricted form
/// is degenerate or not of signature (1,1).
QLine make_qline(const QVec3& w1, const QVec3& w2, double tol = 1e-9);

/// Standard line span{e2, e3}.
QLine standard_qline();

/// Orthogonal H-projection onto the line (signature-aware).
QVec3 qline_project(const QLine& line, const QVec3& v);

/// Does v lie on the line (up to right scalars), within tol?
bool qline_contains(const QLine& line, const QVec3& v, double tol = 1e-7);

/// Same span test for two lines.
bool qline_equal(const QLine& a, const QLine& b, double tol = 1e-7);

/// Image line g(L).
QLine qline_apply(const QMat3& g, const QLine& line);

/// True iff A maps the H-span of the line to itself within tol.
bool stabilizes_qline(const QMat3& A, const QLine& line, double tol = 1e-7);

/// Candidate invariant lines of a single element, from the H-spans of pairs
/// of complexified eigenvectors. Degenerate pairs are skipped.
std::vector<QLine> invariant_qline_candidates(const QMat3& g, double tol = 1e-9);

/// A common invariant quaternionic line of all generators, if the eigenline
/// search finds one; std::nullopt otherwise.
std::optional<QLine> invariant_qline_search(const std::vector<QMat3>& gens,
                                            double tol = 1e-7);

//------------------------------------------------------------------------------
// Metric growth along a ray
//------------------------------------------------------------------------------

/// delta_t = (e^t - 1)/(e^t + 1).
double ray_delta(double t);

/// Squared length of v = (v1, v2) transported along the unit-speed ray,
///   2 d/(1-d^2) |v1+v2|^2 + (1-d)/(1+d) (|v1|^2+|v2|^2),  d = delta_t.
/// Both algebraic forms are evaluated and must agree to 1e-10 relative.
double ray_length_sq(const Qd& v1, const Qd& v2, double t);

/// The two algebraic routes separately (expanded display, unexpanded form).
std::pair<double, double> ray_length_sq_forms(const Qd& v1, const Qd& v2, double t);

/// +1 when v1 + v2 != 0 (squared length grows like e^t), -1 when
/// v1 + v2 = 0 (decays like e^{-t}). Throws ZeroVector on v = 0.
int decay_exponent(const Qd& v1, const Qd& v2, double tol = 1e-12);

} // namespace qhsp
