#pragma once

#include <optional>

#include "qhsp/cohomology.hpp"
#include "qhsp/isometry.hpp"
#include "qhsp/surfrep.hpp"

namespace qhsp {

//------------------------------------------------------------------------------
// Bending deformations and Zariski-closure classification
//------------------------------------------------------------------------------

/// The two Sp(1) factors of the pointwise stabilizer of a geodesic in
/// standard position: q acts on the geodesic's coordinate plane span{e2,e3},
/// d on the complement. The induced matrix is diag(d, q, q).
struct FixParams {
  Qd q{1.0};
  Qd d{1.0};
};

/// diag(d, q, q); throws NotUnit unless |q| = |d| = 1.
QMat3 centralizer_element(const FixParams& p);

/// Transport frame: an element of Sp(2,1) mapping the standard geodesic
/// (real points of span{e2,e3}) onto the axis of the loxodromic element.
/// Throws NotLoxodromic / AxisDegenerate.
QMat3 axis_frame(const QMat3& lox, const ClassifyConfig& cfg = {});

/// The centralizer element conjugated to the axis of lox.
QMat3 transported_centralizer(const QMat3& lox, const FixParams& p,
                              const ClassifyConfig& cfg = {});

/// Thurston bending over the separating commutator: generators of the first
/// handle stay, all others are conjugated by the transported centralizer
/// element of rho(c_word). c_word must be the commutator [a1, b1].
SurfaceRep bend_amalgam(const SurfaceRep& rep, const Word& c_word, const FixParams& p);

//------------------------------------------------------------------------------
// Discrete measured laminations
//------------------------------------------------------------------------------

struct BendingCurve {
  Word axis_word;   // the curve's geodesic is the axis of rho(axis_word)
  FixParams weight; // Dirac mass in Fix of the geodesic
};

/// One signed crossing of a generator path with a lift of a lamination
/// curve: the lift is conjugator * (axis), contributing
/// rho(conjugator) E^sign rho(conjugator)^{-1} to the Chasles product.
struct Crossing {
  Word conjugator;
  int curve = 0;
  int sign = +1;
};

struct MeasuredLamination {
  std::vector<BendingCurve> curves;
  std::vector<std::vector<Crossing>> crossings; // indexed by generator
};

/// Built-in genus-2 scenario: the single separating commutator curve
/// (reproduces bend_amalgam).
MeasuredLamination amalgam_lamination(const FixParams& p);

/// Built-in genus-2 scenario: the separating commutator curve plus the
/// disjoint simple closed curve a2.
MeasuredLamination two_curve_lamination(const FixParams& p1, const FixParams& p2);

/// The bent image of one word under rho_lambda.
QMat3 bend_lamination(const SurfaceRep& rep, const MeasuredLamination& lam, const Word& gamma);

/// All generator images bent; throws InconsistentCrossings when the Chasles
/// products violate the relator.
SurfaceRep bend_lamination_rep(const SurfaceRep& rep, const MeasuredLamination& lam);

//------------------------------------------------------------------------------
// Lie closure and hull classification
//------------------------------------------------------------------------------

struct LieClosure {
  int dim = 0;
  std::vector<LieVec> basis;
};

/// Real Lie algebra generated by the principal logarithms of the elements,
/// closed under brackets, with rank decisions at svd_tol * sigma_max.
/// Throws LogDivergent when a logarithm fails.
LieClosure lie_closure(const std::vector<QMat3>& elements, double svd_tol = 1e-7);

/// Dimension of { X in M_3(H) : X rho(g) = rho(g) X for all generators }.
int commutant_dim(const std::vector<QMat3>& images, double svd_tol = 1e-7);

enum class HullKind { Real, Complex, Full, LineStabilizing, Other };
const char* to_string(HullKind k);

struct HullReport {
  HullKind kind = HullKind::Other;
  int closure_dim = 0;
  int commutant_dim = 0;
  std::optional<QLine> invariant_line;
};

/// Combine the closure dimension, commutant dimension and invariant-line
/// search into the hull ladder REAL(3) / COMPLEX(8) / FULL(21).
HullReport hull_classify(const SurfaceRep& rep);

/// (rho_eps(s) rho(s)^{-1} - I)/eps per generator, projected to sp(2,1)
/// coordinates: the finite-difference tangent cocycle of a family.
Cocycle finite_difference_cocycle(const SurfaceRep& base, const SurfaceRep& bent, double eps);

} // namespace qhsp
