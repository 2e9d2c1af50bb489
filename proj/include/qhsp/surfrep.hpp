#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qhsp/presentation.hpp"
#include "qhsp/qmatrix.hpp"

namespace qhsp {

//------------------------------------------------------------------------------
// Fuchsian surface groups and the embeddings into Sp(2,1)
//------------------------------------------------------------------------------

/// Side-pairing generators of the regular 4g-gon with vertex angle 2 pi / 4g,
/// returned in SL(2,R). The surface relator prod [A_i, B_i] evaluates to
/// +-I within 1e-9; every generator is loxodromic.
std::vector<Eigen::Matrix2d> fuchsian_generators(int genus);

/// Cayley conjugation SL(2,R) -> SU(1,1) by the fixed element [[1,-i],[1,i]].
/// Throws DetNotOne when det M != 1.
Eigen::Matrix2cd to_su11(const Eigen::Matrix2d& M);

/// Inverse Cayley conjugation; the result is real for N in SU(1,1).
Eigen::Matrix2d su11_to_sl2(const Eigen::Matrix2cd& N);

/// diag(1, N) with complex entries read as quaternions. Requires N in
/// SU(1,1) (throws NotInSU11); the image stabilizes the standard line.
QMat3 embed_su11(const Eigen::Matrix2cd& N);

/// A real diag(1,1,-1)-orthogonal matrix viewed quaternionically lands in
/// Sp(2,1). Throws NotInSO21 when the orthogonality fails.
QMat3 embed_so21(const Eigen::Matrix3d& M);

/// Symmetric-square image SL(2,R) -> SO(2,1) on the basis
/// [[1,0],[0,-1]], [[0,1],[1,0]], [[1,0],[0,1]] of symmetric matrices,
/// with the quadratic form -det of signature (2,1).
Eigen::Matrix3d sym_square(const Eigen::Matrix2d& M);

//------------------------------------------------------------------------------
// Surface representations in Sp(2,1)
//------------------------------------------------------------------------------

struct SurfaceRep {
  SurfacePresentation pres;
  std::vector<QMat3> images; // generator order a1, b1, a2, b2, ...
  double tol = 1e-9;

  explicit SurfaceRep(int genus = 2) : pres(genus) {}
};

/// Word evaluation; inverse letters use the form inverse J' A* J'.
QMat3 evaluate_word(const SurfaceRep& rep, const Word& w);

/// min(||R - I||, ||R + I||) for the relator image R (the lift may close to
/// the negative identity).
double relator_residual(const SurfaceRep& rep);

/// Every image in Sp(2,1) and the relator within rep.tol of +-I; throws
/// DomainError on failure.
void validate_surface_rep(const SurfaceRep& rep);

/// Genus-g Fuchsian group embedded through SU(1,1) -> Sp(1,1) -> Sp(2,1);
/// stabilizes the standard quaternionic line.
SurfaceRep fuchsian_su11_rep(int genus);

/// The same Fuchsian group through the symmetric square SO(2,1) -> Sp(2,1);
/// all entries real.
SurfaceRep fuchsian_so21_rep(int genus);

} // namespace qhsp
