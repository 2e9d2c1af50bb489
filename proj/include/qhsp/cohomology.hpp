#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <vector>

#include "qhsp/lie.hpp"
#include "qhsp/surfrep.hpp"

namespace qhsp {

//------------------------------------------------------------------------------
// Group cohomology of one-relator presentations with twisted coefficients
//------------------------------------------------------------------------------
// Cocycle convention (fixed across all modules): u(gh) = u(g) + rho(g) u(h),
// so principal coboundaries are d0(v)(s) = v - rho(s) v and d1 is the Fox
// Jacobian of the relator in the same convention. The fundamental 2-chain of
// the relator s_1...s_L is sum_{+} [p_{i-1}|s_i] - sum_{-} [p_i|s_i], where
// p_i are the prefixes and the second sum runs over inverse letters.

/// A presentation with generator images: the surface case or any other
/// one-relator group (the order-by-order conjugation test uses a cyclic one).
struct GroupRep {
  int num_gens = 0;
  Word relator;
  std::vector<QMat3> images;
  double tol = 1e-9;
};

GroupRep group_rep(const SurfaceRep& rep);
QMat3 evaluate_word(const std::vector<QMat3>& images, const Word& w);

/// Coefficient module: generator-indexed invertible matrices.
struct CoefficientModule {
  int dim = 0;
  std::vector<Eigen::MatrixXd> action;
  std::vector<Eigen::MatrixXd> action_inv;

  Eigen::MatrixXd word_action(const Word& w) const;
};

/// Names of the sp(2,1) summands used throughout (H2 is the quaternionic
/// vector block, W the complement of u(1,1) inside sp(1,1)).
enum class Block { All, Sp1, Sp11, H2, W, Trivial };
Block block_from_name(const std::string& name);
const char* block_name(Block b);

/// dim x 21 embedding of a block into the fixed sp(2,1) coordinates
/// (columns of the returned 21 x dim matrix).
Eigen::MatrixXd block_embedding(Block b);

/// Trivial R^dim module.
CoefficientModule trivial_module(int num_gens, int dim = 1);

/// Full adjoint module Ad o rho on the 21 sp(2,1) coordinates.
CoefficientModule adjoint_module(const GroupRep& rep);

/// Restriction of the adjoint module to an invariant block; throws
/// DomainError when the block is not invariant under the images.
CoefficientModule block_module(const GroupRep& rep, Block b);

//------------------------------------------------------------------------------
// Chain complex, dimensions, cocycles
//------------------------------------------------------------------------------

struct CochainComplex {
  int num_gens = 0;
  int dim = 0;
  Eigen::MatrixXd d0; // (num_gens dim) x dim
  Eigen::MatrixXd d1; // dim x (num_gens dim)
};

/// Fox-calculus complex; throws ActionRelatorMismatch when the module action
/// of the relator is not the identity.
CochainComplex fox_complex(int num_gens, const Word& relator, const CoefficientModule& coeff);

struct CohomologyDims {
  int h0 = 0, h1 = 0, h2 = 0;
};

/// Ranks by singular value thresholding at rank_tol * sigma_max.
CohomologyDims cohomology_dims(const CochainComplex& cc, double rank_tol = 1e-7);

/// A 1-cochain with generator-indexed coefficient vectors, stacked.
struct Cocycle {
  int dim = 0;
  Eigen::VectorXd values; // num_gens blocks of length dim

  Eigen::VectorXd value(int gen) const { return values.segment(gen * dim, dim); }
};

/// Orthonormal basis of a complement of im d0 inside ker d1.
std::vector<Cocycle> h1_basis(const CochainComplex& cc, double rank_tol = 1e-7);

/// Cocycle evaluation on a word in the chosen convention.
Eigen::VectorXd evaluate_cocycle(const CoefficientModule& coeff, const Cocycle& u,
                                 const Word& w);

/// Evaluation of the cup 2-cocycle (alpha, beta) -> bilinear(u(alpha),
/// rho(alpha) u'(beta)) on the fundamental 2-chain of the relator.
Eigen::VectorXd cup_evaluate(const Word& relator, const CoefficientModule& coeff,
                             const Cocycle& u, const Cocycle& uprime,
                             const std::function<Eigen::VectorXd(const Eigen::VectorXd&,
                                                                 const Eigen::VectorXd&)>& bilinear);

/// Scalar cup pairing for trivial R coefficients (the intersection form
/// calibration). Returns <u cup u', fundamental chain>.
double cup_pair_scalar(const Word& relator, const CoefficientModule& coeff, const Cocycle& u,
                       const Cocycle& uprime);

//------------------------------------------------------------------------------
// The cup square obstruction in H^2 = H^0 = sp(1) + u(1)
//------------------------------------------------------------------------------

/// Identification of coker d1 with the invariants: class vectors decompose
/// uniquely as (invariant part) + d1(xi). Coordinates are reported on the
/// basis diag(i,0,0), diag(j,0,0), diag(k,0,0), diag(0,i,i) of
/// sp(1) + u(1).
class H2Identifier {
public:
  /// Needs the full adjoint complex of the representation; throws
  /// FormDegenerate when invariants meet im d1.
  explicit H2Identifier(const CochainComplex& adjoint_cc, double tol = 1e-7);

  /// (sp1_i, sp1_j, sp1_k, u1) coordinates of the class of v.
  Eigen::Vector4d identify(const Eigen::VectorXd& v) const;

  /// The invariant basis as 21-vectors.
  static Eigen::Matrix<double, 21, 4> h0_basis();

private:
  Eigen::MatrixXd m_system; // [h0 basis | d1]
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> m_solver;
  double m_tol;
};

struct H2Class {
  Eigen::VectorXd rep21;     // raw evaluation vector in sp(2,1) coordinates
  Eigen::Vector4d h0_coords; // identified (sp1 i, j, k, u1) coordinates
};

/// Cohomology data of one representation, built once and shared by the cup
/// machinery and the solvers.
class CupContext {
public:
  explicit CupContext(const GroupRep& rep);

  const GroupRep& rep() const { return m_rep; }
  const CoefficientModule& adjoint() const { return m_adjoint; }
  const CochainComplex& adjoint_complex() const { return m_cc; }

  /// The sp(1) + u(1) identification; only available when the invariants of
  /// the representation are exactly that algebra (the Fuchsian case).
  const H2Identifier& identifier() const;
  bool has_identifier() const { return m_ident.has_value(); }

  /// Cup square [u, u] of a 21-coordinate adjoint cocycle, evaluated on the
  /// fundamental chain and identified in H^0 coordinates. cocycle_tol bounds
  /// ||d1 u|| / ||u|| (NotACocycle beyond it).
  H2Class cup_square(const Cocycle& u, double cocycle_tol = 1e-6) const;

  /// Symmetrized cup class of a pair.
  H2Class cup_pair(const Cocycle& u, const Cocycle& v, double cocycle_tol = 1e-6) const;

  /// Raw symmetrized evaluation vector on the fundamental chain.
  Eigen::VectorXd cup_raw(const Cocycle& u, const Cocycle& v, double cocycle_tol = 1e-6) const;

  /// Basis-free class norm: the evaluation vector with its im(d1) component
  /// projected away. Works for every representation.
  double cup_square_norm(const Cocycle& u, double cocycle_tol = 1e-6) const;

private:
  GroupRep m_rep;
  CoefficientModule m_adjoint;
  CochainComplex m_cc;
  std::optional<H2Identifier> m_ident;
  Eigen::MatrixXd m_d1_image; // orthonormal basis of im d1
};

/// Embed a block cocycle into the 21-coordinate adjoint complex.
Cocycle embed_cocycle(Block b, const Cocycle& u);

//------------------------------------------------------------------------------
// Surjectivity solvers and the flexibility construction
//------------------------------------------------------------------------------

/// Cocycle with trivial sp(1) coefficients whose cup square class has sp(1)
/// part equal to target (3-vector) and u(1) part zero. Returns the embedded
/// 21-coordinate cocycle.
Cocycle solve_sp1_square(const Eigen::Vector3d& target, const CupContext& ctx);

/// W-block cocycle whose cup square has u(1) coordinate equal to target and
/// vanishing sp(1) part. Throws FormDegenerate when the quadratic form on
/// H^1(W) is rank deficient.
Cocycle solve_sp11_square(double target, const CupContext& ctx);

struct FlexResult {
  Cocycle x;       // u + v + w
  Cocycle v_sp1;   // sp(1) corrector
  Cocycle w_block; // W corrector
};

/// The flexibility construction: for a nonzero H^2-block cocycle u, returns
/// x = u + v + w with vanishing cup square class and H^2 component u.
FlexResult flex_deform(const Cocycle& u_h2block, const CupContext& ctx);

} // namespace qhsp
