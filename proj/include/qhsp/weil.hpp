#pragma once

#include "qhsp/cohomology.hpp"

namespace qhsp {

//------------------------------------------------------------------------------
// Order-by-order conjugation into a subgroup
//------------------------------------------------------------------------------
// A formal curve of homomorphisms is stored through its left-trivialized
// Taylor coefficients: rho_t(s) = (I + sum_j A_j(s) t^j) rho(s). The
// coefficients are full quaternionic matrices (the curve coordinates in
// which the subgroup appears as the linear subspace of block-diagonal
// matrices); only A_1 is constrained to the Lie algebra.

struct FormalCurve {
  GroupRep rep;
  // cochains[j][s] = A_{j+1}(s); missing higher orders are treated as zero
  std::vector<std::vector<QMat3>> cochains;
};

struct WeilOptions {
  int max_order = 3;
  double tol = 1e-8;
};

struct WeilResult {
  // conjugator coefficients v_j in sp(2,1) coordinates, a_j = -d0 v_j + b_j
  std::vector<LieVec> conjugators;
  // normalized coefficients b_j per order, block-diagonal within tolerance
  std::vector<std::vector<QMat3>> normalized;
};

/// Brings the curve into the block-diagonal subgroup Sp(1) x Sp(1,1)
/// (quaternionic-line stabilizer) order by order. The homomorphism equation
/// is verified at each order through the relator series; the order-j
/// obstruction class modulo the subalgebra must be a coboundary, otherwise
/// ObstructionNonzero(j) is thrown.
WeilResult weil_normalize(const FormalCurve& curve, const WeilOptions& opt = {});

/// Synthetic exact curve g(t)^{-1} rho g(t) for g(t) = I + lie(w) t^k,
/// expanded to the given order.
FormalCurve conjugated_constant_curve(const GroupRep& rep, const LieVec& w, int order,
                                      int power = 1);

/// Curve with a single prescribed first-order cochain (higher orders zero).
FormalCurve first_order_curve(const GroupRep& rep, const Cocycle& a1);

} // namespace qhsp
