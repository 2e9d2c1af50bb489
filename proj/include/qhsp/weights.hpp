#pragma once

#include <array>
#include <utility>

#include "qhsp/scalars.hpp"

namespace qhsp {

//------------------------------------------------------------------------------
// Exact weight computation for sp(4,C) acting on 2-forms
//------------------------------------------------------------------------------
// Everything in this module is exact over Q(i). The symplectic form is
// omega = dz1^dz3 + dz4^dz2, with matrix Q = [[0, eta], [-eta, 0]],
// eta = diag(1,-1). A Lie algebra element acts on one-forms as the negative
// transpose of its vector action, which is the convention that makes the
// induced map on 2-forms a Lie algebra homomorphism.

/// 2-form as coefficients on dz_a ^ dz_b in the fixed pair order
/// (1,2), (1,3), (1,4), (2,3), (2,4), (3,4).
using TwoForm = std::array<CRat, 6>;

using Sp4Mat = std::array<std::array<CRat, 4>, 4>;
using W6Mat = std::array<std::array<CRat, 6>, 6>;
using W5Mat = std::array<std::array<CRat, 5>, 5>;

/// Coefficient of alpha ^ beta on dz1^dz2^dz3^dz4.
CRat wedge4(const TwoForm& alpha, const TwoForm& beta);

/// The symplectic form omega as a 2-form.
TwoForm omega_form();

/// Orthonormal 2-form basis omega_1 .. omega_6 (omega_6 = omega).
std::array<TwoForm, 6> omega_basis();

/// Basis v_1 .. v_5 of W = (C omega)^perp. Stored unnormalized (no sqrt 2),
/// so P(v1,v3) = P(v2,v4) = 2 while P(v5,v5) = 1.
std::array<TwoForm, 5> w_5basis();

/// The unique c with alpha ^ beta = c * (omega ^ omega).
CRat wedge_quadratic_P(const TwoForm& alpha, const TwoForm& beta);

/// X^t Q + Q X = 0, exactly.
bool in_sp4(const Sp4Mat& X);

/// Assemble an sp(4,C) element from its free block entries: A arbitrary,
/// B and C with b12 = -b21, D forced to -eta A^t eta.
Sp4Mat sp4_from_blocks(const std::array<CRat, 4>& A, const CRat& b11, const CRat& b22,
                       const CRat& b21, const CRat& c11, const CRat& c22, const CRat& c21);

/// Cartan element diag(x, y, -x, -y).
Sp4Mat sp4_cartan(const Rational& x, const Rational& y);

/// Derivation action on the 2-form coefficient basis; 6x6 exact matrix.
/// Throws NotInSp4 when the membership equation fails.
W6Mat sp4_on_2forms(const Sp4Mat& X);

/// Matrix of the restriction to W in the v-basis. Requires the input to
/// annihilate omega and preserve W (throws NotPreservingW otherwise).
W5Mat restrict_to_W(const W6Mat& M);

/// Bracket helpers for the exact matrices.
Sp4Mat sp4_bracket(const Sp4Mat& X, const Sp4Mat& Y);
W5Mat w5_bracket(const W5Mat& X, const W5Mat& Y);

/// Gram matrix of P in the v-basis; P-skewness of M means
/// M^t P + P M = 0.
W5Mat p_gram();
bool is_p_skew(const W5Mat& M);

/// Weight as an exact pair of coefficients on (L1, L2).
struct Weight {
  Rational l1, l2;
  bool operator==(const Weight&) const = default;
};

/// Images h1 = (1,1,-1,-1,0), h2 = (-1,1,1,-1,0) of the two Cartan
/// generators, computed (not hardcoded).
std::pair<std::array<Rational, 5>, std::array<Rational, 5>> cartan_images();

/// Solves the exact 2x2 system expressing the sp(4,C) weights in the
/// so(5,C) dual basis; returns (L1', L2') = ((1/2,1/2), (-1/2,1/2)).
std::pair<Weight, Weight> weight_transform();

/// True iff w = c u for a rational c. Throws ZeroWeight when u = 0.
bool is_multiple(const Weight& w, const Weight& u);

/// The artifact statement of the spin lemma: the standard so(5,C) highest
/// weight L1 is not a multiple of the transported sp(4,C) highest weight.
bool lemma_spin_holds();

} // namespace qhsp
