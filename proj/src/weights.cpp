#include "qhsp/weights.hpp"

#include <algorithm>

#include "qhsp/errors.hpp"

namespace qhsp {

namespace {

// pair order (1,2),(1,3),(1,4),(2,3),(2,4),(3,4), 0-indexed below
constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

int pair_index(int a, int b) {
  for (int i = 0; i < 6; ++i)
    if (kPairs[i][0] == a && kPairs[i][1] == b) return i;
  return -1;
}

// sign of the permutation (a,b,c,d) of (0,1,2,3); 0 if not a permutation
int perm_sign4(int a, int b, int c, int d) {
  int p[4] = {a, b, c, d};
  int seen = 0;
  for (int v : p) {
    if (v < 0 || v > 3 || (seen & (1 << v))) return 0;
    seen |= 1 << v;
  }
  int sign = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

const CRat kI = CRat::I();

TwoForm tf_add(const TwoForm& a, const TwoForm& b) {
  TwoForm r;
  for (int i = 0; i < 6; ++i) r[i] = a[i] + b[i];
  return r;
}
TwoForm tf_sub(const TwoForm& a, const TwoForm& b) {
  TwoForm r;
  for (int i = 0; i < 6; ++i) r[i] = a[i] - b[i];
  return r;
}
TwoForm tf_scale(const CRat& c, const TwoForm& a) {
  TwoForm r;
  for (int i = 0; i < 6; ++i) r[i] = c * a[i];
  return r;
}

TwoForm basis_pair(int a, int b, const CRat& c = CRat(1)) {
  TwoForm r{};
  r[pair_index(a, b)] = c;
  return r;
}

const std::array<std::array<CRat, 4>, 4> kQ4 = [] {
  std::array<std::array<CRat, 4>, 4> q{};
  // Q = [[0, eta], [-eta, 0]], eta = diag(1,-1)
  q[0][2] = CRat(1);
  q[1][3] = CRat(-1);
  q[2][0] = CRat(-1);
  q[3][1] = CRat(1);
  return q;
}();

Sp4Mat mat4_mul(const Sp4Mat& a, const Sp4Mat& b) {
  Sp4Mat r{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

// exact linear solve B x = rhs, B 6x6 over Q(i)
std::array<CRat, 6> solve6(std::array<std::array<CRat, 6>, 6> B, std::array<CRat, 6> rhs) {
  for (int col = 0; col < 6; ++col) {
    int piv = -1;
    for (int r = col; r < 6; ++r)
      if (!B[r][col].is_zero()) { piv = r; break; }
    if (piv < 0) throw SingularSystem("singular 2-form basis matrix");
    std::swap(B[piv], B[col]);
    std::swap(rhs[piv], rhs[col]);
    CRat inv = CRat(1) / B[col][col];
    for (int j = 0; j < 6; ++j) B[col][j] = inv * B[col][j];
    rhs[col] = inv * rhs[col];
    for (int r = 0; r < 6; ++r) {
      if (r == col || B[r][col].is_zero()) continue;
      CRat f = B[r][col];
      for (int j = 0; j < 6; ++j) B[r][j] -= f * B[col][j];
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

} // namespace

CRat wedge4(const TwoForm& alpha, const TwoForm& beta) {
  CRat c;
  for (int i = 0; i < 6; ++i) {
    if (alpha[i].is_zero()) continue;
    for (int j = 0; j < 6; ++j) {
      if (beta[j].is_zero()) continue;
      int s = perm_sign4(kPairs[i][0], kPairs[i][1], kPairs[j][0], kPairs[j][1]);
      if (s != 0) c += alpha[i] * beta[j] * CRat(s);
    }
  }
  return c;
}

TwoForm omega_form() {
  // dz1^dz3 + dz4^dz2 = dz1^dz3 - dz2^dz4
  return tf_sub(basis_pair(0, 2), basis_pair(1, 3));
}

std::array<TwoForm, 6> omega_basis() {
  std::array<TwoForm, 6> w;
  w[0] = tf_scale(kI, tf_sub(basis_pair(0, 3), basis_pair(1, 2))); // i(dz1 dz4 - dz2 dz3)
  w[1] = tf_scale(kI, tf_sub(basis_pair(0, 1), basis_pair(2, 3))); // i(dz1 dz2 - dz3 dz4)
  w[2] = tf_scale(kI, tf_add(basis_pair(0, 2), basis_pair(1, 3))); // i(dz1 dz3 - dz4 dz2)
  w[3] = tf_add(basis_pair(0, 3), basis_pair(1, 2));               // dz1 dz4 + dz2 dz3
  w[4] = tf_add(basis_pair(0, 1), basis_pair(2, 3));               // dz1 dz2 + dz3 dz4
  w[5] = omega_form();
  return w;
}

std::array<TwoForm, 5> w_5basis() {
  auto om = omega_basis();
  // v1 = omega1 - i omega4, v3 = omega1 + i omega4 (likewise v2, v4): the
  // i-signs pair with the homomorphic dual action so that the two Cartan
  // generators map to diag(1,1,-1,-1,0) and diag(-1,1,1,-1,0).
  std::array<TwoForm, 5> v;
  v[0] = tf_sub(om[0], tf_scale(kI, om[3]));
  v[1] = tf_sub(om[1], tf_scale(kI, om[4]));
  v[2] = tf_add(om[0], tf_scale(kI, om[3]));
  v[3] = tf_add(om[1], tf_scale(kI, om[4]));
  v[4] = om[2];
  return v;
}

CRat wedge_quadratic_P(const TwoForm& alpha, const TwoForm& beta) {
  static const CRat om2 = wedge4(omega_form(), omega_form());
  return wedge4(alpha, beta) / om2;
}

bool in_sp4(const Sp4Mat& X) {
  // X^t Q + Q X = 0
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      CRat s;
      for (int k = 0; k < 4; ++k) s += X[k][i] * kQ4[k][j] + kQ4[i][k] * X[k][j];
      if (!s.is_zero()) return false;
    }
  return true;
}

Sp4Mat sp4_from_blocks(const std::array<CRat, 4>& A, const CRat& b11, const CRat& b22,
                       const CRat& b21, const CRat& c11, const CRat& c22, const CRat& c21) {
  Sp4Mat X{};
  X[0][0] = A[0];
  X[0][1] = A[1];
  X[1][0] = A[2];
  X[1][1] = A[3];
  X[0][2] = b11;
  X[0][3] = -b21;
  X[1][2] = b21;
  X[1][3] = b22;
  X[2][0] = c11;
  X[2][1] = -c21;
  X[3][0] = c21;
  X[3][1] = c22;
  // D = -eta A^t eta, eta = diag(1,-1)
  X[2][2] = -A[0];
  X[2][3] = A[2];
  X[3][2] = A[1];
  X[3][3] = -A[3];
  return X;
}

Sp4Mat sp4_cartan(const Rational& x, const Rational& y) {
  Sp4Mat X{};
  X[0][0] = CRat(x);
  X[1][1] = CRat(y);
  X[2][2] = CRat(-x);
  X[3][3] = CRat(-y);
  return X;
}

W6Mat sp4_on_2forms(const Sp4Mat& X) {
  if (!in_sp4(X)) throw NotInSp4("matrix does not satisfy X^t Q + Q X = 0");
  // one-form action: dz_a -> -sum_c X[a][c] dz_c
  W6Mat M{};
  for (int col = 0; col < 6; ++col) {
    int a = kPairs[col][0], b = kPairs[col][1];
    TwoForm img{};
    for (int c = 0; c < 4; ++c) {
      // (X dz_a) ^ dz_b
      if (c != b && !X[a][c].is_zero()) {
        int idx = c < b ? pair_index(c, b) : pair_index(b, c);
        CRat sgn = CRat(c < b ? -1 : 1); // minus from the action, swap flips it back
        img[idx] += sgn * X[a][c];
      }
      // dz_a ^ (X dz_b)
      if (c != a && !X[b][c].is_zero()) {
        int idx = a < c ? pair_index(a, c) : pair_index(c, a);
        CRat sgn = CRat(a < c ? -1 : 1);
        img[idx] += sgn * X[b][c];
      }
    }
    for (int row = 0; row < 6; ++row) M[row][col] = img[row];
  }

  // the symplectic form must be annihilated
  TwoForm om = omega_form();
  for (int row = 0; row < 6; ++row) {
    CRat s;
    for (int colc = 0; colc < 6; ++colc) s += M[row][colc] * om[colc];
    if (!s.is_zero()) throw NotInSp4("induced action does not annihilate omega");
  }
  return M;
}

W5Mat restrict_to_W(const W6Mat& M) {
  // change of basis: columns v1..v5, omega in dz-pair coordinates
  auto v = w_5basis();
  TwoForm om = omega_form();
  std::array<std::array<CRat, 6>, 6> B{};
  for (int c = 0; c < 5; ++c)
    for (int r = 0; r < 6; ++r) B[r][c] = v[c][r];
  for (int r = 0; r < 6; ++r) B[r][5] = om[r];

  W5Mat R{};
  for (int c = 0; c < 6; ++c) {
    std::array<CRat, 6> img{};
    for (int r = 0; r < 6; ++r) {
      CRat s;
      for (int k = 0; k < 6; ++k) s += M[r][k] * B[k][c];
      img[r] = s;
    }
    auto coords = solve6(B, img);
    if (c < 5) {
      if (!coords[5].is_zero()) throw NotPreservingW("image of W leaves W");
      for (int r = 0; r < 5; ++r) R[r][c] = coords[r];
    } else {
      for (int r = 0; r < 6; ++r)
        if (!coords[r].is_zero()) throw NotPreservingW("omega is not annihilated");
    }
  }
  return R;
}

Sp4Mat sp4_bracket(const Sp4Mat& X, const Sp4Mat& Y) {
  Sp4Mat a = mat4_mul(X, Y), b = mat4_mul(Y, X);
  Sp4Mat r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = a[i][j] - b[i][j];
  return r;
}

W5Mat w5_bracket(const W5Mat& X, const W5Mat& Y) {
  W5Mat r{};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      CRat s;
      for (int k = 0; k < 5; ++k) s += X[i][k] * Y[k][j] - Y[i][k] * X[k][j];
      r[i][j] = s;
    }
  return r;
}

W5Mat p_gram() {
  auto v = w_5basis();
  W5Mat P{};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) P[i][j] = wedge_quadratic_P(v[i], v[j]);
  return P;
}

bool is_p_skew(const W5Mat& M) {
  W5Mat P = p_gram();
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      CRat s;
      for (int k = 0; k < 5; ++k) s += M[k][i] * P[k][j] + P[i][k] * M[k][j];
      if (!s.is_zero()) return false;
    }
  return true;
}

std::pair<std::array<Rational, 5>, std::array<Rational, 5>> cartan_images() {
  auto extract_diag = [](const W5Mat& M) {
    std::array<Rational, 5> d{};
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        if (i == j) {
          if (!M[i][j].im.is_zero()) throw SingularSystem("non-real Cartan image");
          d[i] = M[i][j].re;
        } else if (!M[i][j].is_zero()) {
          throw SingularSystem("Cartan image is not diagonal");
        }
      }
    return d;
  };
  W5Mat H1 = restrict_to_W(sp4_on_2forms(sp4_cartan(1, 0)));
  W5Mat H2 = restrict_to_W(sp4_on_2forms(sp4_cartan(0, 1)));
  return {extract_diag(H1), extract_diag(H2)};
}

std::pair<Weight, Weight> weight_transform() {
  auto [h1, h2] = cartan_images();
  // so(5) Cartan coordinates of the image of diag(x,y,-x,-y) are
  // (X, Y) = (x h1[0] + y h2[0], x h1[1] + y h2[1]); express x, y back in
  // terms of (X, Y) by the exact 2x2 inverse.
  Rational a = h1[0], b = h2[0], c = h1[1], d = h2[1];
  Rational det = a * d - b * c;
  if (det.is_zero()) throw SingularSystem("Cartan images are linearly dependent");
  Weight L1p{d / det, -b / det};
  Weight L2p{-c / det, a / det};
  return {L1p, L2p};
}

bool is_multiple(const Weight& w, const Weight& u) {
  if (u.l1.is_zero() && u.l2.is_zero()) throw ZeroWeight("reference weight is zero");
  return (w.l1 * u.l2 - w.l2 * u.l1).is_zero();
}

bool lemma_spin_holds() {
  auto [L1p, L2p] = weight_transform();
  (void)L2p;
  return !is_multiple(Weight{1, 0}, L1p);
}

} // namespace qhsp
