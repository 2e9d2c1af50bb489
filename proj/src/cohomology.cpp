#include "qhsp/cohomology.hpp"

#include <algorithm>
#include <cmath>

namespace qhsp {

namespace {

int svd_rank(const Eigen::MatrixXd& M, double rel_tol) {
  if (M.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  double thresh = rel_tol * sv(0);
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > thresh) ++r;
  return r;
}

// columns spanning the null space of M (right singular vectors)
Eigen::MatrixXd null_space(const Eigen::MatrixXd& M, double rel_tol) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double thresh = (sv.size() > 0 && sv(0) > 0) ? rel_tol * sv(0) : 0.0;
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > thresh) ++r;
  return svd.matrixV().rightCols(M.cols() - r);
}

Eigen::VectorXd bracket21(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return lie_bracket(LieVec(a), LieVec(b));
}

} // namespace

//------------------------------------------------------------------------------
// Representations and coefficient modules
//------------------------------------------------------------------------------

GroupRep group_rep(const SurfaceRep& rep) {
  GroupRep g;
  g.num_gens = rep.pres.num_generators();
  g.relator = rep.pres.relator;
  g.images = rep.images;
  g.tol = rep.tol;
  return g;
}

QMat3 evaluate_word(const std::vector<QMat3>& images, const Word& w) {
  QMat3 R = QMat3::Identity();
  for (int l : w.letters) {
    int gen = std::abs(l) - 1;
    if (gen < 0 || gen >= int(images.size())) throw DomainError("word letter out of range");
    R = R * (l > 0 ? images[gen] : sp_inverse<double, 3>(images[gen]));
  }
  return R;
}

Eigen::MatrixXd CoefficientModule::word_action(const Word& w) const {
  Eigen::MatrixXd M = Eigen::MatrixXd::Identity(dim, dim);
  for (int l : w.letters) M = M * (l > 0 ? action[l - 1] : action_inv[-l - 1]);
  return M;
}

Block block_from_name(const std::string& name) {
  if (name == "all") return Block::All;
  if (name == "sp1") return Block::Sp1;
  if (name == "sp11") return Block::Sp11;
  if (name == "h2") return Block::H2;
  if (name == "w") return Block::W;
  if (name == "trivial") return Block::Trivial;
  throw ParseError("unknown block name: " + name);
}

const char* block_name(Block b) {
  switch (b) {
    case Block::All: return "all";
    case Block::Sp1: return "sp1";
    case Block::Sp11: return "sp11";
    case Block::H2: return "h2";
    case Block::W: return "w";
    default: return "trivial";
  }
}

Eigen::MatrixXd block_embedding(Block b) {
  auto range_embed = [](int begin, int len) {
    Eigen::MatrixXd E = Eigen::MatrixXd::Zero(21, len);
    for (int i = 0; i < len; ++i) E(begin + i, i) = 1.0;
    return E;
  };
  switch (b) {
    case Block::All: return Eigen::MatrixXd::Identity(21, 21);
    case Block::Sp1: return range_embed(kSp1Begin, 3);
    case Block::H2: return range_embed(kH2Begin, 8);
    case Block::Sp11: return range_embed(kSp11Begin, 10);
    case Block::W: {
      // coordinates (Re z, Im z, Re w, Im w, Re t, Im t) of j[[z,w],[-w,t]]
      Eigen::MatrixXd E = Eigen::MatrixXd::Zero(21, 6);
      E(12, 0) = 1.0;  // j z: x j - y k at B11
      E(13, 1) = -1.0;
      E(16, 2) = -1.0; // -j w at B21
      E(17, 3) = 1.0;
      E(19, 4) = 1.0;  // j t at B22
      E(20, 5) = -1.0;
      return E;
    }
    default: throw DomainError("trivial block has no sp(2,1) embedding");
  }
}

CoefficientModule trivial_module(int num_gens, int dim) {
  CoefficientModule m;
  m.dim = dim;
  m.action.assign(num_gens, Eigen::MatrixXd::Identity(dim, dim));
  m.action_inv = m.action;
  return m;
}

CoefficientModule adjoint_module(const GroupRep& rep) {
  CoefficientModule m;
  m.dim = 21;
  for (const QMat3& g : rep.images) {
    m.action.push_back(ad_matrix(g));
    m.action_inv.push_back(ad_matrix(sp_inverse<double, 3>(g)));
  }
  return m;
}

CoefficientModule block_module(const GroupRep& rep, Block b) {
  if (b == Block::Trivial) return trivial_module(rep.num_gens, 1);
  CoefficientModule full = adjoint_module(rep);
  if (b == Block::All) return full;

  Eigen::MatrixXd E = block_embedding(b);
  int d = int(E.cols());
  CoefficientModule m;
  m.dim = d;
  for (int g = 0; g < rep.num_gens; ++g) {
    Eigen::MatrixXd act = E.transpose() * full.action[g] * E;
    if ((full.action[g] * E - E * act).norm() > 1e-7 * (1.0 + full.action[g].norm()))
      throw DomainError(std::string("block ") + block_name(b) +
                        " is not invariant under the representation");
    m.action.push_back(act);
    m.action_inv.push_back(E.transpose() * full.action_inv[g] * E);
  }
  return m;
}

//------------------------------------------------------------------------------
// Fox complexes
//------------------------------------------------------------------------------

CochainComplex fox_complex(int num_gens, const Word& relator, const CoefficientModule& coeff) {
  if (int(coeff.action.size()) != num_gens)
    throw DimensionMismatch("module action count does not match presentation");
  int d = coeff.dim;

  // relator action check; the tolerance follows the forward-error bound of
  // the product, sum over steps of ||partial|| * ||factor||
  Eigen::MatrixXd rel = Eigen::MatrixXd::Identity(d, d);
  double err_scale = 1.0;
  for (int l : relator.letters) {
    const Eigen::MatrixXd& act = l > 0 ? coeff.action[l - 1] : coeff.action_inv[-l - 1];
    err_scale += rel.norm() * act.norm();
    rel = rel * act;
  }
  if ((rel - Eigen::MatrixXd::Identity(d, d)).norm() > 4e-13 * err_scale)
    throw ActionRelatorMismatch("coefficient action does not kill the relator");

  CochainComplex cc;
  cc.num_gens = num_gens;
  cc.dim = d;
  cc.d0.resize(num_gens * d, d);
  for (int g = 0; g < num_gens; ++g)
    cc.d0.middleRows(g * d, d) = Eigen::MatrixXd::Identity(d, d) - coeff.action[g];

  cc.d1 = Eigen::MatrixXd::Zero(d, num_gens * d);
  Eigen::MatrixXd W = Eigen::MatrixXd::Identity(d, d);
  for (int l : relator.letters) {
    int g = std::abs(l) - 1;
    if (l > 0) {
      cc.d1.middleCols(g * d, d) += W;
      W = W * coeff.action[g];
    } else {
      W = W * coeff.action_inv[g];
      cc.d1.middleCols(g * d, d) -= W;
    }
  }

  double comp = (cc.d1 * cc.d0).norm();
  if (comp > 1e-6 * (1.0 + cc.d1.norm() * cc.d0.norm()))
    throw DomainError("d1 d0 != 0; inconsistent complex");
  return cc;
}

CohomologyDims cohomology_dims(const CochainComplex& cc, double rank_tol) {
  int r0 = svd_rank(cc.d0, rank_tol);
  int r1 = svd_rank(cc.d1, rank_tol);
  CohomologyDims dims;
  dims.h0 = cc.dim - r0;
  dims.h1 = cc.num_gens * cc.dim - r1 - r0;
  dims.h2 = cc.dim - r1;
  return dims;
}

std::vector<Cocycle> h1_basis(const CochainComplex& cc, double rank_tol) {
  Eigen::MatrixXd K = null_space(cc.d1, rank_tol); // ker d1
  Eigen::MatrixXd C = K.transpose() * cc.d0;       // im d0 in K coordinates
  Eigen::MatrixXd H = null_space(C.transpose(), rank_tol); // orthogonal complement
  Eigen::MatrixXd B = K * H;
  std::vector<Cocycle> basis;
  for (int c = 0; c < B.cols(); ++c) {
    Cocycle u;
    u.dim = cc.dim;
    u.values = B.col(c);
    basis.push_back(u);
  }
  return basis;
}

Eigen::VectorXd evaluate_cocycle(const CoefficientModule& coeff, const Cocycle& u,
                                 const Word& w) {
  Eigen::VectorXd val = Eigen::VectorXd::Zero(coeff.dim);
  Eigen::MatrixXd W = Eigen::MatrixXd::Identity(coeff.dim, coeff.dim);
  for (int l : w.letters) {
    int g = std::abs(l) - 1;
    if (l > 0) {
      val += W * u.value(g);
      W = W * coeff.action[g];
    } else {
      W = W * coeff.action_inv[g];
      val -= W * u.value(g);
    }
  }
  return val;
}

Eigen::VectorXd cup_evaluate(const Word& relator, const CoefficientModule& coeff,
                             const Cocycle& u, const Cocycle& uprime,
                             const std::function<Eigen::VectorXd(const Eigen::VectorXd&,
                                                                 const Eigen::VectorXd&)>& bilinear) {
  Eigen::VectorXd uval = Eigen::VectorXd::Zero(coeff.dim); // u on the prefix
  Eigen::MatrixXd W = Eigen::MatrixXd::Identity(coeff.dim, coeff.dim);
  Eigen::VectorXd acc;
  bool first = true;
  auto add = [&](const Eigen::VectorXd& t) {
    if (first) { acc = t; first = false; } else { acc += t; }
  };
  for (int l : relator.letters) {
    int g = std::abs(l) - 1;
    if (l > 0) {
      add(bilinear(uval, W * uprime.value(g)));
      uval += W * u.value(g);
      W = W * coeff.action[g];
    } else {
      W = W * coeff.action_inv[g];
      uval -= W * u.value(g);
      add(Eigen::VectorXd(-bilinear(uval, W * uprime.value(g))));
    }
  }
  return acc;
}

double cup_pair_scalar(const Word& relator, const CoefficientModule& coeff, const Cocycle& u,
                       const Cocycle& uprime) {
  auto mul = [](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    return Eigen::VectorXd::Constant(1, a(0) * b(0));
  };
  return cup_evaluate(relator, coeff, u, uprime, mul)(0);
}

//------------------------------------------------------------------------------
// H^2 identification
//------------------------------------------------------------------------------

Eigen::Matrix<double, 21, 4> H2Identifier::h0_basis() {
  Eigen::Matrix<double, 21, 4> E = Eigen::Matrix<double, 21, 4>::Zero();
  E(0, 0) = 1.0;  // diag(i, 0, 0)
  E(1, 1) = 1.0;  // diag(j, 0, 0)
  E(2, 2) = 1.0;  // diag(k, 0, 0)
  E(11, 3) = 1.0; // diag(0, i, i)
  E(18, 3) = 1.0;
  return E;
}

H2Identifier::H2Identifier(const CochainComplex& adjoint_cc, double tol) : m_tol(tol) {
  if (adjoint_cc.dim != 21) throw DimensionMismatch("H2 identification needs the adjoint complex");
  m_system.resize(21, 4 + adjoint_cc.d1.cols());
  m_system.leftCols(4) = h0_basis();
  m_system.rightCols(adjoint_cc.d1.cols()) = adjoint_cc.d1;
  m_solver.compute(m_system);

  int r1 = svd_rank(adjoint_cc.d1, 1e-7);
  m_solver.setThreshold(1e-10);
  if (int(m_solver.rank()) != 4 + r1)
    throw FormDegenerate("invariants meet the image of d1; identification undefined");
}

Eigen::Vector4d H2Identifier::identify(const Eigen::VectorXd& v) const {
  Eigen::VectorXd x = m_solver.solve(v);
  double resid = (m_system * x - v).norm();
  if (resid > m_tol * (1.0 + v.norm()))
    throw DomainError("class does not decompose into invariants plus im d1");
  return x.head<4>();
}

//------------------------------------------------------------------------------
// Cup context
//------------------------------------------------------------------------------

CupContext::CupContext(const GroupRep& rep)
    : m_rep(rep),
      m_adjoint(adjoint_module(rep)),
      m_cc(fox_complex(rep.num_gens, rep.relator, m_adjoint)) {
  try {
    m_ident.emplace(m_cc);
  } catch (const FormDegenerate&) {
    // invariants are not sp(1) + u(1); named coordinates unavailable
  }
  // orthonormal basis of im d1 for the basis-free class norm
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m_cc.d1, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  double thresh = sv.size() > 0 ? 1e-7 * sv(0) : 0.0;
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > thresh) ++r;
  m_d1_image = svd.matrixU().leftCols(r);
}

const H2Identifier& CupContext::identifier() const {
  if (!m_ident)
    throw FormDegenerate("sp(1) + u(1) identification unavailable for this representation");
  return *m_ident;
}

H2Class CupContext::cup_square(const Cocycle& u, double cocycle_tol) const {
  return cup_pair(u, u, cocycle_tol);
}

Eigen::VectorXd CupContext::cup_raw(const Cocycle& u, const Cocycle& v,
                                    double cocycle_tol) const {
  for (const Cocycle* c : {&u, &v}) {
    double scale = std::max(1.0, c->values.norm());
    if ((m_cc.d1 * c->values).norm() > cocycle_tol * scale)
      throw NotACocycle("input is not in ker d1 within tolerance");
  }
  Eigen::VectorXd e1 = cup_evaluate(m_rep.relator, m_adjoint, u, v, bracket21);
  Eigen::VectorXd e2 = cup_evaluate(m_rep.relator, m_adjoint, v, u, bracket21);
  return 0.5 * (e1 + e2);
}

H2Class CupContext::cup_pair(const Cocycle& u, const Cocycle& v, double cocycle_tol) const {
  H2Class cls;
  cls.rep21 = cup_raw(u, v, cocycle_tol);
  cls.h0_coords = identifier().identify(cls.rep21);
  return cls;
}

double CupContext::cup_square_norm(const Cocycle& u, double cocycle_tol) const {
  Eigen::VectorXd e = cup_raw(u, u, cocycle_tol);
  return (e - m_d1_image * (m_d1_image.transpose() * e)).norm();
}

Cocycle embed_cocycle(Block b, const Cocycle& u) {
  Eigen::MatrixXd E = block_embedding(b);
  if (u.dim != int(E.cols())) throw DimensionMismatch("block cocycle has wrong dimension");
  int num_gens = int(u.values.size()) / u.dim;
  Cocycle out;
  out.dim = 21;
  out.values.resize(21 * num_gens);
  for (int g = 0; g < num_gens; ++g) out.values.segment(g * 21, 21) = E * u.value(g);
  return out;
}

//------------------------------------------------------------------------------
// Surjectivity solvers
//------------------------------------------------------------------------------

Cocycle solve_sp1_square(const Eigen::Vector3d& target, const CupContext& ctx) {
  const GroupRep& rep = ctx.rep();
  int n = rep.num_gens;

  Cocycle zero;
  zero.dim = 21;
  zero.values = Eigen::VectorXd::Zero(21 * n);
  if (target.norm() < 1e-15) return zero;

  // calibrated scalar pairing on H^1 with trivial R coefficients
  CoefficientModule tm = trivial_module(n);
  CochainComplex tcc = fox_complex(n, rep.relator, tm);
  std::vector<Cocycle> basis = h1_basis(tcc);
  int bn = int(basis.size());
  int bi = -1, bj = -1;
  double sigma = 0;
  for (int i = 0; i < bn; ++i)
    for (int j = i + 1; j < bn; ++j) {
      double p = cup_pair_scalar(rep.relator, tm, basis[i], basis[j]);
      if (std::abs(p) > std::abs(sigma)) { sigma = p; bi = i; bj = j; }
    }
  if (bi < 0 || std::abs(sigma) < 1e-10)
    throw FormDegenerate("intersection pairing vanishes on H^1");

  // imaginary directions q, q' with [q, q'] = 2 n
  Eigen::Vector3d nhat = target.normalized();
  int kmin = 0;
  for (int k = 1; k < 3; ++k)
    if (std::abs(nhat(k)) < std::abs(nhat(kmin))) kmin = k;
  Eigen::Vector3d m = Eigen::Vector3d::Unit(kmin);
  m = (m - nhat * nhat.dot(m)).normalized();
  Eigen::Vector3d q = m, qp = nhat.cross(m);
  if (sigma < 0) qp = -qp; // flips the pairing sign through [q', q]

  // cup square of a x q + b x q' is 2 sigma [q, q'] = 4 |sigma| n
  double s = std::sqrt(target.norm() / (4.0 * std::abs(sigma)));

  Cocycle block;
  block.dim = 3;
  block.values.resize(3 * n);
  for (int g = 0; g < n; ++g)
    block.values.segment(g * 3, 3) = s * (basis[bi].value(g)(0) * q + basis[bj].value(g)(0) * qp);
  return embed_cocycle(Block::Sp1, block);
}

Cocycle solve_sp11_square(double target, const CupContext& ctx) {
  const GroupRep& rep = ctx.rep();
  int n = rep.num_gens;

  Cocycle zero;
  zero.dim = 21;
  zero.values = Eigen::VectorXd::Zero(21 * n);
  if (std::abs(target) < 1e-15) return zero;

  CoefficientModule wm = block_module(rep, Block::W);
  CochainComplex wcc = fox_complex(n, rep.relator, wm);
  std::vector<Cocycle> wb = h1_basis(wcc);
  int bn = int(wb.size());
  if (bn == 0) throw FormDegenerate("H^1 of the W block is trivial");

  std::vector<Cocycle> emb;
  for (const Cocycle& u : wb) emb.push_back(embed_cocycle(Block::W, u));

  Eigen::MatrixXd G(bn, bn);
  for (int i = 0; i < bn; ++i)
    for (int j = i; j < bn; ++j)
      G(i, j) = G(j, i) = ctx.cup_pair(emb[i], emb[j]).h0_coords(3);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G);
  const auto& ev = es.eigenvalues();
  double maxabs = std::max(std::abs(ev(0)), std::abs(ev(bn - 1)));
  for (int i = 0; i < bn; ++i)
    if (std::abs(ev(i)) < 1e-7 * maxabs)
      throw FormDegenerate("u(1) quadratic form is rank deficient on H^1(W)");

  int pick = target > 0 ? bn - 1 : 0; // extreme eigenvalue of the right sign
  double mu = ev(pick);
  if (target * mu <= 0)
    throw FormDegenerate("u(1) quadratic form does not attain the target sign");

  double s = std::sqrt(target / mu);
  Cocycle out = zero;
  for (int i = 0; i < bn; ++i) out.values += s * es.eigenvectors()(i, pick) * emb[i].values;
  return out;
}

FlexResult flex_deform(const Cocycle& u, const CupContext& ctx) {
  if (u.values.norm() < 1e-14) throw ZeroInput("flex_deform needs a nonzero cocycle");
  if (u.dim != 21) throw DimensionMismatch("flex_deform expects 21-coordinate cocycles");

  // input must be supported on the H^2 block
  int n = int(u.values.size()) / 21;
  for (int g = 0; g < n; ++g) {
    Eigen::VectorXd v = u.value(g);
    for (int i = 0; i < 21; ++i)
      if ((i < kH2Begin || i >= kH2End) && std::abs(v(i)) > 1e-9 * (1.0 + u.values.norm()))
        throw DomainError("flex_deform input must be supported on the H^2 block");
  }

  H2Class cu = ctx.cup_square(u);
  Eigen::Vector3d sp1_target = -cu.h0_coords.head<3>();
  double u1_target = -cu.h0_coords(3);

  FlexResult res;
  res.v_sp1 = solve_sp1_square(sp1_target, ctx);
  res.w_block = solve_sp11_square(u1_target, ctx);
  res.x = u;
  res.x.values = u.values + res.v_sp1.values + res.w_block.values;
  return res;
}

} // namespace qhsp
