#include "latreg/positivity.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <sstream>

namespace latreg {

double spectral_norm(const CMat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  Eigen::JacobiSVD<CMat> svd(m);
  return svd.singularValues()(0);
}

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CMat hermitize(const CMat& h) {
  if (h.rows() != h.cols())
    throw StructuralError("hermitize: matrix is not square");
  const double asym = (h - h.adjoint()).norm();
  const double scale = std::max(1.0, h.norm());
  if (asym > 1e-8 * scale) {
    std::ostringstream os;
    os << "hermitize: asymmetry " << asym << " exceeds 1e-8 relative (scale "
       << scale << ")";
    throw StructuralError(os.str());
  }
  return (h + h.adjoint()) / 2.0;
}

PsdVerdict is_psd(const CMat& h, double tol) {
  const CMat sym = hermitize(h);
  if (sym.rows() == 0) return {true, 0.0, 0.0};
  Eigen::SelfAdjointEigenSolver<CMat> es(sym, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw NumericError("is_psd: eigensolver failed; condition of input is suspect");
  const auto& ev = es.eigenvalues();
  PsdVerdict v;
  v.lambda_min = ev(0);
  v.lambda_max_abs = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
  v.psd = v.lambda_min >= -tol * std::max(1.0, v.lambda_max_abs);
  return v;
}

PsdVerdict loewner_leq(const CMat& a, const CMat& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw StructuralError("loewner_leq: shape mismatch");
  return is_psd(b - a, tol);
}

namespace {

// Eigendecomposition of a Hermitian H that must be PSD up to tolerance;
// negative eigenvalues are clamped to zero.
void psd_eigs(const CMat& h, Eigen::VectorXd& lam, CMat& vecs, const char* who) {
  const CMat sym = hermitize(h);
  Eigen::SelfAdjointEigenSolver<CMat> es(sym);
  if (es.info() != Eigen::Success)
    throw NumericError(std::string(who) + ": eigensolver failed");
  lam = es.eigenvalues();
  vecs = es.eigenvectors();
  const double scale = std::max(1.0, lam.size() ? std::abs(lam(lam.size() - 1)) : 0.0);
  if (lam.size() && lam(0) < -1e-6 * scale) {
    std::ostringstream os;
    os << who << ": input is materially non-PSD (lambda_min " << lam(0) << ")";
    throw ContractError(os.str());
  }
  for (Eigen::Index i = 0; i < lam.size(); ++i) lam(i) = std::max(lam(i), 0.0);
}

}  // namespace

CMat psd_sqrt(const CMat& h) {
  Eigen::VectorXd lam;
  CMat vecs;
  psd_eigs(h, lam, vecs, "psd_sqrt");
  return vecs * lam.cwiseSqrt().asDiagonal() * vecs.adjoint();
}

CMat gram_factor(const CMat& h) {
  Eigen::VectorXd lam;
  CMat vecs;
  psd_eigs(h, lam, vecs, "gram_factor");
  // Rank cutoff relative to the largest eigenvalue.
  const double lmax = lam.size() ? lam(lam.size() - 1) : 0.0;
  const double cut = 1e-13 * std::max(1.0, lmax);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < lam.size(); ++i)
    if (lam(i) > cut) ++rank;
  CMat f(rank, h.cols());
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (lam(i) <= cut) continue;
    f.row(r++) = std::sqrt(lam(i)) * vecs.col(i).adjoint();
  }
  return f;
}

DouglasFactor douglas_solve(const CMat& a, const CMat& b) {
  if (a.cols() != b.cols())
    throw StructuralError("douglas_solve: A and B must have the same column count");
  Eigen::JacobiSVD<CMat> svd(b, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double cut = sv.size() ? 1e-12 * sv(0) : 0.0;
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) inv(i) = 1.0 / sv(i);
  // B^+ = V S^+ U*
  const CMat pinv = svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
  DouglasFactor out;
  out.c = a * pinv;
  out.residual = (a - out.c * b).norm();
  out.norm = spectral_norm(out.c);
  const double thresh = 1e-9 * std::max(1.0, spectral_norm(a));
  if (out.residual > thresh) {
    std::ostringstream os;
    os << "douglas_solve: A is not in the row space of B (residual "
       << out.residual << " > " << thresh << "); A*A <= B*B cannot hold";
    throw ContractError(os.str());
  }
  return out;
}

Block2x2Verdict block2x2_psd_check(const CMat& a, const CMat& x, const CMat& d,
                                   double tol) {
  if (a.cols() != x.rows() || x.cols() != d.rows() || d.rows() != d.cols())
    throw StructuralError("block2x2_psd_check: incompatible shapes");
  const CMat root = psd_sqrt(a);
  CMat m(a.rows() + d.rows(), a.cols() + d.cols());
  m.topLeftCorner(a.rows(), a.cols()) = a;
  m.topRightCorner(a.rows(), d.cols()) = root * x;
  m.bottomLeftCorner(d.rows(), a.cols()) = x.adjoint() * root;
  m.bottomRightCorner(d.rows(), d.cols()) = d;
  Block2x2Verdict v;
  const PsdVerdict whole = is_psd(m, tol);
  v.assembled_psd = whole.psd;
  v.lambda_min_assembled = whole.lambda_min;
  v.schur_leq = loewner_leq(x.adjoint() * x, d, tol).psd;
  return v;
}

void HermitianBlockMatrix::check_hermitian(double rel) const {
  const double defect = (flat_ - flat_.adjoint()).norm();
  if (defect > rel * std::max(1.0, flat_.norm()))
    throw StructuralError("HermitianBlockMatrix: not Hermitian within tolerance");
}

}  // namespace latreg
