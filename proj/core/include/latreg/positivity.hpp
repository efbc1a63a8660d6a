#ifndef LATREG_POSITIVITY_HPP
#define LATREG_POSITIVITY_HPP

#include <Eigen/Dense>
#include <complex>

#include "latreg/errors.hpp"

namespace latreg {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;

/// Default relative eigenvalue threshold. Every verdict below also reports
/// the raw minimal eigenvalue so callers can re-judge against their own
/// tolerance.
inline constexpr double kPsdTol = 1e-9;

/// Largest singular value.
double spectral_norm(const CMat& m);

CMat kron(const CMat& a, const CMat& b);

/// (H + H*)/2. Throws StructuralError if the asymmetry exceeds 1e-8
/// relative; smaller asymmetry is silently absorbed.
CMat hermitize(const CMat& h);

struct PsdVerdict {
  bool psd = false;
  double lambda_min = 0.0;
  double lambda_max_abs = 0.0;
};

/// Verdict is lambda_min >= -tol * max(1, |lambda|_max).
PsdVerdict is_psd(const CMat& h, double tol = kPsdTol);

/// A <= B in the Loewner order, i.e. is_psd(B - A).
PsdVerdict loewner_leq(const CMat& a, const CMat& b, double tol = kPsdTol);

/// PSD square root by eigendecomposition with negative eigenvalues clamped
/// to zero. Throws ContractError when H is materially non-PSD
/// (lambda_min < -1e-6 * scale).
CMat psd_sqrt(const CMat& h);

/// F with F* F = H (within 1e-10 relative), rank(H) rows, H.cols() columns.
CMat gram_factor(const CMat& h);

struct DouglasFactor {
  CMat c;          // A = C B
  double norm;     // ||C||, <= 1 + eps exactly when A*A <= B*B
  double residual; // ||A - C B||
};

/// Solves A = C B through the pseudoinverse of B. Throws ContractError when
/// the residual shows A is not in the row space of B.
DouglasFactor douglas_solve(const CMat& a, const CMat& b);

struct Block2x2Verdict {
  bool assembled_psd = false;  // [[A, A^{1/2}X],[X*A^{1/2}, D]] >= 0
  bool schur_leq = false;      // X*X <= D
  double lambda_min_assembled = 0.0;
};

/// The two verdicts must agree when A >= 0; both are returned for
/// cross-assertion.
Block2x2Verdict block2x2_psd_check(const CMat& a, const CMat& x, const CMat& d,
                                   double tol = kPsdTol);

/// n x n array of d x d complex blocks, Hermitian as a whole. Flattening is
/// row-blocks-major and fixed.
class HermitianBlockMatrix {
 public:
  HermitianBlockMatrix(int blocks, int dim)
      : blocks_(blocks), dim_(dim), flat_(CMat::Zero(static_cast<Eigen::Index>(blocks) * dim,
                                                     static_cast<Eigen::Index>(blocks) * dim)) {}

  int block_count() const { return blocks_; }
  int block_dim() const { return dim_; }

  Eigen::Block<CMat> block(int i, int j) {
    return flat_.block(static_cast<Eigen::Index>(i) * dim_,
                       static_cast<Eigen::Index>(j) * dim_, dim_, dim_);
  }
  Eigen::Block<const CMat> block(int i, int j) const {
    return flat_.block(static_cast<Eigen::Index>(i) * dim_,
                       static_cast<Eigen::Index>(j) * dim_, dim_, dim_);
  }

  const CMat& flat() const { return flat_; }
  CMat& flat() { return flat_; }

  /// block(i,j) = block(j,i)* within `rel` relative; throws StructuralError.
  void check_hermitian(double rel = 1e-12) const;

 private:
  int blocks_;
  int dim_;
  CMat flat_;
};

}  // namespace latreg

#endif
