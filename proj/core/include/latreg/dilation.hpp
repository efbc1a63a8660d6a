#ifndef LATREG_DILATION_HPP
#define LATREG_DILATION_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "latreg/regularity.hpp"

namespace latreg {

/// Finite-window Naimark data: block columns V_1..V_k of a Gram factor of
/// X = [T~(p_i p_j^{-1})], so V_i* V_j reproduces every block of X. When
/// p_1 = e, V_1 is an isometry and its range plays the role of H inside C^r.
struct WindowDilation {
  ConeTuple tuple;
  std::vector<CMat> isometry_blocks;  // r x d each
  int ambient_dim = 0;                // r
};

/// Requires is_psd(build_tilde_gram(rep, t)); throws ContractError carrying
/// lambda_min and the witness tuple otherwise.
WindowDilation window_dilation(const Representation& rep, const ConeTuple& t);

/// Unitary U on C^{d(N+1)} whose top-left d x d compression satisfies
/// (U^k)_{11} = T^k for 1 <= k <= N. Block layout (the documented constant,
/// verified by the unitarity tests rather than trusted):
///   column 0:  T in row 0, D_T in row 1;
///   column j (1 <= j <= N-1): identity in row j+1;
///   column N:  D_{T*} in row 0, -T* in row 1;
/// with defect operators D_T = (I - T*T)^{1/2}, D_{T*} = (I - TT*)^{1/2}.
CMat finite_unitary_dilation(const CMat& t, int horizon);

/// pi_values are the represented algebra samples pi(a); alpha_gens[i] is the
/// action of alpha at the i-th canonical generator, composed coordinatewise
/// for sampled s.
struct CovariantSystem {
  std::vector<CMat> pi_values;
  std::vector<std::function<CMat(const CMat&)>> alpha_gens;
};

/// Checks pi(a) T(s) = T(s) pi(alpha_s(a)) on seeded samples within
/// 1e-10 * scale.
Report check_covariant_pair(const CovariantSystem& sys,
                            const Representation& rep, long samples,
                            std::uint64_t seed);

}  // namespace latreg

#endif
