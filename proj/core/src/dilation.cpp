#include "latreg/dilation.hpp"

#include <sstream>

#include "latreg/rng.hpp"
#include "latreg/serialization.hpp"

namespace latreg {

WindowDilation window_dilation(const Representation& rep, const ConeTuple& t) {
  const HermitianBlockMatrix x = build_tilde_gram(rep, t);
  const PsdVerdict v = is_psd(x.flat());
  if (!v.psd) {
    std::ostringstream os;
    os << "window_dilation: gram window is not PSD (lambda_min " << v.lambda_min
       << ", witness " << to_json(t).dump() << ")";
    throw ContractError(os.str());
  }
  const CMat f = gram_factor(x.flat());
  WindowDilation out;
  out.tuple = t;
  out.ambient_dim = static_cast<int>(f.rows());
  out.isometry_blocks.reserve(t.size());
  for (int i = 0; i < t.size(); ++i)
    out.isometry_blocks.push_back(
        f.middleCols(static_cast<Eigen::Index>(i) * rep.d, rep.d));
  return out;
}

CMat finite_unitary_dilation(const CMat& t, int horizon) {
  if (t.rows() != t.cols())
    throw ContractError("finite_unitary_dilation: T must be square");
  if (horizon < 1)
    throw ContractError("finite_unitary_dilation: horizon must be >= 1");
  if (spectral_norm(t) > 1.0 + 1e-12)
    throw ContractError("finite_unitary_dilation: T is not a contraction");
  const Eigen::Index d = t.rows();
  const CMat id = CMat::Identity(d, d);
  const CMat defect = psd_sqrt(id - t.adjoint() * t);        // D_T
  const CMat defect_adj = psd_sqrt(id - t * t.adjoint());    // D_{T*}

  CMat u = CMat::Zero(d * (horizon + 1), d * (horizon + 1));
  u.block(0, 0, d, d) = t;
  u.block(d, 0, d, d) = defect;
  u.block(0, d * horizon, d, d) = defect_adj;
  u.block(d, d * horizon, d, d) = -t.adjoint();
  for (int j = 1; j < horizon; ++j)
    u.block(d * (j + 1), d * j, d, d) = id;
  return u;
}

Report check_covariant_pair(const CovariantSystem& sys,
                            const Representation& rep, long samples,
                            std::uint64_t seed) {
  if (sys.alpha_gens.size() != static_cast<std::size_t>(rep.n))
    throw StructuralError("check_covariant_pair: one alpha per canonical generator required");
  if (sys.pi_values.empty())
    throw StructuralError("check_covariant_pair: empty algebra sample set");
  for (const auto& a : sys.pi_values)
    if (a.rows() != rep.d || a.cols() != rep.d)
      throw StructuralError("check_covariant_pair: pi(a) shape mismatch");

  return timed_report([&] {
    Report r;
    r.check = "covariant-pair";
    r.seed = seed;
    const double tol = 1e-10;
    r.tolerances = {{"relative_defect", tol}};
    Rng rng(seed);
    double worst = 0.0;
    long failures = 0;

    for (long trial = 0; trial < samples; ++trial) {
      const std::size_t ai =
          static_cast<std::size_t>(rng.uniform_int(0, static_cast<long long>(sys.pi_values.size()) - 1));
      const CMat& pa = sys.pi_values[ai];
      std::vector<long long> s(rep.n);
      for (auto& x : s) x = rng.uniform_int(0, 3);

      // alpha_s = composition of the generator actions, coordinatewise.
      CMat moved = pa;
      for (int i = 0; i < rep.n; ++i)
        for (long long k = 0; k < s[i]; ++k) {
          moved = sys.alpha_gens[i](moved);
          if (moved.rows() != rep.d || moved.cols() != rep.d)
            throw StructuralError("check_covariant_pair: alpha image dimension mismatch");
        }

      const CMat ts = eval(rep, GroupElement::zn(s));
      const double defect = spectral_norm(pa * ts - ts * moved);
      const double scale =
          std::max(1.0, spectral_norm(pa) * spectral_norm(ts));
      if (defect > tol * scale) {
        ++failures;
        if (r.witness.is_null())
          r.witness = Json{{"pi_index", ai}, {"s", s}, {"defect", defect}};
      }
      worst = std::max(worst, defect);
    }

    r.details = {{"samples", samples}, {"failures", failures}, {"max_defect", worst}};
    r.passed = failures == 0;
    return r;
  });
}

}  // namespace latreg
