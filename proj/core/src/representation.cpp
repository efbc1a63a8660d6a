#include "latreg/representation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "latreg/rng.hpp"
#include "latreg/sampler.hpp"
#include "latreg/serialization.hpp"

namespace latreg {

double Representation::commutation_defect() const {
  double worst = 0.0;
  std::vector<double> norms(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) norms[i] = spectral_norm(gens[i]);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const double defect = spectral_norm(gens[i] * gens[j] - gens[j] * gens[i]);
      worst = std::max(worst, defect / std::max(1.0, norms[i] * norms[j]));
    }
  return worst;
}

double Representation::max_generator_norm() const {
  double worst = 0.0;
  for (const auto& g : gens) worst = std::max(worst, spectral_norm(g));
  return worst;
}

void Representation::validate() const {
  if (n < 1 || d < 1 || gens.size() != static_cast<std::size_t>(n))
    throw StructuralError("Representation: inconsistent sizes");
  for (const auto& g : gens)
    if (g.rows() != d || g.cols() != d)
      throw StructuralError("Representation: generator shape mismatch");
  if (commutation_defect() > kCommutationTol)
    throw StructuralError("Representation: generators do not commute within tolerance");
  if (max_generator_norm() > 1.0 + kContractionTol)
    throw StructuralError("Representation: a generator is not a contraction");
}

namespace {

CMat matrix_power(const CMat& m, long long k) {
  CMat out = CMat::Identity(m.rows(), m.cols());
  for (long long i = 0; i < k; ++i) out = out * m;
  return out;
}

const std::vector<long long>& zn_coords(const Representation& rep,
                                        const GroupElement& p,
                                        const char* who) {
  if (p.kind() != GroupKind::Zn)
    throw ContractError(std::string(who) + ": element must be a Z^n vector");
  const auto& v = p.coords();
  if (v.size() != static_cast<std::size_t>(rep.n))
    throw ContractError(std::string(who) + ": vector length does not match generator count");
  return v;
}

}  // namespace

CMat eval(const Representation& rep, const GroupElement& p) {
  const auto& v = zn_coords(rep, p, "eval");
  for (auto x : v)
    if (x < 0) throw ContractError("eval: element must be positive");
  CMat out = CMat::Identity(rep.d, rep.d);
  for (int i = 0; i < rep.n; ++i)
    if (v[i] > 0) out = out * matrix_power(rep.gens[i], v[i]);
  return out;
}

ExtendedValue eval_tilde(const Representation& rep, const GroupElement& g) {
  zn_coords(rep, g, "eval_tilde");
  auto [gp, gm] = pos_neg_parts(g);
  ExtendedValue out;
  out.matrix = eval(rep, gm).adjoint() * eval(rep, gp);
  out.gplus = std::move(gp);
  out.gminus = std::move(gm);
  return out;
}

Report check_nica(const Representation& rep, std::uint64_t seed) {
  return timed_report([&] {
    Report r;
    r.check = "nica-covariance";
    r.seed = seed;
    const double tol = 1e-10;
    r.tolerances = {{"relative_defect", tol}};
    double worst = 0.0;
    Json witness;

    // Generator pairs: on Z_+^n these already decide Nica covariance, since
    // disjoint-support pairs are products of generators from disjoint sets.
    for (int i = 0; i < rep.n; ++i)
      for (int j = 0; j < rep.n; ++j) {
        if (i == j) continue;
        const double defect =
            spectral_norm(rep.gens[i] * rep.gens[j].adjoint() -
                          rep.gens[j].adjoint() * rep.gens[i]);
        if (defect > worst) {
          worst = defect;
          witness = Json{{"i", i + 1}, {"j", j + 1}};
        }
      }

    // Seeded spot checks on random disjoint-support pairs.
    ElementSampler sampler(GroupSpec::zn(rep.n), seed);
    for (int trial = 0; trial < 50; ++trial) {
      auto [s, t] = sampler.sample_disjoint_positive_pair();
      const CMat ts = eval(rep, s), tt = eval(rep, t);
      const double defect =
          spectral_norm(ts * tt.adjoint() - tt.adjoint() * ts);
      if (defect > worst) {
        worst = defect;
        witness = Json{{"s", to_json(s)}, {"t", to_json(t)}};
      }
    }

    r.details = {{"max_defect", worst}};
    r.passed = worst <= tol * std::max(1.0, rep.max_generator_norm() *
                                                rep.max_generator_norm());
    if (!r.passed) r.witness = witness;
    return r;
  });
}

Report check_row_column(const Representation& rep, SumMode mode,
                        std::uint64_t seed) {
  return timed_report([&] {
    Report r;
    r.check = mode == SumMode::Row ? "row-contractive" : "column-contractive";
    r.seed = seed;
    r.tolerances = {{"psd", kPsdTol}};
    const CMat id = CMat::Identity(rep.d, rep.d);
    double worst_lambda = 0.0;
    bool first = true;

    auto check_tuple = [&](const std::vector<GroupElement>& tuple) {
      CMat sum = CMat::Zero(rep.d, rep.d);
      for (const auto& p : tuple) {
        const CMat tp = eval(rep, p);
        sum += mode == SumMode::Row ? CMat(tp * tp.adjoint())
                                    : CMat(tp.adjoint() * tp);
      }
      const PsdVerdict v = loewner_leq(sum, id);
      if (first || v.lambda_min < worst_lambda) {
        first = false;
        worst_lambda = v.lambda_min;
        if (!v.psd && r.witness.is_null()) {
          Json w = Json::array();
          for (const auto& p : tuple) w.push_back(to_json(p));
          r.witness = w;
        }
      }
      return v.psd;
    };

    long failures = 0, trials = 0;

    // Canonical antichains: every nonempty subset of the generators.
    for (std::uint32_t mask = 1; mask < (1u << rep.n); ++mask) {
      std::vector<GroupElement> tuple;
      for (int i = 0; i < rep.n; ++i)
        if (mask & (1u << i)) {
          std::vector<long long> v(rep.n, 0);
          v[i] = 1;
          tuple.push_back(GroupElement::zn(std::move(v)));
        }
      ++trials;
      if (!check_tuple(tuple)) ++failures;
    }

    // Seeded random disjoint-support tuples, entries bounded by 3.
    Rng rng(seed);
    for (int trial = 0; trial < 100; ++trial) {
      const int parts = static_cast<int>(rng.uniform_int(1, rep.n));
      std::vector<std::vector<long long>> vs(parts,
                                             std::vector<long long>(rep.n, 0));
      for (int i = 0; i < rep.n; ++i) {
        const long long owner = rng.uniform_int(0, parts);  // == parts: unused
        if (owner < parts) vs[owner][i] = rng.uniform_int(1, 3);
      }
      std::vector<GroupElement> tuple;
      for (auto& v : vs) {
        if (std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; }))
          continue;  // p_i != e required
        tuple.push_back(GroupElement::zn(std::move(v)));
      }
      if (tuple.empty()) continue;
      ++trials;
      if (!check_tuple(tuple)) ++failures;
    }

    r.lambda_min = worst_lambda;
    r.details = {{"tuples", trials}, {"failures", failures}};
    r.passed = failures == 0;
    return r;
  });
}

const char* to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::DoublyCommutingTensor: return "doubly-commuting-tensor";
    case GeneratorKind::ColumnContraction: return "column-contraction";
    case GeneratorKind::CommutingPolynomial: return "commuting-polynomial";
    case GeneratorKind::DiagonalUnitary: return "diagonal-unitary";
    case GeneratorKind::JordanCounterexample: return "jordan-counterexample";
  }
  return "?";
}

GeneratorKind generator_kind_from_string(const std::string& name) {
  for (GeneratorKind k :
       {GeneratorKind::DoublyCommutingTensor, GeneratorKind::ColumnContraction,
        GeneratorKind::CommutingPolynomial, GeneratorKind::DiagonalUnitary,
        GeneratorKind::JordanCounterexample})
    if (name == to_string(k)) return k;
  throw StructuralError("unknown generator kind: " + name);
}

namespace {

CMat random_gaussian(Rng& rng, int rows, int cols) {
  CMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rng.complex_normal();
  return m;
}

// M / max(1, sigma_max(M) (1 + 1e-15)): strictly within the contraction
// tolerance of the Representation invariants.
CMat scale_to_contraction(const CMat& m) {
  const double s = spectral_norm(m) * (1.0 + 1e-15);
  return s > 1.0 ? CMat(m / s) : m;
}

}  // namespace

Representation generate(GeneratorKind kind, int n, int d, std::uint64_t seed) {
  if (n < 1 || d < 1)
    throw StructuralError("generate: n and d must be at least 1");
  Rng rng(seed);
  Representation rep;
  rep.n = n;
  std::ostringstream label;
  label << to_string(kind) << "(n=" << n << ",d=" << d << ",seed=" << seed << ")";
  rep.label = label.str();

  switch (kind) {
    case GeneratorKind::DoublyCommutingTensor: {
      // T_i = I (x) ... (x) A_i (x) ... (x) I on C^{d^n}.
      long long dim = 1;
      for (int i = 0; i < n; ++i) dim *= d;
      rep.d = static_cast<int>(dim);
      for (int i = 0; i < n; ++i) {
        const CMat a = scale_to_contraction(random_gaussian(rng, d, d));
        long long left = 1, right = 1;
        for (int k = 0; k < i; ++k) left *= d;
        for (int k = i + 1; k < n; ++k) right *= d;
        rep.gens.push_back(kron(CMat::Identity(left, left),
                                kron(a, CMat::Identity(right, right))));
      }
      break;
    }
    case GeneratorKind::ColumnContraction: {
      // Commuting B_i as polynomials of one seed matrix, then the whole
      // column [B_1; ...; B_n] scaled to norm <= 1.
      rep.d = d;
      const CMat s = scale_to_contraction(random_gaussian(rng, d, d));
      std::vector<CMat> bs;
      CMat column(static_cast<Eigen::Index>(n) * d, d);
      for (int i = 0; i < n; ++i) {
        const CMat b = rng.complex_normal() * CMat::Identity(d, d) +
                       rng.complex_normal() * s + rng.complex_normal() * s * s;
        bs.push_back(b);
        column.block(static_cast<Eigen::Index>(i) * d, 0, d, d) = b;
      }
      const double norm = spectral_norm(column) * (1.0 + 1e-15);
      const double scale = norm > 1.0 ? 1.0 / norm : 1.0;
      for (auto& b : bs) rep.gens.push_back(scale * b);
      break;
    }
    case GeneratorKind::CommutingPolynomial: {
      rep.d = d;
      const CMat s = scale_to_contraction(random_gaussian(rng, d, d));
      for (int i = 0; i < n; ++i) {
        const CMat p = rng.complex_normal() * CMat::Identity(d, d) +
                       rng.complex_normal() * s + rng.complex_normal() * s * s;
        rep.gens.push_back(scale_to_contraction(p));
      }
      break;
    }
    case GeneratorKind::DiagonalUnitary: {
      rep.d = d;
      for (int i = 0; i < n; ++i) {
        CMat u = CMat::Zero(d, d);
        for (int k = 0; k < d; ++k) {
          const double theta = 2.0 * 3.14159265358979323846 * rng.uniform();
          u(k, k) = Complex(std::cos(theta), std::sin(theta));
        }
        rep.gens.push_back(u);
      }
      break;
    }
    case GeneratorKind::JordanCounterexample: {
      if (n != 2 || d != 2)
        throw StructuralError("jordan-counterexample is fixed at n=2, d=2");
      rep.d = 2;
      CMat j(2, 2);
      j << 0, 1, 0, 0;
      rep.gens = {j, j};
      break;
    }
  }
  rep.validate();
  return rep;
}

}  // namespace latreg
