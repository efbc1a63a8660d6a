#ifndef LATREG_REPRESENTATION_HPP
#define LATREG_REPRESENTATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "latreg/group_element.hpp"
#include "latreg/positivity.hpp"
#include "latreg/report.hpp"

namespace latreg {

/// A contractive representation of Z_+^n: n commuting contractions on C^d.
struct Representation {
  int n = 0;
  int d = 0;
  std::vector<CMat> gens;  // T_1 .. T_n
  std::string label;       // generator family + seed

  /// max over pairs of ||T_i T_j - T_j T_i|| / max(1, ||T_i|| ||T_j||).
  double commutation_defect() const;
  double max_generator_norm() const;

  /// Enforces the type invariants (pairwise commutation within 1e-12
  /// relative, singular values <= 1 + 1e-12). Throws StructuralError.
  void validate() const;
};

inline constexpr double kCommutationTol = 1e-12;
inline constexpr double kContractionTol = 1e-12;

/// T(p) = prod T_i^{p_i} for a positive vector p of length n.
CMat eval(const Representation& rep, const GroupElement& p);

/// T~(g) = T(g_-)* T(g_+) together with the parts used.
struct ExtendedValue {
  CMat matrix;
  GroupElement gplus;
  GroupElement gminus;
};
ExtendedValue eval_tilde(const Representation& rep, const GroupElement& g);

/// Nica covariance: T_i T_j* = T_j* T_i for i != j, plus seeded spot checks
/// of T(s)T(t)* = T(t)*T(s) on random disjoint-support pairs.
Report check_nica(const Representation& rep, std::uint64_t seed = 0x6e696361);

enum class SumMode { Row, Column };

/// Sum T(p_i)T(p_i)* <= I (row) or sum T(p_i)*T(p_i) <= I (column) over the
/// canonical generator antichains and seeded random disjoint-support tuples
/// with entries bounded by 3.
Report check_row_column(const Representation& rep, SumMode mode,
                        std::uint64_t seed = 0x726f77);

enum class GeneratorKind {
  DoublyCommutingTensor,
  ColumnContraction,
  CommutingPolynomial,
  DiagonalUnitary,
  JordanCounterexample,
};

const char* to_string(GeneratorKind kind);
GeneratorKind generator_kind_from_string(const std::string& name);

/// Seeded generator families. The tensor kind acts on C^{d^n}; all others
/// act on C^d. JordanCounterexample ignores the seed and is fixed at
/// n = 2, d = 2.
Representation generate(GeneratorKind kind, int n, int d, std::uint64_t seed);

}  // namespace latreg

#endif
