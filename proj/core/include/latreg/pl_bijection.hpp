#ifndef LATREG_PL_BIJECTION_HPP
#define LATREG_PL_BIJECTION_HPP

#include <gmpxx.h>

#include <vector>

namespace latreg {

using Rational = mpq_class;

struct PLPoint {
  Rational x;
  Rational y;
  friend bool operator==(const PLPoint& a, const PLPoint& b) {
    return a.x == b.x && a.y == b.y;
  }
};

/// An increasing piecewise-linear bijection of the real line, equal to the
/// identity outside a bounded interval. Exact rational breakpoints, exact
/// rational arithmetic throughout; no floating point.
///
/// Canonical form: breakpoints sorted by x, first and last on the diagonal,
/// no breakpoint collinear with its neighbours, and the empty list for the
/// identity map. Two maps are equal iff their canonical breakpoint lists are.
class PLBijection {
 public:
  PLBijection() = default;  // identity

  /// Builds the map interpolating `pts` linearly, identity outside the span.
  /// Throws StructuralError unless x and y are strictly increasing and the
  /// first/last points sit on the diagonal.
  static PLBijection from_points(std::vector<PLPoint> pts);

  bool is_identity() const { return pts_.empty(); }
  const std::vector<PLPoint>& points() const { return pts_; }

  Rational evaluate(const Rational& x) const;

  PLBijection inverse() const;

  /// (f.compose_after(g))(x) = f(g(x)).
  static PLBijection compose(const PLBijection& f, const PLBijection& g);

  /// Pointwise min/max; crossings are solved exactly as intersections of
  /// rational segments.
  static PLBijection pointwise_min(const PLBijection& f, const PLBijection& g);
  static PLBijection pointwise_max(const PLBijection& f, const PLBijection& g);

  /// f(x) >= x for all x, i.e. membership in the positive cone.
  bool dominates_identity() const;

  friend bool operator==(const PLBijection& a, const PLBijection& b) {
    return a.pts_ == b.pts_;
  }

 private:
  static PLBijection pointwise_extremum(const PLBijection& f,
                                        const PLBijection& g, bool take_min);
  static std::vector<PLPoint> canonicalize(std::vector<PLPoint> pts);

  std::vector<PLPoint> pts_;
};

}  // namespace latreg

#endif
