#include "latreg/pl_bijection.hpp"

#include <algorithm>

#include "latreg/errors.hpp"

namespace latreg {

namespace {

// p1, p2, p3 lie on one line.
bool collinear(const PLPoint& p1, const PLPoint& p2, const PLPoint& p3) {
  return (p2.y - p1.y) * (p3.x - p2.x) == (p3.y - p2.y) * (p2.x - p1.x);
}

bool on_diagonal(const PLPoint& p) { return p.x == p.y; }

}  // namespace

std::vector<PLPoint> PLBijection::canonicalize(std::vector<PLPoint> pts) {
  // Remove interior points collinear with their neighbours.
  std::vector<PLPoint> kept;
  kept.reserve(pts.size());
  for (auto& p : pts) {
    while (kept.size() >= 2 && collinear(kept[kept.size() - 2], kept.back(), p))
      kept.pop_back();
    kept.push_back(std::move(p));
  }
  // Trim diagonal runs at either end: two consecutive diagonal points span a
  // slope-1 segment, so the outer one is redundant.
  while (kept.size() >= 2 && on_diagonal(kept[0]) && on_diagonal(kept[1]))
    kept.erase(kept.begin());
  while (kept.size() >= 2 && on_diagonal(kept[kept.size() - 1]) &&
         on_diagonal(kept[kept.size() - 2]))
    kept.pop_back();
  if (kept.size() <= 2) kept.clear();  // nothing left but the identity
  return kept;
}

PLBijection PLBijection::from_points(std::vector<PLPoint> pts) {
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (!(pts[i - 1].x < pts[i].x))
      throw StructuralError("PLBijection: breakpoint x values must be strictly increasing");
    if (!(pts[i - 1].y < pts[i].y))
      throw StructuralError("PLBijection: map must be strictly increasing (all slopes > 0)");
  }
  if (!pts.empty() && (!on_diagonal(pts.front()) || !on_diagonal(pts.back())))
    throw StructuralError("PLBijection: must equal the identity outside the breakpoint span");
  PLBijection f;
  f.pts_ = canonicalize(std::move(pts));
  return f;
}

Rational PLBijection::evaluate(const Rational& x) const {
  if (pts_.empty() || x <= pts_.front().x || x >= pts_.back().x) return x;
  // Find the segment [pts_[i], pts_[i+1]] containing x.
  auto it = std::upper_bound(pts_.begin(), pts_.end(), x,
                             [](const Rational& v, const PLPoint& p) { return v < p.x; });
  const PLPoint& hi = *it;
  const PLPoint& lo = *(it - 1);
  return lo.y + (x - lo.x) * (hi.y - lo.y) / (hi.x - lo.x);
}

PLBijection PLBijection::inverse() const {
  PLBijection g;
  g.pts_.reserve(pts_.size());
  for (const auto& p : pts_) g.pts_.push_back({p.y, p.x});
  // Swapping coordinates preserves ordering, diagonal endpoints and
  // collinearity, so the result is already canonical.
  return g;
}

PLBijection PLBijection::compose(const PLBijection& f, const PLBijection& g) {
  if (g.is_identity()) return f;
  if (f.is_identity()) return g;
  // f(g(x)) changes slope exactly at breakpoints of g and at preimages under
  // g of breakpoints of f.
  const PLBijection ginv = g.inverse();
  std::vector<Rational> xs;
  xs.reserve(f.pts_.size() + g.pts_.size());
  for (const auto& p : g.pts_) xs.push_back(p.x);
  for (const auto& p : f.pts_) xs.push_back(ginv.evaluate(p.x));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<PLPoint> pts;
  pts.reserve(xs.size());
  for (const auto& x : xs) pts.push_back({x, f.evaluate(g.evaluate(x))});
  PLBijection h;
  h.pts_ = canonicalize(std::move(pts));
  return h;
}

PLBijection PLBijection::pointwise_extremum(const PLBijection& f,
                                            const PLBijection& g,
                                            bool take_min) {
  if (f.is_identity() && g.is_identity()) return {};
  std::vector<Rational> xs;
  xs.reserve(f.pts_.size() + g.pts_.size());
  for (const auto& p : f.pts_) xs.push_back(p.x);
  for (const auto& p : g.pts_) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  // Both maps are linear between consecutive candidates; add the exact
  // crossing point of each pair of segments.
  std::vector<Rational> all = xs;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const Rational &xl = xs[i - 1], &xr = xs[i];
    const Rational fl = f.evaluate(xl), fr = f.evaluate(xr);
    const Rational gl = g.evaluate(xl), gr = g.evaluate(xr);
    const Rational df = fr - fl, dg = gr - gl;
    if (df == dg) continue;
    const Rational cross = xl + (gl - fl) * (xr - xl) / (df - dg);
    if (xl < cross && cross < xr) all.push_back(cross);
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  std::vector<PLPoint> pts;
  pts.reserve(all.size());
  for (const auto& x : all) {
    const Rational fv = f.evaluate(x), gv = g.evaluate(x);
    const bool f_wins = take_min ? (fv <= gv) : (fv >= gv);
    pts.push_back({x, f_wins ? fv : gv});
  }
  PLBijection h;
  h.pts_ = canonicalize(std::move(pts));
  return h;
}

PLBijection PLBijection::pointwise_min(const PLBijection& f, const PLBijection& g) {
  return pointwise_extremum(f, g, true);
}

PLBijection PLBijection::pointwise_max(const PLBijection& f, const PLBijection& g) {
  return pointwise_extremum(f, g, false);
}

bool PLBijection::dominates_identity() const {
  // Linear interpolation of points on or above the diagonal stays on or
  // above it, so checking breakpoints suffices.
  for (const auto& p : pts_)
    if (p.y < p.x) return false;
  return true;
}

}  // namespace latreg
