#include "latreg/sampler.hpp"

#include <algorithm>

#include "latreg/errors.hpp"

namespace latreg {

namespace {

// Fractions used for tent peaks; small denominators keep later exact
// arithmetic cheap.
constexpr int kFracNum[] = {1, 1, 1, 2, 3};
constexpr int kFracDen[] = {4, 3, 2, 3, 4};

}  // namespace

PLBijection ElementSampler::random_tent(long lo, long hi) {
  const long a = rng_.uniform_int(lo, hi - 2);
  const long w = rng_.uniform_int(1, std::min<long>(3, hi - a));
  const long b = a + w;
  const int fi = static_cast<int>(rng_.uniform_int(0, 4));
  const Rational m = Rational(a) + Rational(w * kFracNum[fi], kFracDen[fi]);
  const int si = static_cast<int>(rng_.uniform_int(0, 4));
  // Peak strictly between the diagonal and b, so the tent is positive.
  const Rational v = m + (Rational(b) - m) * Rational(kFracNum[si], kFracDen[si]);
  return PLBijection::from_points(
      {{Rational(a), Rational(a)}, {m, v}, {Rational(b), Rational(b)}});
}

PLBijection ElementSampler::random_pl(bool positive_only, int zone) {
  const long lo = zone < 0 ? -9 : (zone > 0 ? 1 : -9);
  const long hi = zone < 0 ? -1 : 9;
  const int factors = static_cast<int>(rng_.uniform_int(1, 4));
  PLBijection f;
  for (int i = 0; i < factors; ++i) {
    PLBijection t = random_tent(lo, hi);
    if (!positive_only && rng_.coin()) t = t.inverse();
    f = PLBijection::compose(f, t);
  }
  return f;
}

GroupElement ElementSampler::sample_in(const GroupSpec& spec, bool positive_only,
                                       int zone) {
  switch (spec.kind) {
    case GroupKind::Zn: {
      std::vector<long long> v(spec.size);
      for (auto& x : v)
        x = positive_only ? rng_.uniform_int(0, 3) : rng_.uniform_int(-3, 3);
      return GroupElement::zn(std::move(v));
    }
    case GroupKind::LexZ: {
      std::vector<long long> v(spec.size);
      for (auto& x : v) x = rng_.uniform_int(-5, 5);
      GroupElement g = GroupElement::lex(std::move(v));
      if (positive_only && !is_positive(g)) g = inverse(g);
      return g;
    }
    case GroupKind::PL:
      return GroupElement::pl(random_pl(positive_only, zone));
    case GroupKind::Product: {
      std::vector<GroupElement> parts;
      parts.reserve(spec.components.size());
      for (const auto& c : spec.components)
        parts.push_back(sample_in(c, positive_only, zone));
      return GroupElement::product(std::move(parts));
    }
  }
  throw StructuralError("ElementSampler: corrupt spec");
}

GroupElement ElementSampler::sample() { return sample_in(spec_, false, 0); }

GroupElement ElementSampler::sample_positive() {
  return sample_in(spec_, true, 0);
}

std::pair<GroupElement, GroupElement>
ElementSampler::sample_disjoint_positive_pair() {
  switch (spec_.kind) {
    case GroupKind::Zn: {
      // Disjoint supports.
      std::vector<long long> g(spec_.size, 0), q(spec_.size, 0);
      for (int i = 0; i < spec_.size; ++i) {
        switch (rng_.uniform_int(0, 2)) {
          case 0: g[i] = rng_.uniform_int(1, 3); break;
          case 1: q[i] = rng_.uniform_int(1, 3); break;
          default: break;
        }
      }
      return {GroupElement::zn(std::move(g)), GroupElement::zn(std::move(q))};
    }
    case GroupKind::LexZ: {
      // The order is total, so one side must be e.
      GroupElement p = sample_positive();
      GroupElement e = identity_of(spec_);
      return rng_.coin() ? std::pair{p, e} : std::pair{e, p};
    }
    case GroupKind::PL: {
      // Supports in disjoint intervals of the line.
      GroupElement g = GroupElement::pl(random_pl(true, -1));
      GroupElement q = GroupElement::pl(random_pl(true, +1));
      return {std::move(g), std::move(q)};
    }
    case GroupKind::Product: {
      std::vector<GroupElement> gs, qs;
      for (const auto& c : spec_.components) {
        ElementSampler sub(c, rng_.next_u64());
        auto [g, q] = sub.sample_disjoint_positive_pair();
        gs.push_back(std::move(g));
        qs.push_back(std::move(q));
      }
      return {GroupElement::product(std::move(gs)),
              GroupElement::product(std::move(qs))};
    }
  }
  throw StructuralError("ElementSampler: corrupt spec");
}

GroupElement ElementSampler::sample_positive_leq(const GroupElement& p) {
  return meet(p, sample_positive());
}

}  // namespace latreg
