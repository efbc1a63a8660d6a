#ifndef LATREG_SAMPLER_HPP
#define LATREG_SAMPLER_HPP

#include <cstdint>
#include <utility>

#include "latreg/group_element.hpp"
#include "latreg/rng.hpp"

namespace latreg {

/// Seeded source of elements of one group instance. Deterministic from the
/// 64-bit seed. PL elements are products of 1-4 random "tent" generators,
/// which gives genuinely non-commuting pairs.
class ElementSampler {
 public:
  ElementSampler(GroupSpec spec, std::uint64_t seed)
      : spec_(std::move(spec)), rng_(seed) {}

  const GroupSpec& spec() const { return spec_; }
  Rng& rng() { return rng_; }

  GroupElement sample();
  GroupElement sample_positive();

  /// (g, q) positive with g n q = e. In a totally ordered component one of
  /// the two is necessarily the identity.
  std::pair<GroupElement, GroupElement> sample_disjoint_positive_pair();

  /// Positive g with g <= p (p positive).
  GroupElement sample_positive_leq(const GroupElement& p);

 private:
  GroupElement sample_in(const GroupSpec& spec, bool positive_only, int zone);
  PLBijection random_tent(long lo, long hi);
  PLBijection random_pl(bool positive_only, int zone);

  GroupSpec spec_;
  Rng rng_;
};

}  // namespace latreg

#endif
