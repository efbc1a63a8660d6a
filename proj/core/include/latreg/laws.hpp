#ifndef LATREG_LAWS_HPP
#define LATREG_LAWS_HPP

#include <cstdint>

#include "latreg/group_element.hpp"
#include "latreg/report.hpp"

namespace latreg {

/// Exact property suite for one group instance: the distributivity,
/// inversion and meet/join identities of a lattice ordered group, the
/// g = g_+ g_-^{-1} decomposition, both quotient-part routes, and the
/// translation lemmas for positive triples with g n q = e. Everything is
/// checked with exact arithmetic; failures are report entries carrying the
/// witness elements, never exceptions.
Report law_suite(const GroupSpec& spec, std::uint64_t seed, long trials);

}  // namespace latreg

#endif
