#ifndef LATREG_SERIALIZATION_HPP
#define LATREG_SERIALIZATION_HPP

#include "latreg/dilation.hpp"
#include "latreg/group_element.hpp"
#include "latreg/regularity.hpp"
#include "latreg/report.hpp"
#include "latreg/representation.hpp"

namespace latreg {

/// Elements: {"kind":"zn","v":[...]}, {"kind":"lex","v":[...]},
/// {"kind":"pl","bp":[[xn,xd,yn,yd],...]}, {"kind":"product","parts":[...]}.
/// Rationals are numerator/denominator integer pairs (decimal strings when
/// they do not fit in 64 bits).
Json to_json(const GroupElement& g);
GroupElement group_element_from_json(const Json& j);

/// Group instances: {"kind":"zn","n":5}, {"kind":"lex","k":3},
/// {"kind":"pl"}, {"kind":"product","components":[...]}.
Json to_json(const GroupSpec& spec);
GroupSpec group_spec_from_json(const Json& j);

/// {"n":..., "d":..., "gens":[[[re,im],...],...], "label":...}; matrices are
/// flat row-major lists of [re,im] pairs.
Json to_json(const Representation& rep);
Representation representation_from_json(const Json& j);

Json matrix_to_json(const CMat& m);
CMat matrix_from_json(const Json& j, int rows, int cols);

Json to_json(const ConeTuple& t);
ConeTuple cone_tuple_from_json(const Json& j);

Json to_json(const Certificate& cert);

Json to_json(const WindowDilation& w);

}  // namespace latreg

#endif
