#pragma once

#include "dubrovnik/laurent.hpp"
#include "dubrovnik/tangle.hpp"

namespace dubrovnik {

// Dubrovnik polynomial via the level reduction recurrence: the value of
// [b_1..b_n] is rewritten through values of shorter prefixes,
//
//   X(m, k) = l * X(m-1, b_{m-1}) + r * X(m-2, b_{m-2}) + p * X(m-1, b_{m-1} - 1)
//
// with (l, r, p) = level_coeffs(m, k, b_{m-1}), down to three fixed closure
// values at the bottom levels.  The tuple is brought to odd length first;
// tuples of negative entries are computed through the mirror substitution.
LaurentPoly2 dubrovnik_reduce(const BraidTuple& tuple);

}  // namespace dubrovnik
