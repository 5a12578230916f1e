#pragma once

#include "dubrovnik/laurent.hpp"
#include "dubrovnik/tangle.hpp"

namespace dubrovnik {

// Dubrovnik polynomial of the rational knot or link presented by a
// sign-homogeneous braid tuple, computed by iterated application of the
// skein and curl relations to the leftmost crossing of the diagram.
// The tuple is first rewritten to odd length; its value is unchanged.
LaurentPoly2 dubrovnik_skein(const BraidTuple& tuple);

// The same rewriting system applied to the tuple exactly as given, with no
// parity normalization.  Exposed so the normalization step itself can be
// checked for value preservation.  Set memoize to false to force a plain
// tree-shaped recursion (only sensible for small tuples).
LaurentPoly2 dubrovnik_skein_direct(const BraidTuple& tuple, bool memoize = true);

}  // namespace dubrovnik
