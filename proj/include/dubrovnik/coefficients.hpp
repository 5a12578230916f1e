#pragma once

#include "dubrovnik/laurent.hpp"

namespace dubrovnik {

// Binomial coefficient with arbitrary precision; zero outside 0 <= k <= n.
BigInt binomial(int n, int k);

// The three twist-coefficient families, indexed by an integer number of
// half-twists m (positive or negative).  Each is a Laurent polynomial in z
// and a.  They satisfy Fibonacci-style recurrences in m:
//
//   A(m) = z A(m-1) + A(m-2)           A(0) = 0,  A(1) = 1,  A(2) = z
//   B(m) = z B(m-1) + B(m-2)           B(0) = 1,  B(1) = z,  B(2) = z^2 + 1
//   C(m) = a^-1 C(m-1) + z B(m-1)      C(0) = 0,  C(1) = z
//
// and mirrored versions for m < 0.  The functions below evaluate explicit
// summation formulas; coeff_triple_recurrent builds the same values purely
// from the recurrences so the two routes can be checked against each other.
LaurentPoly2 coeff_A(int m);
LaurentPoly2 coeff_B(int m);
LaurentPoly2 coeff_C(int m);

struct CoeffTriple {
    LaurentPoly2 A;
    LaurentPoly2 B;
    LaurentPoly2 C;
};

CoeffTriple coeff_triple_recurrent(int m);

// Coefficients of the one-level reduction: eliminating the top level of a
// braid tuple rewrites its value as
//
//   l * (previous level)  +  r * (level before that)  +  p * (previous level
//                                                          with one less twist)
//
// where k is the number of twists being eliminated and b_prev the twist count
// of the level below.  The sign epsilon = +1 on odd levels n and -1 on even
// levels; it flips z and inverts a throughout.  For k = 0 the convention is
// l = p = 0 and r = a^(epsilon * b_prev).
struct LevelCoeffs {
    LaurentPoly2 l;
    LaurentPoly2 r;
    LaurentPoly2 p;
};

LevelCoeffs level_coeffs(int n, int k, int b_prev);

}  // namespace dubrovnik
