#ifndef DUBROVNIK_TANGLE_HPP
#define DUBROVNIK_TANGLE_HPP

#include "dubrovnik/laurent.hpp"

#include <string>
#include <vector>

namespace dubrovnik {

// Braid-form presentation of a rational tangle: a tuple of nonzero twist
// counts, one per section, alternating between the lower and upper rows of
// the standard diagram.  Sign-homogeneous tuples (all positive or all
// negative) describe alternating diagrams; mixed signs only appear
// transiently before canonicalization.
using BraidTuple = std::vector<int>;

// Reduced fraction p/q with p > 0 and q carrying the sign.  p odd means
// the closure is a knot, p even a two-component link.
struct Fraction {
    BigInt p;
    BigInt q;

    bool is_knot() const { return p % 2 != 0; }
};

bool operator==(const Fraction& lhs, const Fraction& rhs);

// Value of a tuple's continued fraction b1 + 1/(b2 + ... + 1/bn).  The
// zero and infinite values cannot arise from sign-homogeneous tuples but
// mixed-sign tuples can reach them.
struct TupleValue {
    enum class Kind { finite, zero, infinite };

    Kind kind = Kind::zero;
    Fraction fraction;  // meaningful only when kind == finite
};

// Throws std::invalid_argument when the tuple is empty or has a zero entry.
void validate_tuple(const BraidTuple& tuple);

bool sign_homogeneous(const BraidTuple& tuple);

// Common input contract of the polynomial engines: a valid tuple, all entries
// of one sign, with at most 10000 crossings in total.  Throws
// std::invalid_argument otherwise.
void require_engine_tuple(const BraidTuple& tuple);

// Polynomial of the two-component unlink, z^-1 a + 1 - z^-1 a^-1.  This is
// the closure value shared by every engine's bottom case.
const LaurentPoly2& unlink_value();

TupleValue tuple_value(const BraidTuple& tuple);

// Continued-fraction value of a tuple that is expected to be finite
// (always true for sign-homogeneous input); throws std::domain_error on a
// degenerate value.
Fraction tuple_fraction(const BraidTuple& tuple);

// Rewrites an even-length tuple to the odd-length presentation of the same
// diagram: [.., b_n] -> [.., b_n - 1, 1] for b_n > 1 and [.., b_{n-1} + 1]
// for b_n = 1 (entrywise mirrored for negative tuples).  Odd-length input
// is returned unchanged.
BraidTuple tuple_normalize_odd(const BraidTuple& tuple);

// Builds the odd-length sign-homogeneous tuple with the given continued
// fraction.  Requires 1 <= |q| <= p; entries are positive for q > 0 and
// negative for q < 0.
BraidTuple tuple_from_fraction(const Fraction& fraction);

BraidTuple tuple_mirror(const BraidTuple& tuple);

BraidTuple tuple_reverse(const BraidTuple& tuple);

// Whether K(p/q) and K(p'/q') present the same knot or link: p = p' and
// q' congruent to q or to q^{-1} modulo p.
bool fractions_equivalent(const Fraction& lhs, const Fraction& rhs);

// Number of closed components of the standard diagram (1 when p is odd,
// 2 when p is even).  Requires a sign-homogeneous tuple.
int diagram_component_count(const BraidTuple& tuple);

// Writhe of the standard diagram with either orientation of the single
// component.  Requires a sign-homogeneous tuple whose closure is a knot;
// throws std::domain_error for a two-component link, where the writhe
// would depend on the orientation choice.
int tuple_writhe(const BraidTuple& tuple);

// a^{-writhe} * p, the ambient-isotopy normalization of a regular-isotopy
// polynomial computed from the tuple's standard diagram.
LaurentPoly2 normalized_polynomial(const BraidTuple& tuple, const LaurentPoly2& p);

// Parses "[4,3,5]" (throws std::invalid_argument on malformed text).
BraidTuple parse_tuple(const std::string& text);

// Parses "69/16" or "7/-2" into a reduced fraction; rejects p <= 0, q = 0
// and non-reduced input.
Fraction parse_fraction(const std::string& text);

std::string tuple_to_string(const BraidTuple& tuple);

std::string fraction_to_string(const Fraction& fraction);

}  // namespace dubrovnik

#endif  // DUBROVNIK_TANGLE_HPP
