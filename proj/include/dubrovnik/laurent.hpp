#ifndef DUBROVNIK_LAURENT_HPP
#define DUBROVNIK_LAURENT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace dubrovnik {

using BigInt = boost::multiprecision::cpp_int;

// One monomial coeff * a^a_exp * z^z_exp of a two-variable Laurent polynomial.
struct Term {
    int a_exp = 0;
    int z_exp = 0;
    BigInt coeff;
};

bool operator==(const Term& lhs, const Term& rhs);

// Sparse Laurent polynomial in Z[a^{±1}, z^{±1}] with exact integer
// coefficients.
//
// Terms are kept in a canonical flat form: sorted by (z_exp, a_exp)
// ascending with no zero coefficients.  Equality is therefore plain
// term-for-term comparison and formatting is deterministic.
class LaurentPoly2 {
public:
    LaurentPoly2() = default;

    // Accepts any term list; sorts, merges duplicate exponent pairs and
    // drops zero coefficients.
    explicit LaurentPoly2(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

private:
    std::vector<Term> terms_;
};

LaurentPoly2 poly_zero();
LaurentPoly2 poly_monomial(const BigInt& coeff, int a_exp, int z_exp);
LaurentPoly2 poly_add(const LaurentPoly2& lhs, const LaurentPoly2& rhs);
LaurentPoly2 poly_sub(const LaurentPoly2& lhs, const LaurentPoly2& rhs);
LaurentPoly2 poly_mul(const LaurentPoly2& lhs, const LaurentPoly2& rhs);

// The substitution z -> -z, a -> a^{-1}.  An involution and a ring
// homomorphism; it carries the polynomial of a diagram to the polynomial
// of its mirror image.
LaurentPoly2 poly_mirror_substitute(const LaurentPoly2& p);

enum class PolyStyle { plain, latex, json };

// Renders the canonical term order (ascending z exponent, ties by
// ascending a exponent).  plain: "-a^-1 z^-1 + a z^-1 + 1".  latex is the
// same with braced exponents.  json is a list of term objects
// {"a_exp": int, "z_exp": int, "coeff": "<decimal string>"}.
std::string poly_format(const LaurentPoly2& p, PolyStyle style = PolyStyle::plain);

// Inverse of poly_format for the plain and json styles.  Throws
// std::invalid_argument on malformed input, with the character position
// for the plain style.
LaurentPoly2 poly_parse(const std::string& text, PolyStyle style = PolyStyle::plain);

bool operator==(const LaurentPoly2& lhs, const LaurentPoly2& rhs);
bool operator!=(const LaurentPoly2& lhs, const LaurentPoly2& rhs);

inline LaurentPoly2 operator+(const LaurentPoly2& lhs, const LaurentPoly2& rhs) {
    return poly_add(lhs, rhs);
}
inline LaurentPoly2 operator-(const LaurentPoly2& lhs, const LaurentPoly2& rhs) {
    return poly_sub(lhs, rhs);
}
inline LaurentPoly2 operator*(const LaurentPoly2& lhs, const LaurentPoly2& rhs) {
    return poly_mul(lhs, rhs);
}

}  // namespace dubrovnik

#endif  // DUBROVNIK_LAURENT_HPP
