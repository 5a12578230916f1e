#include "dubrovnik/tangle.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace dubrovnik {

bool operator==(const Fraction& lhs, const Fraction& rhs) {
    return lhs.p == rhs.p && lhs.q == rhs.q;
}

void validate_tuple(const BraidTuple& tuple) {
    if (tuple.empty()) throw std::invalid_argument("tuple must have at least one entry");
    for (size_t i = 0; i < tuple.size(); ++i) {
        if (tuple[i] == 0) {
            throw std::invalid_argument("entry " + std::to_string(i + 1) + " is zero");
        }
    }
}

bool sign_homogeneous(const BraidTuple& tuple) {
    bool any_positive = false;
    bool any_negative = false;
    for (int entry : tuple) {
        (entry > 0 ? any_positive : any_negative) = true;
    }
    return !(any_positive && any_negative);
}

void require_engine_tuple(const BraidTuple& tuple) {
    validate_tuple(tuple);
    if (!sign_homogeneous(tuple)) {
        throw std::invalid_argument("tuple entries must all have the same sign");
    }
    long long total = 0;
    for (int entry : tuple) total += std::abs(static_cast<long long>(entry));
    if (total > 10000) {
        throw std::invalid_argument("total crossing count exceeds the supported limit");
    }
}

const LaurentPoly2& unlink_value() {
    static const LaurentPoly2 v =
        LaurentPoly2({Term{1, -1, 1}, Term{0, 0, 1}, Term{-1, -1, -1}});
    return v;  // z^-1 a + 1 - z^-1 a^-1
}

TupleValue tuple_value(const BraidTuple& tuple) {
    validate_tuple(tuple);
    // Evaluate right to left: v_k = b_k + 1/v_{k+1}, tracking v as num/den
    // so the degenerate values 0 and infinity pass through exactly.
    BigInt num = tuple.back();
    BigInt den = 1;
    for (size_t i = tuple.size() - 1; i-- > 0;) {
        BigInt next_num = tuple[i] * num + den;
        den = num;
        num = next_num;
        if (num == 0) den = 1;
        if (den == 0) num = 1;
    }
    TupleValue value;
    if (num == 0) {
        value.kind = TupleValue::Kind::zero;
    } else if (den == 0) {
        value.kind = TupleValue::Kind::infinite;
    } else {
        value.kind = TupleValue::Kind::finite;
        BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num),
                                              boost::multiprecision::abs(den));
        num /= g;
        den /= g;
        if (num < 0) {
            num = -num;
            den = -den;
        }
        value.fraction = Fraction{num, den};
    }
    return value;
}

Fraction tuple_fraction(const BraidTuple& tuple) {
    TupleValue value = tuple_value(tuple);
    if (value.kind != TupleValue::Kind::finite) {
        throw std::domain_error("tuple continued fraction is degenerate (0 or infinite)");
    }
    return value.fraction;
}

BraidTuple tuple_normalize_odd(const BraidTuple& tuple) {
    validate_tuple(tuple);
    if (tuple.size() % 2 != 0) return tuple;
    if (!sign_homogeneous(tuple)) {
        throw std::invalid_argument("parity normalization needs a sign-homogeneous tuple");
    }
    const int sign = tuple.back() > 0 ? 1 : -1;
    BraidTuple out = tuple;
    if (out.back() == sign) {
        // [.., b, s] with a final single twist folds into the previous section.
        out.pop_back();
        out.back() += sign;
    } else {
        out.back() -= sign;
        out.push_back(sign);
    }
    return out;
}

BraidTuple tuple_from_fraction(const Fraction& fraction) {
    const BigInt& p = fraction.p;
    const BigInt& q = fraction.q;
    if (p <= 0 || q == 0) throw std::invalid_argument("fraction must have p > 0 and q != 0");
    BigInt abs_q = q < 0 ? BigInt(-q) : q;
    if (boost::multiprecision::gcd(p, abs_q) != 1) {
        throw std::invalid_argument("fraction must be reduced");
    }
    if (abs_q > p) {
        throw std::invalid_argument("fraction needs |q| <= p to expand with like-signed entries");
    }
    // Greedy continued-fraction expansion of p/|q| >= 1.
    BraidTuple out;
    BigInt num = p;
    BigInt den = abs_q;
    while (den != 0) {
        BigInt quotient = num / den;
        BigInt remainder = num % den;
        out.push_back(static_cast<int>(quotient));
        num = den;
        den = remainder;
    }
    out = tuple_normalize_odd(out);
    if (q < 0) {
        for (int& entry : out) entry = -entry;
    }
    return out;
}

BraidTuple tuple_mirror(const BraidTuple& tuple) {
    validate_tuple(tuple);
    BraidTuple out = tuple;
    for (int& entry : out) entry = -entry;
    return out;
}

BraidTuple tuple_reverse(const BraidTuple& tuple) {
    validate_tuple(tuple);
    BraidTuple out = tuple;
    std::reverse(out.begin(), out.end());
    return out;
}

namespace {

BigInt mod_into(const BigInt& value, const BigInt& modulus) {
    BigInt r = value % modulus;
    if (r < 0) r += modulus;
    return r;
}

}  // namespace

bool fractions_equivalent(const Fraction& lhs, const Fraction& rhs) {
    if (lhs.p != rhs.p) return false;
    const BigInt& p = lhs.p;
    BigInt r1 = mod_into(lhs.q, p);
    BigInt r2 = mod_into(rhs.q, p);
    if (r1 == r2) return true;
    return mod_into(r1 * r2, p) == mod_into(BigInt(1), p);
}

namespace {

// Standard diagram of a tuple as a flat crossing list over four strand
// positions (1 = bottom).  Odd sections twist positions (2,3) in the
// lower row, even sections positions (3,4) in the upper row; position 1
// is the untouched bottom strand of the closure.  The right-hand closure
// caps adjacent positions for odd length and nests (2,3) inside (1,4)
// for even length.
struct Crossing {
    int low;              // crossing sits on positions low, low + 1
    bool descending_over; // which diagonal carries the over strand
};

struct Diagram {
    std::vector<Crossing> crossings;
    size_t section_count = 0;

    int cap(bool right_side, int height) const {
        if (right_side && section_count % 2 == 0) {
            switch (height) {
                case 1: return 4;
                case 4: return 1;
                case 2: return 3;
                default: return 2;
            }
        }
        switch (height) {
            case 1: return 2;
            case 2: return 1;
            case 3: return 4;
            default: return 3;
        }
    }
};

Diagram build_diagram(const BraidTuple& tuple) {
    validate_tuple(tuple);
    if (!sign_homogeneous(tuple)) {
        throw std::invalid_argument("diagram construction needs a sign-homogeneous tuple");
    }
    Diagram diagram;
    diagram.section_count = tuple.size();
    for (size_t i = 0; i < tuple.size(); ++i) {
        const bool lower_row = i % 2 == 0;
        const int entry = tuple[i];
        Crossing crossing;
        crossing.low = lower_row ? 2 : 3;
        crossing.descending_over = (entry > 0) == lower_row;
        for (int k = 0; k < std::abs(entry); ++k) diagram.crossings.push_back(crossing);
    }
    return diagram;
}

struct Passage {
    int ascending_dir = 0;   // +-1 once the "/" strand has been traversed
    int descending_dir = 0;  // +-1 once the "\" strand has been traversed
};

struct Traversal {
    int components = 0;
    std::vector<Passage> passages;
};

// Walks every closed component of the diagram, recording for each crossing
// the direction in which each of its two strands was traversed.
Traversal trace(const Diagram& diagram) {
    const size_t m = diagram.crossings.size();
    Traversal result;
    result.passages.resize(m);
    // A strand segment lives at (gap, height): gap g lies between crossing
    // g-1 and crossing g, with gap 0 and gap m at the closure caps.
    std::vector<bool> seen(4 * (m + 1), false);
    auto seg = [m](size_t gap, int height) { return gap * 4 + (height - 1); };
    for (int seed_height = 1; seed_height <= 4; ++seed_height) {
        if (seen[seg(0, seed_height)]) continue;
        ++result.components;
        size_t gap = 0;
        int height = seed_height;
        int dir = 1;
        do {
            seen[seg(gap, height)] = true;
            if (dir == 1 && gap == m) {
                height = diagram.cap(true, height);
                dir = -1;
            } else if (dir == -1 && gap == 0) {
                height = diagram.cap(false, height);
                dir = 1;
            } else {
                const size_t index = dir == 1 ? gap : gap - 1;
                const Crossing& crossing = diagram.crossings[index];
                if (height == crossing.low || height == crossing.low + 1) {
                    // Entering at the lower position while moving right (or at
                    // the upper position moving left) means this passage rides
                    // the ascending diagonal.
                    const bool entered_low = height == crossing.low;
                    const bool ascending = entered_low == (dir == 1);
                    Passage& passage = result.passages[index];
                    (ascending ? passage.ascending_dir : passage.descending_dir) = dir;
                    height = entered_low ? crossing.low + 1 : crossing.low;
                }
                gap += dir;
            }
        } while (!(gap == 0 && height == seed_height && dir == 1));
    }
    return result;
}

}  // namespace

int diagram_component_count(const BraidTuple& tuple) {
    return trace(build_diagram(tuple)).components;
}

int tuple_writhe(const BraidTuple& tuple) {
    const Diagram diagram = build_diagram(tuple);
    const Traversal traversal = trace(diagram);
    if (traversal.components != 1) {
        throw std::domain_error(
            "writhe needs a knot; a two-component link has no orientation-free writhe");
    }
    int writhe = 0;
    for (size_t i = 0; i < diagram.crossings.size(); ++i) {
        const Passage& passage = traversal.passages[i];
        const int product = passage.ascending_dir * passage.descending_dir;
        writhe += diagram.crossings[i].descending_over ? product : -product;
    }
    return writhe;
}

LaurentPoly2 normalized_polynomial(const BraidTuple& tuple, const LaurentPoly2& p) {
    return poly_mul(poly_monomial(1, -tuple_writhe(tuple), 0), p);
}

BraidTuple parse_tuple(const std::string& text) {
    size_t pos = 0;
    auto fail = [&](const std::string& what) -> void {
        throw std::invalid_argument("tuple parse error at position " + std::to_string(pos) +
                                    ": " + what);
    };
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_space();
    if (pos >= text.size() || text[pos] != '[') fail("expected '['");
    ++pos;
    BraidTuple out;
    while (true) {
        skip_space();
        bool negative = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            negative = text[pos] == '-';
            ++pos;
        }
        size_t digits_start = pos;
        long long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > 1000000) fail("entry out of range");
            ++pos;
        }
        if (pos == digits_start) fail("expected an integer entry");
        out.push_back(static_cast<int>(negative ? -value : value));
        skip_space();
        if (pos >= text.size()) fail("expected ',' or ']'");
        if (text[pos] == ',') {
            ++pos;
            continue;
        }
        if (text[pos] == ']') {
            ++pos;
            break;
        }
        fail("expected ',' or ']'");
    }
    skip_space();
    if (pos != text.size()) fail("trailing characters after ']'");
    validate_tuple(out);
    return out;
}

Fraction parse_fraction(const std::string& text) {
    const size_t slash = text.find('/');
    if (slash == std::string::npos) {
        throw std::invalid_argument("fraction must look like p/q");
    }
    auto read = [&](const std::string& part, const char* which) -> BigInt {
        std::string trimmed;
        for (char c : part) {
            if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
        }
        if (trimmed.empty()) {
            throw std::invalid_argument(std::string("fraction is missing its ") + which);
        }
        try {
            return BigInt(trimmed);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("fraction has a malformed ") + which + ": " +
                                        trimmed);
        }
    };
    Fraction fraction{read(text.substr(0, slash), "numerator"),
                      read(text.substr(slash + 1), "denominator")};
    if (fraction.p <= 0) throw std::invalid_argument("fraction needs p > 0");
    if (fraction.q == 0) throw std::invalid_argument("fraction needs q != 0");
    BigInt abs_q = fraction.q < 0 ? BigInt(-fraction.q) : fraction.q;
    if (boost::multiprecision::gcd(fraction.p, abs_q) != 1) {
        throw std::invalid_argument("fraction must be reduced (gcd(p, |q|) = 1)");
    }
    return fraction;
}

std::string tuple_to_string(const BraidTuple& tuple) {
    std::ostringstream out;
    out << '[';
    for (size_t i = 0; i < tuple.size(); ++i) {
        if (i != 0) out << ',';
        out << tuple[i];
    }
    out << ']';
    return out.str();
}

std::string fraction_to_string(const Fraction& fraction) {
    return fraction.p.str() + "/" + fraction.q.str();
}

}  // namespace dubrovnik
