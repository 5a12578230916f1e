#include "dubrovnik/laurent.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>
#include <utility>

namespace dubrovnik {

namespace {

bool term_order(const Term& lhs, const Term& rhs) {
    if (lhs.z_exp != rhs.z_exp) return lhs.z_exp < rhs.z_exp;
    return lhs.a_exp < rhs.a_exp;
}

std::vector<Term> canonicalize(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), term_order);
    std::vector<Term> out;
    out.reserve(terms.size());
    for (Term& t : terms) {
        if (!out.empty() && out.back().a_exp == t.a_exp && out.back().z_exp == t.z_exp) {
            out.back().coeff += t.coeff;
        } else {
            out.push_back(std::move(t));
        }
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Term& t) { return t.coeff == 0; }),
              out.end());
    return out;
}

}  // namespace

bool operator==(const Term& lhs, const Term& rhs) {
    return lhs.a_exp == rhs.a_exp && lhs.z_exp == rhs.z_exp && lhs.coeff == rhs.coeff;
}

LaurentPoly2::LaurentPoly2(std::vector<Term> terms) : terms_(canonicalize(std::move(terms))) {}

LaurentPoly2 poly_zero() { return LaurentPoly2(); }

LaurentPoly2 poly_monomial(const BigInt& coeff, int a_exp, int z_exp) {
    return LaurentPoly2({Term{a_exp, z_exp, coeff}});
}

LaurentPoly2 poly_add(const LaurentPoly2& lhs, const LaurentPoly2& rhs) {
    const auto& a = lhs.terms();
    const auto& b = rhs.terms();
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    size_t i = 0;
    size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (term_order(a[i], b[j])) {
            out.push_back(a[i++]);
        } else if (term_order(b[j], a[i])) {
            out.push_back(b[j++]);
        } else {
            BigInt c = a[i].coeff + b[j].coeff;
            if (c != 0) out.push_back(Term{a[i].a_exp, a[i].z_exp, std::move(c)});
            ++i;
            ++j;
        }
    }
    out.insert(out.end(), a.begin() + i, a.end());
    out.insert(out.end(), b.begin() + j, b.end());
    return LaurentPoly2(std::move(out));
}

LaurentPoly2 poly_sub(const LaurentPoly2& lhs, const LaurentPoly2& rhs) {
    std::vector<Term> negated = rhs.terms();
    for (Term& t : negated) t.coeff = -t.coeff;
    return poly_add(lhs, LaurentPoly2(std::move(negated)));
}

LaurentPoly2 poly_mul(const LaurentPoly2& lhs, const LaurentPoly2& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return poly_zero();
    std::vector<Term> products;
    products.reserve(lhs.terms().size() * rhs.terms().size());
    for (const Term& x : lhs.terms()) {
        for (const Term& y : rhs.terms()) {
            products.push_back(Term{x.a_exp + y.a_exp, x.z_exp + y.z_exp, x.coeff * y.coeff});
        }
    }
    return LaurentPoly2(std::move(products));
}

LaurentPoly2 poly_mirror_substitute(const LaurentPoly2& p) {
    std::vector<Term> terms = p.terms();
    for (Term& t : terms) {
        t.a_exp = -t.a_exp;
        if (t.z_exp % 2 != 0) t.coeff = -t.coeff;
    }
    return LaurentPoly2(std::move(terms));
}

bool operator==(const LaurentPoly2& lhs, const LaurentPoly2& rhs) {
    const auto& a = lhs.terms();
    const auto& b = rhs.terms();
    return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                      [](const Term& x, const Term& y) { return x == y; });
}

bool operator!=(const LaurentPoly2& lhs, const LaurentPoly2& rhs) { return !(lhs == rhs); }

namespace {

std::string exponent_text(int value, bool braced) {
    if (braced) return "^{" + std::to_string(value) + "}";
    return "^" + std::to_string(value);
}

std::string format_terms(const LaurentPoly2& p, bool braced) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : p.terms()) {
        const bool negative = t.coeff < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        BigInt magnitude = negative ? BigInt(-t.coeff) : t.coeff;
        const bool has_variables = t.a_exp != 0 || t.z_exp != 0;
        std::string body;
        if (magnitude != 1 || !has_variables) body = magnitude.str();
        if (t.a_exp != 0) {
            if (!body.empty()) body += ' ';
            body += 'a';
            if (t.a_exp != 1) body += exponent_text(t.a_exp, braced);
        }
        if (t.z_exp != 0) {
            if (!body.empty()) body += ' ';
            body += 'z';
            if (t.z_exp != 1) body += exponent_text(t.z_exp, braced);
        }
        out += body;
    }
    return out;
}

std::string format_json(const LaurentPoly2& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const Term& t : p.terms()) {
        terms.push_back({{"a_exp", t.a_exp}, {"z_exp", t.z_exp}, {"coeff", t.coeff.str()}});
    }
    return terms.dump();
}

// Recursive-descent reader for the plain style.  The grammar is exactly
// what format_terms emits, with whitespace allowed anywhere between
// tokens: a signed sequence of terms, each term an optional decimal
// coefficient followed by optional a and z powers.
struct PlainParser {
    const std::string& text;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at position " +
                                    std::to_string(pos) + ": " + what);
    }

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() const { return pos >= text.size(); }

    char peek() const { return text[pos]; }

    bool at_digit() const {
        return !at_end() && std::isdigit(static_cast<unsigned char>(text[pos]));
    }

    BigInt read_magnitude() {
        size_t start = pos;
        while (at_digit()) ++pos;
        if (pos == start) fail("expected digits");
        return BigInt(text.substr(start, pos - start));
    }

    int read_exponent() {
        bool negative = false;
        if (!at_end() && (peek() == '-' || peek() == '+')) {
            negative = peek() == '-';
            ++pos;
        }
        size_t start = pos;
        while (at_digit()) ++pos;
        if (pos == start) fail("expected exponent digits");
        long long value = 0;
        for (size_t k = start; k < pos; ++k) {
            value = value * 10 + (text[k] - '0');
            if (value > std::numeric_limits<int>::max()) fail("exponent out of range");
        }
        return static_cast<int>(negative ? -value : value);
    }

    // Reads one variable power ("a", "a^-3", ...) for the given letter.
    bool read_power(char letter, int& exponent) {
        if (at_end() || peek() != letter) return false;
        ++pos;
        if (!at_end() && peek() == '^') {
            ++pos;
            exponent = read_exponent();
        } else {
            exponent = 1;
        }
        return true;
    }

    Term read_term(bool negative) {
        Term term;
        term.coeff = 1;
        bool any = false;
        if (at_digit()) {
            term.coeff = read_magnitude();
            any = true;
        }
        skip_space();
        if (read_power('a', term.a_exp)) {
            any = true;
            skip_space();
        }
        if (read_power('z', term.z_exp)) any = true;
        if (!any) fail("expected a term");
        if (negative) term.coeff = -term.coeff;
        return term;
    }

    LaurentPoly2 run() {
        std::vector<Term> terms;
        skip_space();
        if (at_end()) fail("empty input");
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = peek() == '-';
            ++pos;
            skip_space();
        }
        terms.push_back(read_term(negative));
        skip_space();
        while (!at_end()) {
            char sign = peek();
            if (sign != '+' && sign != '-') fail("expected '+' or '-'");
            ++pos;
            skip_space();
            terms.push_back(read_term(sign == '-'));
            skip_space();
        }
        return LaurentPoly2(std::move(terms));
    }
};

int json_int_field(const nlohmann::json& object, const char* key) {
    if (!object.contains(key) || !object[key].is_number_integer()) {
        throw std::invalid_argument(std::string("polynomial json term needs integer '") +
                                    key + "'");
    }
    return object[key].get<int>();
}

LaurentPoly2 parse_json(const std::string& text) {
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw std::invalid_argument(std::string("polynomial json parse error: ") + err.what());
    }
    if (!parsed.is_array()) throw std::invalid_argument("polynomial json must be a term list");
    std::vector<Term> terms;
    terms.reserve(parsed.size());
    for (const auto& entry : parsed) {
        if (!entry.is_object()) throw std::invalid_argument("polynomial json term must be an object");
        Term term;
        term.a_exp = json_int_field(entry, "a_exp");
        term.z_exp = json_int_field(entry, "z_exp");
        if (!entry.contains("coeff") || !entry["coeff"].is_string()) {
            throw std::invalid_argument("polynomial json term needs string 'coeff'");
        }
        const std::string coeff = entry["coeff"].get<std::string>();
        try {
            term.coeff = BigInt(coeff);
        } catch (const std::exception&) {
            throw std::invalid_argument("polynomial json coefficient is not a decimal integer: " +
                                        coeff);
        }
        terms.push_back(std::move(term));
    }
    return LaurentPoly2(std::move(terms));
}

}  // namespace

std::string poly_format(const LaurentPoly2& p, PolyStyle style) {
    switch (style) {
        case PolyStyle::plain:
            return format_terms(p, false);
        case PolyStyle::latex:
            return format_terms(p, true);
        case PolyStyle::json:
            return format_json(p);
    }
    throw std::invalid_argument("unknown polynomial style");
}

LaurentPoly2 poly_parse(const std::string& text, PolyStyle style) {
    switch (style) {
        case PolyStyle::plain: {
            PlainParser parser{text};
            return parser.run();
        }
        case PolyStyle::json:
            return parse_json(text);
        case PolyStyle::latex:
            throw std::invalid_argument("latex style is output-only");
    }
    throw std::invalid_argument("unknown polynomial style");
}

}  // namespace dubrovnik
