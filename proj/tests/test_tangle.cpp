#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dubrovnik/tangle.hpp"

#include <stdexcept>
#include <vector>

using namespace dubrovnik;

namespace {

// All sign-homogeneous positive tuples of the given length with entries in
// {1, ..., max_entry}.
std::vector<BraidTuple> positive_tuples(int length, int max_entry) {
    std::vector<BraidTuple> out;
    BraidTuple current(length, 1);
    while (true) {
        out.push_back(current);
        int i = length - 1;
        while (i >= 0 && current[i] == max_entry) {
            current[i] = 1;
            --i;
        }
        if (i < 0) break;
        ++current[i];
    }
    return out;
}

}  // namespace

TEST_CASE("tuple validation") {
    CHECK_THROWS_AS(validate_tuple({}), std::invalid_argument);
    CHECK_THROWS_AS(validate_tuple({1, 0, 2}), std::invalid_argument);
    CHECK_NOTHROW(validate_tuple({1, -2}));
    CHECK(sign_homogeneous({2, 1, 4}));
    CHECK(sign_homogeneous({-2, -1}));
    CHECK_FALSE(sign_homogeneous({2, -1}));
}

TEST_CASE("continued fraction values") {
    CHECK(tuple_fraction({4, 3, 5}) == Fraction{69, 16});
    CHECK(tuple_fraction({2, 2}) == Fraction{5, 2});
    CHECK(tuple_fraction({1, 1, 2}) == Fraction{5, 3});
    CHECK(tuple_fraction({3}) == Fraction{3, 1});
    CHECK(tuple_fraction({1}) == Fraction{1, 1});
    CHECK(tuple_fraction({-4, -3, -5}) == Fraction{69, -16});
    CHECK(tuple_fraction({-1}) == Fraction{1, -1});

    CHECK(Fraction{69, 16}.is_knot());
    CHECK_FALSE(Fraction{2, 1}.is_knot());

    CHECK(tuple_value({1, -1}).kind == TupleValue::Kind::zero);
    CHECK(tuple_value({1, -1, 1}).kind == TupleValue::Kind::infinite);
    CHECK_THROWS_AS(tuple_fraction({1, -1}), std::domain_error);
    CHECK_THROWS_AS(tuple_fraction({1, -1, 1}), std::domain_error);
}

TEST_CASE("parity normalization") {
    CHECK(tuple_normalize_odd({2, 2}) == BraidTuple{2, 1, 1});
    CHECK(tuple_normalize_odd({2, 1}) == BraidTuple{3});
    CHECK(tuple_normalize_odd({1, 1}) == BraidTuple{2});
    CHECK(tuple_normalize_odd({3, 1, 1}) == BraidTuple{3, 1, 1});
    CHECK(tuple_normalize_odd({-2, -2}) == BraidTuple{-2, -1, -1});
    CHECK(tuple_normalize_odd({-2, -1}) == BraidTuple{-3});

    // The rewrite never changes the continued fraction.
    for (int length : {2, 4}) {
        for (const BraidTuple& t : positive_tuples(length, 3)) {
            CHECK(tuple_fraction(tuple_normalize_odd(t)) == tuple_fraction(t));
            CHECK(tuple_normalize_odd(t).size() % 2 == 1);
        }
    }
}

TEST_CASE("tuple_from_fraction expands and round-trips") {
    CHECK(tuple_from_fraction({69, 16}) == BraidTuple{4, 3, 5});
    CHECK(tuple_from_fraction({5, 3}) == BraidTuple{1, 1, 2});
    CHECK(tuple_from_fraction({5, 2}) == BraidTuple{2, 1, 1});
    CHECK(tuple_from_fraction({3, 1}) == BraidTuple{3});
    CHECK(tuple_from_fraction({1, 1}) == BraidTuple{1});
    CHECK(tuple_from_fraction({7, -4}) == BraidTuple{-1, -1, -3});

    for (int p = 1; p <= 200; ++p) {
        for (int q = 1; q <= p; ++q) {
            if (boost::multiprecision::gcd(BigInt(p), BigInt(q)) != 1) continue;
            for (int sign : {1, -1}) {
                const Fraction f{p, sign * q};
                const BraidTuple t = tuple_from_fraction(f);
                CHECK(t.size() % 2 == 1);
                CHECK(sign_homogeneous(t));
                CHECK((t[0] > 0) == (sign > 0));
                CHECK(tuple_fraction(t) == f);
            }
        }
    }

    CHECK_THROWS_AS(tuple_from_fraction({6, 4}), std::invalid_argument);
    CHECK_THROWS_AS(tuple_from_fraction({3, 5}), std::invalid_argument);
    CHECK_THROWS_AS(tuple_from_fraction({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(tuple_from_fraction({3, 0}), std::invalid_argument);
}

TEST_CASE("mirror and reverse") {
    CHECK(tuple_mirror({4, 3, 5}) == BraidTuple{-4, -3, -5});
    CHECK(tuple_mirror({-1}) == BraidTuple{1});
    CHECK(tuple_reverse({4, 3, 5}) == BraidTuple{5, 3, 4});

    // An odd-length tuple and its reversal present the same knot or link.
    for (int length : {1, 3, 5}) {
        for (const BraidTuple& t : positive_tuples(length, length == 5 ? 2 : 3)) {
            CHECK(fractions_equivalent(tuple_fraction(t), tuple_fraction(tuple_reverse(t))));
        }
    }
}

TEST_CASE("fraction equivalence criterion") {
    CHECK(fractions_equivalent({7, 2}, {7, 4}));
    CHECK(fractions_equivalent({5, 2}, {5, 3}));
    CHECK_FALSE(fractions_equivalent({3, 1}, {5, 1}));
    CHECK_FALSE(fractions_equivalent({7, 2}, {7, 3}));
    CHECK(fractions_equivalent({9, 2}, {9, 2}));
    CHECK(fractions_equivalent({1, 1}, {1, -1}));

    for (int p = 2; p <= 40; ++p) {
        for (int q = 1; q < p; ++q) {
            if (boost::multiprecision::gcd(BigInt(p), BigInt(q)) != 1) continue;
            const Fraction f{p, q};
            CHECK(fractions_equivalent(f, f));
            CHECK(fractions_equivalent(f, Fraction{p, q - p}));  // shift modulo p
            for (int r = 1; r < p; ++r) {
                if (boost::multiprecision::gcd(BigInt(p), BigInt(r)) != 1) continue;
                const Fraction g{p, r};
                CHECK(fractions_equivalent(f, g) == fractions_equivalent(g, f));
                const bool expected = (q == r) || (q * r) % p == 1;
                CHECK(fractions_equivalent(f, g) == expected);
            }
        }
    }
}

TEST_CASE("component count matches fraction parity") {
    for (int length : {1, 2, 3, 4}) {
        for (const BraidTuple& t : positive_tuples(length, 3)) {
            const int expected = tuple_fraction(t).is_knot() ? 1 : 2;
            CHECK(diagram_component_count(t) == expected);
            CHECK(diagram_component_count(tuple_mirror(t)) == expected);
        }
    }
}

TEST_CASE("writhe of small standard diagrams") {
    CHECK(tuple_writhe({1}) == 1);
    CHECK(tuple_writhe({3}) == 3);
    CHECK(tuple_writhe({-3}) == -3);
    CHECK(tuple_writhe({-1}) == -1);
    CHECK(tuple_writhe({2, 1}) == 3);
    CHECK(tuple_writhe({2, 2}) == 0);      // figure-eight diagram
    CHECK(tuple_writhe({2, 1, 1}) == 0);

    CHECK_THROWS_AS(tuple_writhe({2}), std::domain_error);
    CHECK_THROWS_AS(tuple_writhe({1, 1}), std::domain_error);

    // Mirroring the diagram negates every crossing sign.
    for (int length : {1, 2, 3, 4}) {
        for (const BraidTuple& t : positive_tuples(length, 3)) {
            if (!tuple_fraction(t).is_knot()) continue;
            CHECK(tuple_writhe(tuple_mirror(t)) == -tuple_writhe(t));
        }
    }
}

TEST_CASE("normalized polynomial divides out the writhe") {
    const LaurentPoly2 a = poly_monomial(1, 1, 0);
    CHECK(normalized_polynomial({1}, a) == poly_monomial(1, 0, 0));
    CHECK(normalized_polynomial({3}, poly_monomial(5, 4, 2)) == poly_monomial(5, 1, 2));
}

TEST_CASE("tuple and fraction parsing") {
    CHECK(parse_tuple("[4,3,5]") == BraidTuple{4, 3, 5});
    CHECK(parse_tuple(" [ -4 , -3 , -5 ] ") == BraidTuple{-4, -3, -5});
    CHECK(parse_tuple("[1]") == BraidTuple{1});
    CHECK_THROWS_AS(parse_tuple("4,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tuple("[]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tuple("[1,,2]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tuple("[1 2]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tuple("[0]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tuple("[1,2] x"), std::invalid_argument);

    CHECK(parse_fraction("69/16") == Fraction{69, 16});
    CHECK(parse_fraction("7/-2") == Fraction{7, -2});
    CHECK(parse_fraction(" 3 / 1 ") == Fraction{3, 1});
    CHECK_THROWS_AS(parse_fraction("69"), std::invalid_argument);
    CHECK_THROWS_AS(parse_fraction("0/1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_fraction("3/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_fraction("6/4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_fraction("x/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_fraction("-3/2"), std::invalid_argument);

    CHECK(tuple_to_string({4, 3, 5}) == "[4,3,5]");
    CHECK(fraction_to_string({69, -16}) == "69/-16");
}
