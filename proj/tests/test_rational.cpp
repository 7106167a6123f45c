#include <doctest.h>

#include "persuasion/generate.hpp"
#include "persuasion/rational.hpp"

using persuasion::InvalidRational;
using persuasion::Rational;
using persuasion::SeededRng;
using persuasion::rational;

TEST_CASE("construction normalizes to lowest terms") {
    CHECK(rational(2, 60) == rational(1, 30));
    CHECK(rational(-1, -3) == rational(1, 3));
    CHECK(rational(0, 7).str() == "0/1");
    CHECK(rational(6, -4).str() == "-3/2");
    CHECK_THROWS_AS(rational(1, 0), InvalidRational);
}

TEST_CASE("arithmetic and exact ordering") {
    CHECK(rational(1, 3) + rational(1, 6) == rational(1, 2));
    CHECK(rational(1, 2) - rational(1, 3) == rational(1, 6));
    CHECK(rational(2, 3) * rational(3, 4) == rational(1, 2));
    CHECK(rational(1, 3) / rational(2, 3) == rational(1, 2));
    CHECK_THROWS_AS(rational(1, 2) / rational(0, 5), InvalidRational);

    CHECK(rational(21, 41) < rational(11, 21));
    CHECK(rational(11, 21) >= rational(11, 21));
    CHECK(rational(-1, 2) < rational(0, 1));
}

TEST_CASE("parse and render round-trip") {
    CHECK(Rational::parse("11/21") == rational(11, 21));
    CHECK(Rational::parse("-3/9") == rational(-1, 3));
    CHECK(Rational::parse("7") == rational(7, 1));
    CHECK(Rational::parse("11/21").str() == "11/21");
    CHECK_THROWS_AS(Rational::parse("x/y"), InvalidRational);
    CHECK_THROWS_AS(Rational::parse("1/0"), InvalidRational);
}

TEST_CASE("field axioms hold on random fractions") {
    SeededRng rng(42);
    for (int trial = 0; trial < 500; ++trial) {
        auto draw = [&rng] {
            const long long num = static_cast<long long>(rng.range(0, 2000)) - 1000;
            const long long den = static_cast<long long>(rng.range(1, 1000));
            return Rational(num, den);
        };
        const Rational a = draw(), b = draw(), c = draw();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a + b) - b == a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK(a / b * b == a);
        CHECK(a.den() > 0);
        CHECK(boost::multiprecision::gcd(boost::multiprecision::abs(a.num()), a.den()) <= 1);
    }
}
