#include "knotcert/laurent.hpp"

#include <random>
#include <vector>

#include "doctest.h"

using namespace knotcert;

namespace {

LaurentPoly q_pow(long long e) { return LaurentPoly::monomial(1, e); }

// Sum_{k=1..n} (q^(4k-3) - q^(4k-1)); the twist-ladder partial sum used by the
// closed-form Jones recurrence.
LaurentPoly ladder_sum(int n) {
    LaurentPoly p;
    for (int k = 1; k <= n; ++k) {
        p += q_pow(4 * k - 3);
        p -= q_pow(4 * k - 1);
    }
    return p;
}

LaurentPoly random_poly(std::mt19937& rng, bool integer_exps = false) {
    std::uniform_int_distribution<int> nterms(0, 6), exp2(-12, 12), coeff(-9, 9);
    LaurentPoly p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        long long e2 = exp2(rng);
        if (integer_exps && (e2 % 2)) ++e2;
        p += LaurentPoly::monomial2(coeff(rng), e2);
    }
    return p;
}

const char* kPretzelText =
    "-q^9 + q^7 - q^5 + q^3 + q + q^-1 + q^-3 - q^-5 + q^-7 - q^-9";

}  // namespace

TEST_CASE("laurent basic arithmetic") {
    LaurentPoly a = q_pow(1) + q_pow(-1);           // q + q^-1
    LaurentPoly p1 = q_pow(1) - q_pow(3);           // q - q^3
    CHECK(a * p1 == LaurentPoly::one() - q_pow(4)); // telescoped product
    CHECK(a - a == LaurentPoly::zero());
    CHECK((a - a).is_zero());
    CHECK(scalar_mul(3, a) == a + a + a);
    CHECK(scalar_mul(0, a).is_zero());
    CHECK(a * LaurentPoly::zero() == LaurentPoly::zero());
}

TEST_CASE("laurent zero is never stored") {
    LaurentPoly a = q_pow(2) - q_pow(2);
    CHECK(a.terms2().empty());
    LaurentPoly b = LaurentPoly::monomial2(0, 4);
    CHECK(b.is_zero());
}

TEST_CASE("substitute_inverse involution and telescoping partner") {
    LaurentPoly v = parse_poly(kPretzelText, "q");
    CHECK(substitute_inverse(substitute_inverse(v)) == v);
    // That ten-term polynomial is palindromic.
    CHECK(substitute_inverse(v) == v);
    // (q + q^-1) * ladder_sum(n) == 1 - q^4n
    for (int n = 1; n <= 5; ++n) {
        LaurentPoly lhs = (q_pow(1) + q_pow(-1)) * ladder_sum(n);
        CHECK(lhs == LaurentPoly::one() - q_pow(4 * n));
    }
}

TEST_CASE("derivatives of the twist-ladder sums at 1") {
    for (int n = 1; n <= 4; ++n) {
        LaurentPoly p = ladder_sum(n);
        CHECK(eval_at_one(p) == 0);
        CHECK(eval_at_one(derivative(p, 1)) == Int(-2 * n));
        // d^3/dq^3 at 1: each summand contributes -6(4k-3)^2.
        Int expect = 0;
        for (int k = 1; k <= n; ++k) expect += Int(-6) * (4 * k - 3) * (4 * k - 3);
        CHECK(eval_at_one(derivative(p, 3)) == expect);
        CHECK(expect == Int(-32) * n * n * n + Int(24) * n * n + Int(2) * n);
    }
}

TEST_CASE("pretzel constant derivative values at 1") {
    LaurentPoly v = parse_poly(kPretzelText, "q");
    CHECK(eval_at_one(v) == 2);
    CHECK(eval_at_one(derivative(v, 1)) == 0);
    CHECK(eval_at_one(derivative(v, 2)) == -94);
}

TEST_CASE("derivative rejects half-integer exponents and bad orders") {
    LaurentPoly h = LaurentPoly::monomial2(1, 1);  // q^1/2
    CHECK_THROWS_AS(derivative(h), std::invalid_argument);
    CHECK_THROWS_AS(derivative(q_pow(1), 0), std::invalid_argument);
    CHECK_THROWS_AS(derivative(q_pow(1), 13), std::invalid_argument);
    CHECK_NOTHROW(derivative(q_pow(1) + q_pow(-4), 3));
}

TEST_CASE("halve_exponents") {
    LaurentPoly p = q_pow(4) - q_pow(-2) + LaurentPoly::constant(5);
    LaurentPoly h = halve_exponents(p);
    CHECK(h == q_pow(2) - q_pow(-1) + LaurentPoly::constant(5));
    CHECK_THROWS_AS(halve_exponents(q_pow(3)), std::invalid_argument);
}

TEST_CASE("render canonical form") {
    LaurentPoly v = parse_poly(kPretzelText, "q");
    CHECK(render(v, "q") == kPretzelText);
    CHECK(render(LaurentPoly::zero(), "q") == "0");
    CHECK(render(LaurentPoly::constant(-3), "t") == "-3");
    CHECK(render(q_pow(1), "t") == "t");
    CHECK(render(-q_pow(-1), "t") == "-t^-1");
    CHECK(render(scalar_mul(2, LaurentPoly::monomial2(1, 1)), "q") == "2q^1/2");
    CHECK(render(LaurentPoly::monomial2(-1, -3), "q") == "-q^-3/2");
    LaurentPoly m = q_pow(2) - scalar_mul(3, q_pow(0)) + q_pow(-2);
    CHECK(render(m, "t") == "t^2 - 3 + t^-2");
}

TEST_CASE("parse round trip and error handling") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly p = random_poly(rng);
        CHECK(parse_poly(render(p, "q"), "q") == p);
    }
    CHECK(parse_poly("t - 1 + t^-1", "t") == q_pow(1) - LaurentPoly::one() + q_pow(-1));
    CHECK(parse_poly("1q^2", "q") == q_pow(2));
    CHECK(parse_poly("  0 ", "q").is_zero());
    CHECK_THROWS_AS(parse_poly("t + 1", "q"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("q^", "q"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("q^1/3", "q"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("", "q"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("2 3", "q"), std::invalid_argument);
}

TEST_CASE("ring and operator properties on random inputs") {
    std::mt19937 rng(987654);
    for (int trial = 0; trial < 120; ++trial) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(substitute_inverse(a * b) == substitute_inverse(a) * substitute_inverse(b));
        CHECK(eval_at_one(a * b) == eval_at_one(a) * eval_at_one(b));
        CHECK(eval_at_one(a + b) == eval_at_one(a) + eval_at_one(b));
        if (!b.is_zero()) CHECK(divide_exact(a * b, b) == a);
    }
}

TEST_CASE("derivative Leibniz rule on integer-exponent randoms") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentPoly a = random_poly(rng, true), b = random_poly(rng, true);
        CHECK(derivative(a * b) == derivative(a) * b + a * derivative(b));
        CHECK(derivative(a + b) == derivative(a) + derivative(b));
    }
}
