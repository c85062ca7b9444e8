#include "doctest.h"

#include "eil/polynomial.hpp"

using namespace eil;

TEST_CASE("polynomial basics") {
    IntPolynomial zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == IntPolynomial::kMinusInfinity);
    CHECK(zero.to_string() == "0");

    IntPolynomial p({BigInt(1), BigInt(8), BigInt(11)});
    CHECK(p.degree() == 2);
    CHECK(p.leading_coefficient() == 11);
    CHECK(p.evaluate_one() == 20);
    CHECK(p.to_string() == "1 + 8*t + 11*t^2");

    IntPolynomial trimmed({BigInt(5), BigInt(0), BigInt(0)});
    CHECK(trimmed.degree() == 0);
}

TEST_CASE("polynomial arithmetic") {
    IntPolynomial a({BigInt(1), BigInt(1)});  // 1 + t
    IntPolynomial b({BigInt(1), BigInt(-1)}); // 1 - t
    CHECK((a * b) == IntPolynomial({BigInt(1), BigInt(0), BigInt(-1)}));
    CHECK((a + b) == IntPolynomial({BigInt(2)}));
    CHECK((a - a).is_zero());
    CHECK(a.shifted(2) == IntPolynomial({BigInt(0), BigInt(0), BigInt(1), BigInt(1)}));
}

TEST_CASE("(1-t)^k expansion") {
    CHECK(IntPolynomial::one_minus_t_pow(0) == IntPolynomial::constant(1));
    CHECK(IntPolynomial::one_minus_t_pow(2) ==
          IntPolynomial({BigInt(1), BigInt(-2), BigInt(1)}));
    IntPolynomial p = IntPolynomial::one_minus_t_pow(1);
    IntPolynomial q = IntPolynomial::constant(1);
    for (int k = 1; k <= 8; ++k) {
        q = q * p;
        CHECK(q == IntPolynomial::one_minus_t_pow(k));
    }
}

TEST_CASE("exact division by (1-t)") {
    IntPolynomial p = IntPolynomial::one_minus_t_pow(3);
    CHECK(p.divided_by_one_minus_t() == IntPolynomial::one_minus_t_pow(2));
    IntPolynomial q({BigInt(2), BigInt(3)});
    CHECK((q * IntPolynomial::one_minus_t_pow(1)).divided_by_one_minus_t() == q);
    CHECK_THROWS_AS(q.divided_by_one_minus_t(), std::invalid_argument);
}

TEST_CASE("display form") {
    CHECK(IntPolynomial({BigInt(1), BigInt(1), BigInt(-2), BigInt(1)}).to_string() ==
          "1 + t - 2*t^2 + t^3");
    CHECK(IntPolynomial({BigInt(0), BigInt(-1)}).to_string() == "-t");
    CHECK(IntPolynomial({BigInt(-3), BigInt(0), BigInt(7)}).to_string() == "-3 + 7*t^2");
}
