#include "doctest.h"

#include <random>

#include "pil/integer.hpp"

using pil::Integer;

TEST_CASE("integer arithmetic spills into big values and back") {
    Integer a(INT64_MAX);
    a += Integer(1);
    CHECK_FALSE(a.is_small());
    CHECK(a.to_string() == "9223372036854775808");
    a -= Integer(1);
    CHECK(a.is_small());
    CHECK(a == Integer(INT64_MAX));

    Integer b(INT64_MIN);
    b.negate();
    CHECK(b.to_string() == "9223372036854775808");
    Integer c = b * b;
    CHECK(c.to_string() == "85070591730234615865843651857942052864");
    CHECK(pil::div_exact(c, b) == b);
}

TEST_CASE("integer parsing") {
    CHECK(Integer("-123") == Integer(-123));
    CHECK(Integer("+7") == Integer(7));
    CHECK(Integer("123456789012345678901234567890").to_string() == "123456789012345678901234567890");
    CHECK_THROWS_AS(Integer("12a"), std::invalid_argument);
    CHECK_THROWS_AS(Integer(""), std::invalid_argument);
}

TEST_CASE("floor division and gcd agree with GMP") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> d(-1000000, 1000000);
    for (int i = 0; i < 2000; ++i) {
        const Integer a(d(rng));
        Integer b(d(rng));
        if (b.is_zero()) b = Integer(3);
        mpz_class q, r, g;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
        mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
        CHECK(pil::floor_div(a, b) == Integer(q));
        CHECK(pil::floor_mod(a, b) == Integer(r));
        CHECK(pil::gcd(a, b) == Integer(g));
        const auto e = pil::xgcd(a, b);
        CHECK(e.g == Integer(g));
        CHECK(e.s * a + e.t * b == e.g);
    }
}

TEST_CASE("xgcd on big operands") {
    const Integer a("340282366920938463463374607431768211457");
    const Integer b("18446744073709551629");
    const auto e = pil::xgcd(a, b);
    CHECK(e.s * a + e.t * b == e.g);
    CHECK(e.g == pil::gcd(a, b));
}

TEST_CASE("lcm, valuation, primality") {
    CHECK(pil::lcm(Integer(4), Integer(6)) == Integer(12));
    CHECK(pil::lcm(Integer(4), Integer(0)) == Integer(0));
    CHECK(pil::valuation(Integer(48), Integer(2)) == 4);
    CHECK(pil::is_probable_prime(Integer(97)));
    CHECK_FALSE(pil::is_probable_prime(Integer(91)));
}
