// SPDX-License-Identifier: MIT

#include "htt/scalar.hpp"

#include <doctest.h>

using namespace htt;

TEST_SUITE("scalar")
{
    TEST_CASE("parse and print in lowest terms")
    {
        CHECK(Scalar::parse("6/4").str() == "3/2");
        CHECK(Scalar::parse("-3").str() == "-3");
        CHECK(Scalar::parse("0/7").str() == "0");
    }

    TEST_CASE("malformed text is rejected")
    {
        CHECK_THROWS_AS(Scalar::parse("1/0"), std::invalid_argument);
        CHECK_THROWS_AS(Scalar::parse("a"), std::invalid_argument);
        CHECK_THROWS_AS(Scalar::parse(""), std::invalid_argument);
        CHECK_THROWS_AS(Scalar::parse("1/-2"), std::invalid_argument);
        CHECK_THROWS_AS(Scalar::parse("-2/-1"), std::invalid_argument);
        CHECK_THROWS_AS(Scalar::parse("1.5"), std::invalid_argument);
    }

    TEST_CASE("field arithmetic on small values")
    {
        const Scalar a = Scalar::parse("1/3");
        const Scalar b = Scalar::parse("-1/6");
        CHECK((a + b).str() == "1/6");
        CHECK((a - b).str() == "1/2");
        CHECK((a * b).str() == "-1/18");
        CHECK((a / b).str() == "-2");
        CHECK(b.inverse().str() == "-6");
        CHECK((-a).str() == "-1/3");
        CHECK((a - a).is_zero());
        CHECK((a * Scalar(3)).is_one());
        CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);
    }

    TEST_CASE("values beyond 64 bits stay exact")
    {
        // 2^62 * 2^62 = 2^124, then divided back down.
        const Scalar big = Scalar::parse("4611686018427387904");
        const Scalar sq = big * big;
        CHECK(sq.str() == "21267647932558653966460912964485513216");
        CHECK((sq / big) == big);
        CHECK((sq - sq).is_zero());
        const Scalar q = Scalar::parse("1/4611686018427387904") * Scalar::parse("1/3");
        CHECK(q.str() == "1/13835058055282163712");
        CHECK((q * Scalar::parse("13835058055282163712")).is_one());
        CHECK(Scalar::parse("123456789012345678901234567890").str() == "123456789012345678901234567890");
    }

    TEST_CASE("prime field mode")
    {
        FieldScope p(5);
        CHECK(Scalar::parse("1/2").str() == "3");
        CHECK(Scalar(-1).str() == "4");
        CHECK((Scalar(3) + Scalar(4)).str() == "2");
        CHECK(Scalar(2).inverse().str() == "3");
        CHECK((Scalar(5)).is_zero());
        CHECK_THROWS_AS(Scalar::parse("1/5"), std::domain_error);
    }

    TEST_CASE("field modulus validation")
    {
        CHECK_THROWS_AS(Field::set_modulus(4), std::invalid_argument);
        CHECK_THROWS_AS(Field::set_modulus(1), std::invalid_argument);
        CHECK(Field::modulus() == 0);
        {
            FieldScope p(7);
            CHECK(Field::modulus() == 7);
        }
        CHECK(Field::modulus() == 0);
    }
}
