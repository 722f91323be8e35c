#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wordmap/gf.hpp"

using namespace wordmap;

TEST_CASE("prime field arithmetic") {
    Field F{FieldSpec::prime_field(7)};
    CHECK(F.q() == 7);
    CHECK(F.add(3, 5) == 1);
    CHECK(F.mul(3, 5) == 1);
    CHECK(F.neg(0) == 0);
    CHECK(F.sub(2, 5) == 4);
    for (uint32_t a = 1; a < 7; ++a)
        CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK_THROWS_AS(F.inv(0), std::domain_error);
    CHECK(F.from_int(-3) == 4);
}

TEST_CASE("default modulus for F9 is x^2 + 1") {
    FieldSpec fs = FieldSpec::for_q(9);
    CHECK(fs.p == 3);
    CHECK(fs.k == 2);
    CHECK(fs.modulus == std::vector<uint32_t>{1, 0, 1});
    Field F{fs};
    // x (encoded 3) squares to -1 (encoded 2)
    CHECK(F.mul(3, 3) == 2);
    for (uint32_t a = 1; a < 9; ++a) {
        CHECK(F.mul(a, F.inv(a)) == 1);
        CHECK(F.add(a, F.neg(a)) == 0);
    }
    // frobenius: (a+b)^3 = a^3 + b^3
    for (uint32_t a = 0; a < 9; ++a)
        for (uint32_t b = 0; b < 9; ++b)
            CHECK(F.pow(F.add(a, b), 3) == F.add(F.pow(a, 3), F.pow(b, 3)));
}

TEST_CASE("characteristic two extension") {
    Field F{FieldSpec::for_q(8)};
    CHECK(F.p() == 2);
    for (uint32_t a = 0; a < 8; ++a)
        CHECK(F.add(a, a) == 0);
    for (uint32_t a = 1; a < 8; ++a)
        CHECK(F.pow(a, 7) == 1);
    // every element is a square in characteristic 2
    for (uint32_t a = 0; a < 8; ++a)
        CHECK(F.is_square(a));
}

TEST_CASE("squares in odd characteristic") {
    Field F{FieldSpec::prime_field(5)};
    int squares = 0;
    for (uint32_t a = 1; a < 5; ++a)
        if (F.is_square(a))
            ++squares;
    CHECK(squares == 2); // {1, 4}
    CHECK(F.is_square(0));
    CHECK(F.is_square(4));
    CHECK(!F.is_square(2));
}

TEST_CASE("field spec validation") {
    CHECK_THROWS_AS(FieldSpec::prime_field(4), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::for_q(6), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::for_q(1u << 20), std::invalid_argument); // > default bound
    // x^2 + x over F2 is reducible
    CHECK_THROWS_AS(FieldSpec::extension(2, 2, {0, 1, 1}), std::invalid_argument);
    // x^2 + x + 1 over F2 is fine
    FieldSpec fs = FieldSpec::extension(2, 2, {1, 1, 1});
    CHECK(fs.q == 4);
    // non-monic rejected
    CHECK_THROWS_AS(FieldSpec::extension(3, 2, {1, 0, 2}), std::invalid_argument);
    // supplying an explicit q=25 modulus: x^2 + 2 is irreducible mod 5
    Field F{FieldSpec::extension(5, 2, {2, 0, 1})};
    CHECK(F.q() == 25);
    for (uint32_t a = 1; a < 25; ++a)
        CHECK(F.mul(a, F.inv(a)) == 1);
}

TEST_CASE("larger field tables stay consistent") {
    Field F{FieldSpec::for_q(49)};
    for (uint32_t a = 1; a < 49; ++a) {
        CHECK(F.mul(a, F.inv(a)) == 1);
        CHECK(F.mul(a, 1) == a);
    }
    // associativity spot checks
    for (uint32_t a : {3u, 17u, 30u})
        for (uint32_t b : {5u, 23u, 48u})
            for (uint32_t c : {2u, 11u, 40u})
                CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
}
