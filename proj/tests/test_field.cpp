#include <doctest.h>

#include "minrank/field.hpp"

using namespace minrank;

TEST_CASE("field construction rejects non-primes and out-of-range orders") {
    CHECK_NOTHROW(Field(2));
    CHECK_NOTHROW(Field(8191));  // largest prime in range
    CHECK_THROWS_AS(Field(1), FieldError);
    CHECK_THROWS_AS(Field(4), FieldError);
    CHECK_THROWS_AS(Field(9), FieldError);
    CHECK_THROWS_AS(Field(8192), FieldError);
    CHECK_THROWS_AS(Field(10007), FieldError);
}

TEST_CASE("arithmetic examples") {
    Field f2(2), f3(3), f5(5), f7(7);
    CHECK(f2.add(1, 1) == 0);
    CHECK(f5.add(3, 4) == 2);
    CHECK(f3.add(0, 2) == 2);
    CHECK(f2.mul(1, 1) == 1);
    CHECK(f5.mul(3, 4) == 2);
    CHECK(f7.mul(0, 5) == 0);
    CHECK(f2.inv(1) == 1);
    CHECK(f3.inv(2) == 2);
    CHECK(f7.inv(3) == 5);
    // over F2, negation is the identity
    CHECK(f2.neg(0) == 0);
    CHECK(f2.neg(1) == 1);
    CHECK(f5.sub(1, 3) == 3);
}

TEST_CASE("inverse of zero is rejected") {
    CHECK_THROWS_AS(Field(5).inv(0), FieldError);
}

TEST_CASE("element operations check for field mismatch") {
    Field f2(2), f3(3);
    FieldElem a(1, f2), b(2, f3);
    CHECK_THROWS_AS(a + b, FieldError);
    CHECK_THROWS_AS(a * b, FieldError);
    CHECK_THROWS_AS(a - b, FieldError);
    CHECK_THROWS_AS(FieldElem(2, f2), FieldError);
    CHECK((FieldElem(1, f2) + FieldElem(1, f2)).value == 0);
    CHECK(FieldElem(2, f3).inverse() == FieldElem(2, f3));
}

TEST_CASE("field axioms hold on exhaustive element pairs") {
    for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u}) {
        Field f(q);
        for (std::uint32_t a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) {
                CHECK(f.mul(a, f.inv(a)) == 1);
                CHECK(f.inv(f.inv(a)) == a);
                // extended Euclid agrees with a^(q-2)
                CHECK(f.inv(a) == f.pow(a, q - 2));
            }
            for (std::uint32_t b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (std::uint32_t c = 0; c < q; ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}
