#include <doctest.h>

#include <random>

#include "highwater/scalar.hpp"

using namespace highwater;

namespace {

// Brute-force inverse mod p.
long inv_mod(long x, long p) {
    x = ((x % p) + p) % p;
    for (long y = 1; y < p; ++y)
        if (x * y % p == 1) return y;
    return -1;
}

long frac_mod(long n, long d, long p) { return (((n % p) + p) % p) * inv_mod(d, p) % p; }

}  // namespace

TEST_CASE("field construction") {
    CHECK(Field::make(0).is_rational());
    CHECK(Field::make(5).characteristic() == 5);
    CHECK(Field::make(13).characteristic() == 13);
    for (std::uint64_t bad : {1u, 2u, 3u, 4u, 6u, 9u, 15u, 25u}) CHECK_THROWS_AS(Field::make(bad), FieldError);
}

TEST_CASE("fractions") {
    Field Q = Field::rationals(), F5 = Field::make(5);
    CHECK(Scalar(Q, 3, 8).to_string() == "3/8");
    CHECK(Scalar(Q, 6, -16).to_string() == "-3/8");
    CHECK(Scalar(F5, 1, 2).residue() == 3);
    CHECK(Scalar(F5, 5, 2).is_zero());
    CHECK(Scalar(F5, -1).to_string() == "4");
    CHECK_THROWS_AS(Scalar(F5, 1, 5), AlgebraError);
    CHECK_THROWS_AS(Scalar(Q, 1, 0), AlgebraError);
}

TEST_CASE("GF(p) arithmetic agrees with integer residues") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-60, 60);
    for (long p : {5L, 7L, 11L, 13L, 101L}) {
        Field F = Field::make(static_cast<std::uint64_t>(p));
        for (int t = 0; t < 300; ++t) {
            long an = d(rng), ad = 0, bn = d(rng), bd = 0;
            while (ad % p == 0) ad = d(rng);
            while (bd % p == 0) bd = d(rng);
            long x = frac_mod(an, ad, p), y = frac_mod(bn, bd, p);
            Scalar a(F, an, ad), b(F, bn, bd);
            CHECK(static_cast<long>(a.residue()) == x);
            CHECK(static_cast<long>((a + b).residue()) == (x + y) % p);
            CHECK(static_cast<long>((a - b).residue()) == ((x - y) % p + p) % p);
            CHECK(static_cast<long>((a * b).residue()) == x * y % p);
            if (y != 0) CHECK(static_cast<long>((a / b).residue()) == x * inv_mod(y, p) % p);
        }
    }
}

TEST_CASE("rational field axioms on random values") {
    Field Q = Field::rationals();
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-30, 30);
    auto rnd = [&] {
        long den = 0;
        while (den == 0) den = d(rng);
        return Scalar(Q, d(rng), den);
    };
    for (int t = 0; t < 200; ++t) {
        Scalar a = rnd(), b = rnd(), c = rnd();
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK(a - a == Scalar::zero(Q));
        if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(Q));
    }
}

TEST_CASE("parsing and mismatched fields") {
    Field Q = Field::rationals(), F7 = Field::make(7);
    CHECK(Scalar::parse(Q, "-3/4") == Scalar(Q, -3, 4));
    CHECK(Scalar::parse(F7, "1/2") == Scalar(F7, 4));
    CHECK_THROWS(Scalar::parse(Q, "x"));
    CHECK_THROWS_AS(Scalar(Q, 1) + Scalar(F7, 1), FieldMismatch);
    CHECK_THROWS_AS(Scalar(Field::make(5), 1) * Scalar(F7, 1), FieldMismatch);
}
