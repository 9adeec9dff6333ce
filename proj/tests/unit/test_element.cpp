#include <doctest.h>

#include <random>

#include "highwater/element.hpp"
#include "highwater/sampling.hpp"
#include "support/first_model.hpp"

using namespace highwater;

namespace {

const Field Q = Field::rationals();

Scalar q(long n, long d = 1) { return Scalar(Q, n, d); }

}  // namespace

TEST_CASE("basis constructors and vanishing conventions") {
    CHECK(sigma(Q, 0).is_zero());
    CHECK(s(Q, 0).is_zero());
    CHECK(p(Q, 1, 4).is_zero());
    CHECK(p(Q, 0, 3) == -p(Q, 1, 3) - p(Q, 2, 3));
    CHECK(p(Q, 4, 3) == p(Q, 1, 3));
    CHECK(z(Q, 0, 3) == p(Q, 1, 3) - p(Q, 2, 3));
    CHECK(z(Q, 1, 3) == p(Q, 1, 3) + q(2) * p(Q, 2, 3));
    CHECK(z(Q, 2, 5).is_zero());
    CHECK(first_def_s(Q, 0, 1) == s(Q, 1));
    CHECK(first_def_s(Q, 1, 3) == s(Q, 3) + p(Q, 1, 3) + q(2) * p(Q, 2, 3));
    CHECK(first_def_s(Q, 0, 3) + first_def_s(Q, 1, 3) + first_def_s(Q, 2, 3) == q(3) * s(Q, 3));
}

TEST_CASE("element bookkeeping") {
    Element x = a(Q, 0) - a(Q, 0);
    CHECK(x.is_zero());
    CHECK(x.terms().empty());
    Element y = a(Q, 0) + s(Q, 2) + p(Q, 1, 3);
    CHECK(y.a_part() == a(Q, 0));
    CHECK(y.s_part() == s(Q, 2));
    CHECK(y.p_part() == p(Q, 1, 3));
    CHECK((q(0) * y).is_zero());
    CHECK(p(Q, 2, 6).in_j());
    CHECK_FALSE(y.in_j());
    CHECK_THROWS_AS(a(Q, 0) + a(Field::make(5), 1), FieldMismatch);
}

TEST_CASE("products of basis vectors") {
    CHECK(a(Q, 0) * a(Q, 1) == q(1, 2) * a(Q, 0) + q(1, 2) * a(Q, 1) + s(Q, 1));
    CHECK(a(Q, 0) * a(Q, 0) == a(Q, 0));
    CHECK(a(Q, 0) * a(Q, 3) == q(1, 2) * (a(Q, 0) + a(Q, 3)) + s(Q, 3) + p(Q, 1, 3) - p(Q, 2, 3));
    CHECK(a(Q, 0) * p(Q, 1, 3) == q(3, 2) * p(Q, 1, 3) - p(Q, 2, 3));
    CHECK(s(Q, 3) * p(Q, 1, 3) == q(3, 2) * p(Q, 1, 3) - q(3, 8) * p(Q, 1, 6));
    CHECK(p(Q, 1, 3) * p(Q, 1, 3) ==
          q(1, 2) * (p(Q, 1, 3) + q(2) * p(Q, 2, 3)) - q(1, 8) * (p(Q, 1, 6) + q(2) * p(Q, 2, 6)));
}

TEST_CASE("weight and Frobenius form") {
    CHECK(weight(a(Q, 0) * a(Q, 1)) == q(1));
    CHECK(weight(s(Q, 5) + p(Q, 2, 6)).is_zero());
    CHECK(weight(q(3) * a(Q, 2) - a(Q, 7)) == q(2));
    CHECK(frobenius(a(Q, 0), a(Q, 1)) == q(1));
    CHECK(frobenius(a(Q, 0) - a(Q, 1), a(Q, 5)).is_zero());
    CHECK(frobenius(q(2) * a(Q, 0), q(3) * a(Q, 1)) == q(6));
}

TEST_CASE("product agrees with the first-basis model") {
    for (std::uint64_t ch : {0u, 5u, 7u, 11u}) {
        Field F = Field::make(ch);
        std::mt19937_64 rng(100 + ch);
        for (int t = 0; t < 400; ++t) {
            Element x = random_element(F, rng, 6), y = random_element(F, rng, 6);
            CHECK(oracle::FirstModel::from(x * y) == oracle::FirstModel::from(x) * oracle::FirstModel::from(y));
        }
    }
}

TEST_CASE("product is commutative and bilinear") {
    for (std::uint64_t ch : {0u, 5u}) {
        Field F = Field::make(ch);
        std::mt19937_64 rng(200 + ch);
        for (int t = 0; t < 200; ++t) {
            Element x = random_element(F, rng, 5), y = random_element(F, rng, 5), w = random_element(F, rng, 5);
            Scalar c(F, -3, 2);
            CHECK(x * y == y * x);
            CHECK((x + c * w) * y == x * y + c * (w * y));
            CHECK(multiply(x, y) == x * y);
        }
    }
}

TEST_CASE("every a-axis is idempotent and J absorbs products") {
    std::mt19937_64 rng(9);
    for (long i = -6; i <= 6; ++i) CHECK(a(Q, i) * a(Q, i) == a(Q, i));
    for (int t = 0; t < 200; ++t) {
        Element x = random_element(Q, rng, 6);
        Element j = q(2) * p(Q, 1, 3 * (t % 4 + 1)) - p(Q, 2, 3 * (t % 3 + 1));
        CHECK((x * j).in_j());
    }
}
