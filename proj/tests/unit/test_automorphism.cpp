#include <doctest.h>

#include <random>

#include "highwater/automorphism.hpp"
#include "highwater/sampling.hpp"

using namespace highwater;

namespace {

const Field Q = Field::rationals();

std::vector<Automorphism> samples() {
    std::vector<Automorphism> out;
    for (long k = -4; k <= 4; ++k) {
        out.push_back(tau(k));
        out.push_back(theta(k));
    }
    return out;
}

}  // namespace

TEST_CASE("action on basis vectors") {
    CHECK(apply(tau(1), a(Q, 0)) == a(Q, 1));
    CHECK(apply(tau(0), p(Q, 1, 3)) == -p(Q, 2, 3));
    CHECK(apply(theta(1), p(Q, 1, 3)) == p(Q, 2, 3));
    CHECK(apply(theta(3), p(Q, 1, 3)) == p(Q, 1, 3));
    CHECK(apply(theta(5), s(Q, 4)) == s(Q, 4));
    CHECK(apply(miyamoto(2), a(Q, 0)) == a(Q, 4));
    CHECK(miyamoto(3) == tau(6));
}

TEST_CASE("composition acts on the right") {
    for (const auto& f : samples())
        for (const auto& g : samples()) {
            Automorphism h = compose(f, g);
            for (long i = -5; i <= 5; ++i) CHECK(h.map_index(i) == g.map_index(f.map_index(i)));
            Element x = a(Q, 2) + s(Q, 3) + p(Q, 1, 6) - Scalar(Q, 2) * p(Q, 2, 3);
            CHECK(apply(h, x) == apply(g, apply(f, x)));
        }
    CHECK(compose(tau(0), tau(1)).map_index(0) == 1);
    CHECK(compose(tau(0), tau(0)) == theta(0));
}

TEST_CASE("dihedral maps are algebra automorphisms") {
    for (std::uint64_t ch : {0u, 5u, 7u}) {
        Field F = Field::make(ch);
        std::mt19937_64 rng(40 + ch);
        for (int t = 0; t < 150; ++t) {
            Element x = random_element(F, rng, 6), y = random_element(F, rng, 6);
            for (const auto& f : {tau(0), tau(1), tau(-3), theta(1), theta(2), theta(-4)})
                CHECK(apply(f, x * y) == apply(f, x) * apply(f, y));
        }
    }
}

TEST_CASE("reflections are involutions and weights are preserved") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 100; ++t) {
        Element x = random_element(Q, rng, 8);
        for (long k = -3; k <= 3; ++k) {
            CHECK(apply(tau(k), apply(tau(k), x)) == x);
            CHECK(weight(apply(theta(k), x)) == weight(x));
        }
    }
}
