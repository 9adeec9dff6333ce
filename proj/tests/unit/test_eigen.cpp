#include <doctest.h>

#include <random>
#include <set>

#include "highwater/automorphism.hpp"
#include "highwater/derived.hpp"
#include "highwater/eigen.hpp"
#include "highwater/sampling.hpp"

using namespace highwater;

namespace {

const Field Q = Field::rationals();

// Fusion table over Q, written out independently of FusionLaw. Values are eigenvalues times 2.
std::set<long> table(long x, long y) {
    auto key = [](long v) { return v == 2 ? 0 : v == 5 ? 1 : v == 0 ? 2 : v == 4 ? 3 : 4; };
    static const std::vector<std::vector<std::set<long>>> t{
        {{2}, {5}, {}, {4}, {1}},
        {{5}, {5}, {5}, {}, {1}},
        {{}, {5}, {5, 0}, {5, 4}, {1}},
        {{4}, {}, {5, 4}, {5, 0}, {1}},
        {{1}, {1}, {1}, {1}, {5, 0, 4}},
    };
    return t[static_cast<std::size_t>(key(x))][static_cast<std::size_t>(key(y))];
}

long twice(const Scalar& v) {
    mpq_class d = v.rational() * 2;
    return d.get_num().get_si();
}

std::set<long> component_values(const Element& x) {
    std::set<long> out;
    for (const auto& [v, e] : eigendecompose(x, 0).components()) out.insert(twice(v));
    return out;
}

bool subset(const std::set<long>& a, const std::set<long>& b) {
    for (long v : a)
        if (!b.count(v)) return false;
    return true;
}

}  // namespace

TEST_CASE("slices about an axis") {
    auto sl = slice_split(a(Q, 0) + a(Q, 1) + s(Q, 2), 0);
    CHECK(sl.at(0) == a(Q, 0));
    CHECK(sl.at(1) == a(Q, 1));
    CHECK(sl.at(2) == s(Q, 2));
    auto u = slice_split(u_vec(Q, 3), 0);
    CHECK(u.at(0) == Scalar(Q, 6) * a(Q, 0));
    CHECK(u.at(3) == Scalar(Q, -3) * (a(Q, -3) + a(Q, 3)) + Scalar(Q, 4) * (s(Q, 3) + z(Q, 0, 3)));
    for (const auto& [i, e] : slice_split(Element(Q), 0)) CHECK(e.is_zero());
}

TEST_CASE("eigenvector families") {
    for (std::uint64_t ch : {0u, 5u, 7u}) {
        Field F = Field::make(ch);
        Element a0 = a(F, 0);
        for (long i = 1; i <= 9; ++i) {
            CHECK(a0 * u_vec(F, i) == Scalar::zero(F) * u_vec(F, i));
            CHECK(a0 * v_vec(F, i) == Scalar(F, 2) * v_vec(F, i));
            CHECK(a0 * w_vec(F, i) == Scalar(F, 1, 2) * w_vec(F, i));
            CHECK(a0 * z_vec(F, i) == Scalar(F, 5, 2) * z_vec(F, i));
            CHECK(a0 * wt_vec(F, i) == Scalar(F, 1, 2) * wt_vec(F, i));
        }
        for (const auto& fam : {Family::C, Family::U, Family::V, Family::Z}) CHECK(family_vec(fam, F, 0).is_zero());
    }
    CHECK(w_vec(Q, 2) == a(Q, -2) - a(Q, 2));
    CHECK(pair_vec(Family::Z, Q, 1, 2) == z_vec(Q, 3));
}

TEST_CASE("decomposition examples") {
    auto du = eigendecompose(u_vec(Q, 3), 0).components();
    REQUIRE(du.size() == 1);
    CHECK(du[0].first.is_zero());
    CHECK(du[0].second == u_vec(Q, 3));
    auto dz = eigendecompose(z_vec(Q, 3), 0).components();
    REQUIRE(dz.size() == 1);
    CHECK(dz[0].first == Scalar(Q, 5, 2));
    Field F5 = Field::make(5);
    auto dz5 = eigendecompose(z_vec(F5, 3), 0).components();
    REQUIRE(dz5.size() == 1);
    CHECK(dz5[0].first.is_zero());
    auto da = eigendecompose(a(Q, 0), 0).components();
    REQUIRE(da.size() == 1);
    CHECK(da[0].first == Scalar(Q, 1));
}

TEST_CASE("decomposition components are eigenvectors summing to the input") {
    for (std::uint64_t ch : {0u, 5u, 7u, 11u}) {
        Field F = Field::make(ch);
        std::mt19937_64 rng(300 + ch);
        for (int t = 0; t < 150; ++t) {
            Element x = random_element(F, rng, 8);
            long axis = static_cast<long>(t % 7) - 3;
            Element total(F);
            for (const auto& [lambda, e] : eigendecompose(x, axis).components()) {
                CHECK(a(F, axis) * e == lambda * e);
                total += e;
            }
            CHECK(total == x);
        }
    }
}

TEST_CASE("products of eigenvectors obey the fusion table") {
    CHECK(subset(component_values(u_vec(Q, 1) * u_vec(Q, 2)), {5, 0}));
    CHECK(subset(component_values(w_vec(Q, 1) * w_vec(Q, 2)), {5, 0, 4}));
    CHECK(subset(component_values(u_vec(Q, 3) * z_vec(Q, 3)), {5}));
    std::vector<std::pair<long, Element>> vecs{{2, a(Q, 0)}};
    for (long i = 1; i <= 6; ++i) {
        vecs.emplace_back(0, u_vec(Q, i));
        vecs.emplace_back(4, v_vec(Q, i));
        vecs.emplace_back(1, w_vec(Q, i));
        if (i % 3 == 0) {
            vecs.emplace_back(5, z_vec(Q, i));
            vecs.emplace_back(1, wt_vec(Q, i));
        }
    }
    for (const auto& [lx, x] : vecs)
        for (const auto& [ly, y] : vecs) CHECK(subset(component_values(x * y), table(lx, ly)));
}

TEST_CASE("library fusion law matches the table over Q") {
    FusionLaw law(Q);
    for (long x : {2L, 5L, 0L, 4L, 1L})
        for (long y : {2L, 5L, 0L, 4L, 1L}) {
            std::set<long> got;
            for (const auto& v : law.allowed(Scalar(Q, x, 2), Scalar(Q, y, 2))) got.insert(twice(v));
            CHECK(got == table(x, y));
        }
}

TEST_CASE("negating the half-part is the reflection about the axis") {
    for (std::uint64_t ch : {0u, 5u}) {
        Field F = Field::make(ch);
        std::mt19937_64 rng(400 + ch);
        for (int t = 0; t < 100; ++t) {
            Element x = random_element(F, rng, 8);
            long axis = static_cast<long>(t % 5) - 2;
            EigenDecomposition d = eigendecompose(x, axis);
            Element half = d.component(Scalar(F, 1, 2));
            CHECK(x - Scalar(F, 2) * half == apply(miyamoto(axis), x));
        }
    }
}
