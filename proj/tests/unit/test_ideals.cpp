#include <doctest.h>

#include <random>

#include "highwater/automorphism.hpp"
#include "highwater/ideals.hpp"
#include "highwater/sampling.hpp"
#include "support/span_oracle.hpp"

using namespace highwater;

namespace {

const Field Q = Field::rationals();

Scalar q(long n, long d = 1) { return Scalar(Q, n, d); }

std::vector<Scalar> pattern(std::initializer_list<long> v) {
    std::vector<Scalar> out;
    for (long x : v) out.push_back(q(x));
    return out;
}

// fold written out from its defining sum.
std::pair<Element, Element> fold_oracle(const Element& x, long k) {
    const Field& F = x.field();
    Element sp(F), pp(F);
    long lo = 0, hi = 0;
    for (const auto& [key, c] : x.terms()) {
        lo = std::min(lo, key.index);
        hi = std::max(hi, key.index);
    }
    long reach = std::max(std::labs(k - lo), std::labs(hi - k));
    for (long i = 1; i <= reach; ++i) {
        Scalar c = x.coeff(BasisKey::a(k - i)) + x.coeff(BasisKey::a(k + i));
        sp.add_s(i, Scalar(F, 3) * c);
        pp.add_p(mod3(k), i, Scalar(F, 3) * c);
    }
    return {sp, pp};
}

}  // namespace

TEST_CASE("degrees") {
    CHECK(degrees(a(Q, 2) - a(Q, 5)).a_length == 4);
    CHECK(degrees(s(Q, 4) + p(Q, 1, 6)).s_level == 4);
    CHECK(degrees(s(Q, 4) + p(Q, 1, 6)).p_level == 6);
    CHECK(degrees(p(Q, 1, 3)).j_degree_quarters == 13);
    CHECK(degrees(p(Q, 1, 3) + p(Q, 2, 3)).j_degree_quarters == 15);
    CHECK(degrees(a(Q, 0) - a(Q, 1)) < degrees(a(Q, 0) - a(Q, 2)));
}

TEST_CASE("fold") {
    auto [s1, p1] = fold(a(Q, 0) - a(Q, 1), 0);
    CHECK(s1 == q(-3) * s(Q, 1));
    CHECK(p1.is_zero());
    auto [s2, p2] = fold(a(Q, 0) - a(Q, 2), 1);
    CHECK(s2.is_zero());
    CHECK(p2.is_zero());
    auto [s3, p3] = fold(a(Q, 0) - a(Q, 3), 0);
    CHECK(s3 == q(-3) * s(Q, 3));
    CHECK(p3 == q(3) * (p(Q, 1, 3) + p(Q, 2, 3)));
    std::mt19937_64 rng(700);
    for (int t = 0; t < 200; ++t) {
        Element x = random_element(Q, rng, 6).a_part();
        if (x.is_zero()) continue;
        x -= weight(x) * a(Q, 0);
        long k = static_cast<long>(t % 7) - 3;
        CHECK(fold(x, k) == fold_oracle(x, k));
    }
}

TEST_CASE("pure-a extraction") {
    Element g = a(Q, 0) - a(Q, 1) + s(Q, 2);
    Element e = pure_a_extract(g);
    CHECK(e == (a(Q, 0) - a(Q, 1)) - (a(Q, 3) - a(Q, 4)));
    CHECK(oracle::provably_in_ideal(e, {g}, 6, 2));
    Element e1 = pure_a_extract(s(Q, 1));
    CHECK_FALSE(e1.is_zero());
    CHECK(e1 == e1.a_part());
    CHECK(oracle::provably_in_ideal(e1, {s(Q, 1)}, 6, 2));
    CHECK(pure_a_extract(a(Q, 0) - a(Q, 2)) == a(Q, 0) - a(Q, 2));
    CHECK_THROWS_AS(pure_a_extract(p(Q, 1, 3)), AlgebraError);
}

TEST_CASE("ideals inside J") {
    CHECK(j_canonicalize(p(Q, 1, 3)).tuple() == pattern({1}));
    CHECK(j_canonicalize(p(Q, 2, 3)).tuple() == pattern({1}));
    // p(1,3) + p(2,6) already generates J: p(1,3) is an explicit combination of its products.
    CHECK(j_canonicalize(p(Q, 1, 3) + p(Q, 2, 6)).tuple() == pattern({1}));
    CHECK(oracle::provably_in_ideal(p(Q, 1, 3), {p(Q, 1, 3) + p(Q, 2, 6)}, 9, 1));
    JIdeal J(Q, pattern({2, -1, 1}));
    CHECK(J.codimension() == 4);
    CHECK(J.quotient_keys().size() == 4);
    Element x = J.generator();
    CHECK(x == q(2) * p(Q, 1, 3) - p(Q, 1, 6) + p(Q, 1, 9));
    for (const auto& b : J.basis(24)) {
        CHECK(J.contains(b));
        CHECK(oracle::provably_in_ideal(b, {x}, 15, 1));
    }
    CHECK_FALSE(J.contains(p(Q, 1, 3)));
    CHECK(j_ideal_of({x, s(Q, 3) * x}) == J);
}

TEST_CASE("J-ideal members found by the product oracle are members") {
    std::mt19937_64 rng(710);
    JIdeal J(Q, pattern({1, 0, 1}));
    Element x = J.generator();
    auto pool = oracle::product_closure({x}, 9, 1);
    for (int t = 0; t < 50; ++t) {
        Element y(Q);
        for (int k = 0; k < 4; ++k) y += Scalar(Q, static_cast<long>(rng() % 7) - 3) * pool[rng() % pool.size()];
        CHECK(J.contains(y));
    }
}

TEST_CASE("classification examples") {
    Ideal I2 = ideal_of({a(Q, 0) - a(Q, 2)});
    CHECK(I2.variant() == Ideal::Variant::Pattern);
    CHECK(I2.pattern() == pattern({1, 0, -1}));
    CHECK(I2.epsilon() == -1);
    CHECK(I2.contains_j());
    CHECK(I2.extension().empty());
    Ideal L1 = ideal_of({q(2) * a(Q, 0) - a(Q, -1) - a(Q, 1)});
    CHECK(L1.pattern() == pattern({1, -2, 1}));
    CHECK(L1.epsilon() == 1);
    Field F5 = Field::make(5);
    Ideal six = ideal_of({a(F5, 0) - a(F5, 1) + a(F5, 3) - a(F5, 4) + p(F5, 2, 3)});
    CHECK(six.variant() == Ideal::Variant::Pattern);
    CHECK_FALSE(six.extension().empty());
    CHECK(six.quotient_dim() == 8u);
    CHECK(ideal_of({a(Q, 0)}).variant() == Ideal::Variant::Full);
    CHECK(ideal_of({p(Q, 1, 3)}).variant() == Ideal::Variant::InJ);
    CHECK(ideal_of({Element(Q)}).variant() == Ideal::Variant::Zero);
}

TEST_CASE("reduction and membership") {
    Ideal I2 = ideal_of({a(Q, 0) - a(Q, 2)});
    Element r = I2.reduce(a(Q, 5));
    CHECK(r == a(Q, 1));
    CHECK(oracle::provably_in_ideal(a(Q, 5) - r, {a(Q, 0) - a(Q, 2)}, 6, 2));
    Element r4 = I2.reduce(s(Q, 4));
    CHECK(r4.s_part().terms().size() <= 1);
    CHECK(membership(s(Q, 4) - r4, I2));
    CHECK(membership(a(Q, 0) - a(Q, 4), I2));
    CHECK(oracle::provably_in_ideal(a(Q, 0) - a(Q, 4), {a(Q, 0) - a(Q, 2)}, 6, 2));
    CHECK_FALSE(membership(a(Q, 0), I2));
    CHECK(membership(p(Q, 1, 3), ideal_of({p(Q, 1, 3)})));
    CHECK(reduce(a(Q, 3), Ideal::full(Q)).is_zero());
    CHECK(reduce(a(Q, 3), Ideal::zero(Q)) == a(Q, 3));
}

TEST_CASE("minimal ideal basis lies in the ideal of its pattern") {
    auto pat = pattern({1, 0, -1});
    Element g = a(Q, 0) - a(Q, 2);
    for (const auto& b : minimal_ideal_basis(pat, 5)) CHECK(oracle::provably_in_ideal(b, {g}, 7, 2));
}

TEST_CASE("ideal bases are closed under multiplication by basis vectors") {
    std::mt19937_64 rng(720);
    for (std::uint64_t ch : {0u, 5u}) {
        Field F = Field::make(ch);
        auto keys = oracle::basis_vectors(F, 4);
        for (int t = 0; t < 12; ++t) {
            Ideal I = ideal_of({random_generator(F, rng, 8)});
            if (I.variant() == Ideal::Variant::Full) continue;
            for (const auto& b : I.basis(4)) {
                CHECK(weight(b).is_zero());
                for (const auto& k : keys) CHECK(I.contains(k * b));
            }
        }
    }
}

TEST_CASE("products of random ideal elements stay inside") {
    std::mt19937_64 rng(730);
    for (int t = 0; t < 20; ++t) {
        Element g = random_generator(Q, rng, 8);
        Ideal I = ideal_of({g});
        for (int k = 0; k < 5; ++k) {
            Element x = random_element(Q, rng, 5);
            CHECK(I.contains(x * g));
            CHECK(I.contains(x * (x * g)));
        }
    }
}

TEST_CASE("ideals are invariant under the dihedral group") {
    CHECK(aut_invariance_check(ideal_of({a(Q, 0) - a(Q, 2)}), 10).passed());
    CHECK(aut_invariance_check(ideal_of({p(Q, 1, 3)}), 10).passed());
    CHECK(aut_invariance_check(Ideal::full(Q), 10).passed());
    Ideal I = ideal_of({a(Q, -1) - a(Q, 0) - a(Q, 1) + a(Q, 2) + q(2) * s(Q, 2)});
    for (const auto& f : {tau(0), theta(1), theta(-2)}) CHECK(aut_invariance_check(I, 8, f).passed());
}
