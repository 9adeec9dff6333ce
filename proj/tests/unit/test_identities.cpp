#include <doctest.h>

#include "highwater/automorphism.hpp"
#include "highwater/derived.hpp"
#include "highwater/eigen.hpp"
#include "highwater/identities.hpp"

using namespace highwater;

TEST_CASE("identity suites pass on small ranges") {
    for (std::uint64_t ch : {0u, 5u, 7u}) {
        Field F = Field::make(ch);
        CHECK(product_identities(4, F).passed());
        CHECK(reflection_identities(5, F).passed());
        CHECK(fusion_check(4, F).passed());
        CHECK(miyamoto_consistency(1, 6, F).passed());
    }
}

TEST_CASE("s(k) acts on w(i) through translates when k is not in 3N") {
    Field Q = Field::rationals();
    for (long i = 1; i <= 6; ++i)
        for (long k : {1L, 2L, 4L, 5L}) {
            Element w = w_vec(Q, i);
            Element rhs = Scalar(Q, -3, 4) * w + Scalar(Q, 3, 8) * (apply(theta(k), w) + apply(theta(-k), w));
            CHECK(s(Q, k) * w == rhs);
        }
}

TEST_CASE("reports count failures") {
    Report r{"t", {}};
    r.add("ok", true);
    r.add("bad", false, "detail");
    CHECK_FALSE(r.passed());
    CHECK(r.failures() == 1);
    CHECK(r.to_json()["total"] == 2);
    CHECK(r.to_text().find("bad") != std::string::npos);
}
