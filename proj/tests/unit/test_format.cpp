#include <doctest.h>

#include <random>

#include "highwater/derived.hpp"
#include "highwater/format.hpp"
#include "highwater/sampling.hpp"

using namespace highwater;

namespace {

const Field Q = Field::rationals();

Element parse(const std::string& s, const Field& F = Q) { return parse_element(F, s).value; }

}  // namespace

TEST_CASE("parsing examples") {
    CHECK(parse("a(0) - a(1)") == a(Q, 0) - a(Q, 1));
    CHECK(parse("1/2*s(2) + p(2,3)") == Scalar(Q, 1, 2) * s(Q, 2) + p(Q, 2, 3));
    CHECK(parse("0").is_zero());
    CHECK(parse("-a(-2) + 3*a(4)") == Scalar(Q, 3) * a(Q, 4) - a(Q, -2));
    CHECK(parse("u(3)") == u_vec(Q, 3));
    CHECK(parse("wt(6) - z(0,3)") == wt_vec(Q, 6) - z(Q, 0, 3));
    CHECK(parse("c(2)") == c_vec(Q, 2));
    CHECK(format_element(a(Q, 0) * a(Q, 1)) == "1/2*a(0) + 1/2*a(1) + s(1)");
}

TEST_CASE("levels off 3N parse as zero with a warning") {
    ParseResult r = parse_element(Q, "p(1,4)");
    CHECK(r.value.is_zero());
    REQUIRE(r.warnings.size() == 1);
    CHECK(r.warnings[0].find("p(1,4)") != std::string::npos);
    CHECK(parse_element(Q, "p(1,3)").warnings.empty());
    std::vector<std::string> w;
    auto list = parse_element_list(Q, "a(0); p(2,5); s(1)", &w);
    CHECK(list.size() == 3);
    CHECK(list[1].is_zero());
    CHECK(w.size() == 1);
}

TEST_CASE("malformed input") {
    CHECK_THROWS_AS(parse("a(0"), ParseError);
    CHECK_THROWS_AS(parse("b(1)"), ParseError);
    CHECK_THROWS_AS(parse("a(0) +"), ParseError);
    CHECK_THROWS_AS(parse("1/0*a(0)"), AlgebraError);
    CHECK_THROWS_AS(parse("1/5*a(0)", Field::make(5)), AlgebraError);
}

TEST_CASE("print then parse is the identity") {
    for (std::uint64_t ch : {0u, 7u}) {
        Field F = Field::make(ch);
        std::mt19937_64 rng(500 + ch);
        for (int t = 0; t < 1000; ++t) {
            Element x = random_element(F, rng, 10);
            CHECK(parse_element(F, format_element(x)).value == x);
        }
    }
}

TEST_CASE("JSON round trip") {
    std::mt19937_64 rng(600);
    for (std::uint64_t ch : {0u, 5u}) {
        Field F = Field::make(ch);
        for (int t = 0; t < 200; ++t) {
            Element x = random_element(F, rng, 10);
            nlohmann::json j = element_to_json(x);
            CHECK(j["field"] == ch);
            CHECK(element_from_json(j) == x);
        }
    }
    BasisKey k = BasisKey::p(2, 6);
    CHECK(key_from_json(key_to_json(k)) == k);
    CHECK(key_to_json(BasisKey::a(-3))["kind"] == "a");
}
