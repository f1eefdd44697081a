#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cohsys/jsonio.hpp"

using namespace cohsys;

TEST_CASE("integers round-trip; strings beyond 64 bits") {
    CHECK(json_of(BigInt(42)) == json(42));
    CHECK(json_of(BigInt(-7)) == json(-7));
    const BigInt big("123456789012345678901234567890");
    const json j = json_of(big);
    CHECK(j.is_string());
    CHECK(bigint_from_json(j) == big);
    CHECK(bigint_from_json(json_of(BigInt(-42))) == BigInt(-42));
}

TEST_CASE("rationals round-trip as num/den pairs") {
    const Rational r(-35, 10);
    const json j = json_of(r);
    CHECK(j["num"] == json(-7));
    CHECK(j["den"] == json(2));
    CHECK(rational_from_json(j) == r);
    CHECK(rational_from_json(json_of(Rational(0))) == Rational(0));
}

TEST_CASE("wall patterns and groups round-trip") {
    const SystemType s(4, 7, 2, 2);
    const auto walls = certified_walls(s);
    REQUIRE(walls.size() == 1);
    const WallPattern& w = walls[0];
    const WallPattern back = wall_pattern_from_json(json_of(w));
    CHECK(back.n1 == w.n1);
    CHECK(back.d1 == w.d1);
    CHECK(back.k1 == w.k1);
    CHECK(back.n2 == w.n2);
    CHECK(back.d2 == w.d2);
    CHECK(back.k2 == w.k2);
    CHECK(back.c12 == w.c12);
    CHECK(back.c21 == w.c21);
    CHECK(back.certified == w.certified);

    const auto groups = candidate_critical_values(s, Rational(0), alpha_upper(s));
    const auto round = wall_groups_from_json(json_of(groups));
    REQUIRE(round.size() == groups.size());
    for (size_t i = 0; i < groups.size(); ++i) {
        CHECK(round[i].alpha == groups[i].alpha);
        REQUIRE(round[i].patterns.size() == groups[i].patterns.size());
        for (size_t j = 0; j < groups[i].patterns.size(); ++j) {
            CHECK(round[i].patterns[j].n1 == groups[i].patterns[j].n1);
            CHECK(round[i].patterns[j].alpha == groups[i].patterns[j].alpha);
        }
    }
}

TEST_CASE("info payload") {
    const json j = info_payload(SystemType(3, 5, 1, 2));
    CHECK(j["beta"] == json(11));
    CHECK(j["alpha_T"]["num"] == json(1));
    CHECK(j["alpha_T"]["den"] == json(1));
    CHECK(j["nonempty"] == json(true));
    CHECK(j["nonempty_range"]["hi"]["num"] == json(5));
    CHECK(j["nonempty_range"]["hi"]["den"] == json(2));

    const json empty = info_payload(SystemType(3, 3, 3, 2));
    CHECK(empty["nonempty"] == json(false));
    CHECK(empty["nonempty_range"].is_null());
    CHECK(empty["alpha_T"].is_null());  // k = n

    const json stable = info_payload(SystemType(3, 4, 3, 2));
    CHECK(stable["nonempty"] == json(true));
    CHECK(stable["nonempty_range"]["hi"].is_null());  // no upper limit for k = n
}

TEST_CASE("poincare payload") {
    const SystemType s(3, 5, 1, 2);
    const IntPoly p = poincare_chamber({s, Rational(2)});
    const json j = poincare_payload(s, p);
    CHECK(j["degree"] == json(22));
    CHECK(j["beta"] == json(11));
    CHECK(j["palindrome"] == json(true));
    REQUIRE(j["coeffs"].size() == 23);
    CHECK(j["coeffs"][0] == json(1));
    CHECK(j["coeffs"][9] == json(64));

    const std::string csv = poincare_csv(p);
    CHECK(csv.substr(0, 9) == "b0,b1,b2,");
    CHECK(csv.find("\n1,4,8,16,") != std::string::npos);
}

TEST_CASE("report payload carries structure and conjecture tags") {
    const json j =
        report_payload(topology_report(SystemType(4, 7, 2, 2), Rational(3)));
    CHECK(j["applicable"] == json(true));
    CHECK(j["pi1"]["group"] == json("Z^4"));
    CHECK(j["pic"]["structure"]["kind"] == json("product"));
    CHECK(j["p"] == json(1));
    CHECK(j.find("pi2_conjecture") == j.end());

    const json jc = report_payload(
        topology_report(SystemType(6, 8, 2, 2), Rational(1), /*include_conjectures=*/true));
    REQUIRE(jc.find("pi2_conjecture") != jc.end());
    CHECK(jc["pi2_conjecture"]["conjecture"] == json(true));

    const json jx = report_payload(topology_report(SystemType(4, 6, 2, 2), Rational(2)));
    REQUIRE(jx["exceptions"].size() == 1);
    CHECK(jx["exceptions"][0] == json("g2_k_n-2_d_even_unknown"));

    const json jb = report_payload(topology_report(SystemType(3, 2, 2, 2), Rational(1)));
    CHECK(jb["brill_noether"] == json("G^0_4"));
    CHECK(jb["fibration"]["base"] == json("J^2"));
    CHECK(jb["fibration"]["fibre"] == json("Gr(2,3)"));
}
