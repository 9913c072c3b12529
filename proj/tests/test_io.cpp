#include <catch2/catch_amalgamated.hpp>

#include "bnd/io.hpp"

using namespace bnd;

TEST_CASE("dot array text round trip") {
    DotArray pi = parse_dots("0:1,2:0,3:3");
    CHECK(pi.dots() == std::vector<Dot>{{0, 1}, {2, 0}, {3, 3}});
    CHECK(format_dots(pi) == "0:1,2:0,3:3");

    CHECK(format_dots(parse_dots("3:3, 0:1 ,2:0")) == "0:1,2:0,3:3");  // sorted on output
    CHECK(parse_dots("").dots().empty());
    CHECK(parse_dots("  ").dots().empty());
    CHECK(format_dots(parse_dots("")).empty());

    CHECK_THROWS_AS(parse_dots("0:1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_dots("0:1:2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_dots("a:b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_dots("0:1,0:2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_dots("0:1,2:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_dots("-1:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_dots("0:1,"), std::invalid_argument);
}

TEST_CASE("permutation text round trip") {
    WindowPerm w = parse_perm("2,0,1");
    CHECK(w.size() == 3);
    CHECK(w(0) == 2);
    CHECK(format_perm(w) == "2,0,1");
    CHECK(format_perm(parse_perm(" 1 , 0 ")) == "1,0");

    CHECK_THROWS_AS(parse_perm(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_perm("0,0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_perm("0,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_perm("1,-1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_perm("1,x"), std::invalid_argument);
}

TEST_CASE("dot pair list rendering") {
    CHECK(format_dot_pairs({{0, 0}, {1, 1}}) == "(0,0) (1,1)");
    CHECK(format_dot_pairs({}).empty());
}

TEST_CASE("confined permutation rendering") {
    ZPerm pi = to_confined(parse_dots("0:1,2:0,3:3"), 3, 3);
    std::string text = format_confined(pi);
    CHECK(text ==
          "tail_shift: 0\n"
          "window: [-3, 3]\n"
          "-3 -> 2\n"
          "-2 -> -1\n"
          "-1 -> -2\n"
          "0 -> 1\n"
          "1 -> -3\n"
          "2 -> 0\n"
          "3 -> 3\n");
}

TEST_CASE("json report schema is pinned") {
    BNReport rep = classical_wrd(4, 3, 1);
    json echo{{"degree", 3}, {"genus", 4}, {"rank", 1}};
    std::string dumped = report_to_json(rep, echo).dump();
    CHECK(dumped ==
          R"({"chow":{"coeff":"1/12","theta_power":4},"codim":4,)"
          R"("confined_perm":{"table":[[-2,-1],[-1,-2],[0,1],[1,0]],"tail_shift":-1,"window":[-2,1]},)"
          R"("dim_coupled_tensors":4,"essential_set":[[0,0]],)"
          R"("input":{"degree":3,"genus":4,"rank":1},"nonempty":true,)"
          R"("pi_prime":{"M":7,"N":7,"d_prime":17,"map":[13,12,11,10,9,6,5,8,7,4,3,2,1,0],"n":14},)"
          R"("point_count":2,"rho":0,"schubert_smooth":false,"valid":true})");

    // re-serializing the parsed report is byte-identical
    CHECK(json::parse(dumped).dump() == dumped);
}

TEST_CASE("json report for invalid input carries only input, reason, valid") {
    BNReport rep = analyze(BNInput{0, 3, parse_dots("0:0")});
    REQUIRE_FALSE(rep.valid);
    json j = report_to_json(rep, json{{"degree", 3}, {"dots", json::array({json::array({0, 0})})}, {"genus", 0}});
    CHECK(j.size() == 3);
    CHECK(j["valid"] == false);
    CHECK(j["reason"] == rep.reason);
    CHECK(json::parse(j.dump()).dump() == j.dump());
}

TEST_CASE("json report omits pi_prime when the dot array leaves [0,d]^2") {
    BNReport rep = analyze(BNInput{1, 1, parse_dots("0:2")});
    REQUIRE(rep.valid);
    REQUIRE_FALSE(rep.pi_prime.has_value());
    json j = report_to_json(rep, json::object());
    CHECK_FALSE(j.contains("pi_prime"));
    CHECK_FALSE(j.contains("schubert_smooth"));
    CHECK_FALSE(j.contains("point_count"));  // rho < 0 here
    CHECK(j["nonempty"] == false);
}

TEST_CASE("wide integers serialize as strings, narrow ones as numbers") {
    CHECK(bigint_to_json(BigInt(5)).is_number_integer());
    CHECK(bigint_to_json(BigInt(5)) == json(5));
    BigInt wide("123456789012345678901234567890");
    json j = bigint_to_json(wide);
    REQUIRE(j.is_string());
    CHECK(j.get<std::string>() == "123456789012345678901234567890");
}

TEST_CASE("text report lines") {
    std::string text = format_report_text(classical_wrd(4, 3, 1));
    CHECK(text ==
          "valid: true\n"
          "rho: 0\n"
          "codim: 4\n"
          "nonempty: true\n"
          "chow: 1/12 * theta^4\n"
          "point_count: 2\n"
          "confined_perm:\n"
          "  tail_shift: -1\n"
          "  window: [-2, 1]\n"
          "  -2 -> -1\n"
          "  -1 -> -2\n"
          "  0 -> 1\n"
          "  1 -> 0\n"
          "essential_set: (0,0)\n"
          "pi_prime: M=7 N=7 d_prime=17 n=14\n"
          "  map: 13,12,11,10,9,6,5,8,7,4,3,2,1,0\n"
          "schubert_smooth: false\n"
          "dim_coupled_tensors: 4\n");

    std::string bad = format_report_text(analyze(BNInput{0, 3, parse_dots("0:0")}));
    CHECK(bad == "valid: false\nreason: genus and degree must be positive integers\n");
}

TEST_CASE("matrix exchange format") {
    Matrix<Rational> mq(std::vector<std::vector<Rational>>{{Rational(1, 2), Rational(-3)}}, 2,
                        Rational(0));
    CHECK(matrix_to_json(mq).dump() == R"([["1/2","-3"]])");

    Fp z(0, 7);
    Matrix<Fp> mp(std::vector<std::vector<Fp>>{{Fp(3, 7), Fp(-1, 7)}}, 2, z);
    CHECK(matrix_to_json(mp).dump() == "[[3,6]]");
}

TEST_CASE("flag exchange format lists strata aligned with coranks") {
    WindowPerm sigma({1, 0});
    std::vector<int> complete{0, 1, 2};
    auto pair = random_flag_pair(sigma, complete, complete, Fp(0, 5), 11);
    json j = flag_to_json(pair.p());
    REQUIRE(j["coranks"] == json::array({0, 1, 2}));
    REQUIRE(j["strata"].size() == 3);
    CHECK(j["strata"][0].size() == 2);  // corank 0: full basis
    CHECK(j["strata"][1].size() == 1);
    CHECK(j["strata"][2].empty());  // corank n: zero subspace
    CHECK(json::parse(j.dump()).dump() == j.dump());
}

TEST_CASE("confined permutation json block") {
    ZPerm pi = to_confined(parse_dots("0:1,2:0,3:3"), 3, 3);
    json j = zperm_to_json(pi);
    CHECK(j.dump() ==
          R"({"table":[[-3,2],[-2,-1],[-1,-2],[0,1],[1,-3],[2,0],[3,3]],)"
          R"("tail_shift":0,"window":[-3,3]})");
}
