#include <catch2/catch_amalgamated.hpp>

#include <qoco/io.hpp>

#include "fixtures.hpp"

using namespace qoco;

TEST_CASE("parse_sequence accepts both text forms") {
    REQUIRE(parse_sequence("+-++") == parse_signs("+-++"));
    REQUIRE(parse_sequence(" +- ++\n") == parse_signs("+-++"));
    REQUIRE(parse_sequence("1^2,4", 6) == parse_signs(fixtures::pair3_phi1));
    REQUIRE(parse_sequence("2,1,3", 6) == parse_signs(fixtures::pair3_phi2));
    REQUIRE_THROWS_AS(parse_sequence(""), usage_error);
    REQUIRE_THROWS_AS(parse_sequence("+-+", 4), usage_error);
    REQUIRE_THROWS_AS(parse_sequence("1^2,4", 8), usage_error);
}

TEST_CASE("sequence json carries the run-length form only when it exists") {
    auto j = sequence_json(parse_signs("+-++++"));
    REQUIRE(j["signs"] == "+-++++");
    REQUIRE(j["rle"] == "1^2,4");
    auto neg = sequence_json(parse_signs("-+"));
    REQUIRE(neg["signs"] == "-+");
    REQUIRE_FALSE(neg.contains("rle"));
}

TEST_CASE("pair and array records round-trip their fields") {
    NGPair p{parse_signs(fixtures::pair3_phi1), parse_signs(fixtures::pair3_phi2)};
    auto j = pair_json(p);
    REQUIRE(j["length"] == 6);
    REQUIRE(j["phi1"]["signs"] == fixtures::pair3_phi1);
    REQUIRE(j["phi2"]["signs"] == fixtures::pair3_phi2);

    auto a = make_array({2, 3}, parse_signs(fixtures::example1_phi[0]));
    std::vector<int> z{1, 0};
    auto ja = array_json(a, &z);
    REQUIRE(ja["s"] == std::vector<int>{2, 3});
    REQUIRE(ja["values"] == fixtures::example1_phi[0]);
    REQUIRE(ja["z"] == z);
    REQUIRE_FALSE(array_json(a).contains("z"));
}

TEST_CASE("cocycle records rebuild into the same matrix") {
    auto c = hadamard(gamma_cocycle(6), elementary_coboundary(build_cyclic(6), 2));
    auto j = cocycle_json(c);
    REQUIRE(j["group"] == "a:6");
    auto back = cocycle_from_json(j);
    REQUIRE(back.m == c.m);
    REQUIRE(same_group(*back.group, *c.group));

    auto bad = j;
    bad["rows"].erase(0);
    REQUIRE_THROWS_AS(cocycle_from_json(bad), usage_error);
}

TEST_CASE("hit records carry the search context") {
    auto g = build_cyclic(6);
    auto sp = make_search_space(g, gamma_cocycle(6));
    auto res = enumerate_quasiorthogonal(sp);
    REQUIRE_FALSE(res.hits.empty());
    auto j = hit_json(sp, res.hits[0], "gamma");
    REQUIRE(j["group"] == "a:6");
    REQUIRE(j["representative"] == "gamma");
    REQUIRE(j["re"] == res.hits[0].re);
    REQUIRE(j["subset"].size() == res.hits[0].subset.size());
    REQUIRE_FALSE(j.contains("goba"));
    std::string rle = "1^2,4";
    REQUIRE(hit_json(sp, res.hits[0], "gamma", &rle)["goba"] == rle);
}

TEST_CASE("certificate records keep kind-specific fields apart") {
    auto g = build_cyclic(6);
    SignVector phi = parse_signs(fixtures::pair3_phi1);

    auto ads = verify_design(ads_certificate(g, phi));
    auto ja = certificate_json(ads);
    REQUIRE(ja["kind"] == "almost difference set");
    REQUIRE(ja.contains("extra"));
    REQUIRE_FALSE(ja.contains("m"));
    REQUIRE_FALSE(ja.contains("s_set"));

    auto rqds = verify_design(cocycle_rqds_certificate(gamma_cocycle(6)));
    auto jr = certificate_json(rqds);
    REQUIRE(jr["kind"] == "relative quasi-difference set");
    REQUIRE(jr.contains("m"));
    REQUIRE(jr.contains("s_set"));
    REQUIRE(jr.contains("extremal"));
    REQUIRE(jr["verified"].is_boolean());
    for (const auto& [key, value] : jr["census"].items()) {
        REQUIRE_FALSE(key.empty());
        REQUIRE(value.is_number());
    }
}

TEST_CASE("csv table and config line format") {
    auto table = csv_table({"k", "n"}, {{3, 576}, {5, 11200}});
    REQUIRE(table == "k,n\n3,576\n5,11200\n");
    auto line = config_line("enumerate", {{"k", "5"}, {"source", "all"}});
    REQUIRE(line == "# qoco enumerate k=5 source=all");
}
