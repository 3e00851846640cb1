#include <doctest.h>

#include "symrep/json_io.hpp"
#include "symrep/subspace.hpp"

using namespace symrep;

TEST_SUITE_BEGIN("json");

TEST_CASE("partitions are plain arrays") {
    Partition p({4, 3, 3, 1});
    Json j = to_json(p);
    CHECK(j.dump() == "[4,3,3,1]");
    CHECK(partition_from_json(j) == p);
    CHECK(partition_from_json(Json::parse("[]")) == Partition());
    CHECK_THROWS_AS(partition_from_json(Json::parse("[3,4]")), InputError);
    CHECK_THROWS_AS(partition_from_json(Json::parse("[0]")), InputError);
}

TEST_CASE("decompositions round trip with multiplicities as strings") {
    KostkaCache cache;
    Decomposition v = decompose_rd(4, 3, cache);
    Json j = to_json(v);
    CHECK(j.at("n") == 4);
    CHECK(j.at("dimension").get<std::string>() == v.dimension().get_str());
    Decomposition back = decomposition_from_json(j);
    CHECK(back == v);

    // zero entries are dropped, negatives rejected
    Json crafted = Json::parse(R"({"n":2,"mults":[
        {"shape":[2],"mult":"0"},
        {"shape":[1,1],"mult":"3"}]})");
    Decomposition c = decomposition_from_json(crafted);
    CHECK(c.mults.size() == 1);
    CHECK(c.multiplicity(Partition({1, 1})) == 3);

    Json bad = Json::parse(R"({"n":2,"mults":[{"shape":[2],"mult":"-1"}]})");
    CHECK_THROWS_AS(decomposition_from_json(bad), InputError);
}

TEST_CASE("polynomials keep exact rational coefficients") {
    Polynomial f(3, 4);
    f.add_term({4, 0, 0}, Rat(-7, 3));
    f.add_term({1, 1, 2}, 5);
    Json j = to_json(f);
    CHECK(polynomial_from_json(j) == f);

    Json bad = Json::parse(R"({"n":2,"degree":2,"terms":[{"exponents":[2,0],"coeff":"1/0"}]})");
    CHECK_THROWS_AS(polynomial_from_json(bad), InputError);
    Json mixed = Json::parse(R"({"n":2,"degree":2,"terms":[{"exponents":[1,0],"coeff":"1"}]})");
    CHECK_THROWS_AS(polynomial_from_json(mixed), InputError);
}

TEST_CASE("tableaux serialize shape and filling") {
    auto syts = enumerate_syt(Partition({3, 1}));
    Json j = to_json(syts.front());
    CHECK(j.at("shape").dump() == "[3,1]");
    CHECK(j.at("rows").dump() == "[[1,2,3],[4]]");

    auto ssyts = enumerate_ssyt(Partition({2, 1}), Partition({2, 1}));
    REQUIRE(ssyts.size() == 1);
    Json s = to_json(ssyts.front());
    CHECK(s.at("content").dump() == "[2,1]");
    CHECK(s.at("rows").dump() == "[[1,1],[2]]");
}

TEST_CASE("bound checks round trip") {
    KostkaCache cache;
    BoundCheck c = check_bound(5, 3, 1, cache);
    Json j = to_json(c);
    CHECK(j.at("equality") == true);
    CHECK(bound_check_from_json(j) == c);
}

TEST_CASE("character tables expose shapes, classes and values") {
    Json j = to_json(character_table(3));
    CHECK(j.at("n") == 3);
    CHECK(j.at("shapes").size() == 3);
    CHECK(j.at("classes").size() == 3);
    CHECK(j.at("shapes")[0].dump() == "[3]");
    // trivial row is all ones
    for (const auto& v : j.at("values")[0]) CHECK(v.get<std::string>() == "1");
    // the identity class (1,1,1) is the last column; it carries the dimensions
    CHECK(j.at("classes")[2].at("type").dump() == "[1,1,1]");
    CHECK(j.at("values")[1][2].get<std::string>() == "2");
}

TEST_CASE("violation reports round trip") {
    KostkaInequalityReport r = verify_kostka_inequality(4, Exec::serial);
    CHECK(kostka_inequality_report_from_json(to_json(r)) == r);

    BoundGridReport grid = verify_bound_grid(2, 2, 4, Exec::serial);
    CHECK(bound_grid_report_from_json(to_json(grid)) == grid);
}

TEST_CASE("serialized output is deterministic") {
    KostkaCache cache;
    Decomposition v = decompose_rd(5, 3, cache);
    CHECK(to_json(v).dump() == to_json(v).dump());

    AppendixReport appendix = reproduce_appendix_tables();
    Json j = to_json(appendix);
    CHECK(j.at("matches") == true);
    CHECK(j.dump() == to_json(reproduce_appendix_tables()).dump());

    Json e = to_json(verify_elementary_inequality(6, 2, 2, Exec::serial));
    CHECK(e.at("checked") == 2);

    Json m = to_json(verify_main_inequality(4, 2, Exec::serial));
    CHECK(m.at("rows").size() == 4);
    CHECK(m.at("violations").empty());

    GeneratorCertificate cert = sample_principal_generator(3, 2, 9);
    Json g = to_json(cert);
    CHECK(g.at("principal") == true);
    CHECK(polynomial_from_json(g.at("generator")) == cert.generator);
}

TEST_SUITE_END();
