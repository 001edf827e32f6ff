#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include "freebell/bell.hpp"
#include "freebell/bellhopf.hpp"
#include "freebell/fqsym.hpp"
#include "freebell/qsym.hpp"
#include "freebell/serialize.hpp"

using namespace freebell;
using nlohmann::json;

TEST_CASE("quasisymmetric elements") {
    auto e = qsym::f_basis(Composition({1, 2, 2})).scaled(2) +
             qsym::f_basis(Composition({2, 2, 1}));
    json j = serialize::to_json(e);
    CHECK(j["basis"] == "F");
    CHECK(j["terms"].size() == 2);
    CHECK(j["terms"][0]["key"] == "(2,2,1)");
    CHECK(j["terms"][0]["coeff"] == "1");
    CHECK(j["terms"][1]["key"] == "(1,2,2)");
    CHECK(j["terms"][1]["coeff"] == "2");
    CHECK(serialize::to_json(qsym::m_basis(Composition({3})))["basis"] == "M");
}

TEST_CASE("free quasisymmetric elements") {
    auto e = fqsym::g_basis(Permutation::parse("1243")) -
             fqsym::g_basis(Permutation::parse("1324"));
    json j = serialize::to_json(e);
    CHECK(j["basis"] == "G");
    CHECK(j["terms"][0]["key"] == "1,2,4,3");
    CHECK(j["terms"][1]["coeff"] == "-1");
    CHECK(serialize::permutation_key(Permutation::parse("21")) == "2,1");
    CHECK(serialize::to_json(fqsym::f_basis(Permutation::parse("1")))["basis"] == "F");
}

TEST_CASE("Y-polynomials") {
    json j = serialize::to_json(bell::bell_prepend(3));
    CHECK(j["basis"] == "Y");
    CHECK(j["terms"].size() == 4);
    CHECK(j["terms"][0]["key"] == "(3)");
    CHECK(j["terms"][1]["key"] == "(2,1)");
    CHECK(j["terms"][1]["coeff"] == "2");

    json jq = serialize::to_json(bell::bell_append_q(3));
    CHECK(jq["basis"] == "Y");
    bool found = false;
    for (const auto& t : jq["terms"])
        if (t["key"] == "(1,2)") {
            CHECK(t["coeff"] == "q^2+q");
            found = true;
        }
    CHECK(found);
}

TEST_CASE("free Bell elements") {
    json j = serialize::to_json(bell::free_bell(2), 2);
    CHECK(j["n"] == 2);
    CHECK(j["terms"].size() == 2);
    CHECK(j["terms"][0]["Y"] == "(2)");
    CHECK(j["terms"][0]["coeff_fqsym"][0]["key"] == "1,2");
    CHECK(j["terms"][1]["Y"] == "(1,1)");
    CHECK(j["terms"][1]["coeff_fqsym"][0]["key"] == "2,1");
}

TEST_CASE("class tables") {
    json j = serialize::classes_json(2);
    CHECK(j["n"] == 2);
    REQUIRE(j["classes"].size() == 2);
    bool saw_split = false, saw_joined = false;
    for (const auto& c : j["classes"]) {
        if (c["partition"] == "1|2") {
            saw_split = true;
            CHECK(c["min"] == "2,1");
            CHECK(c["max"] == "2,1");
            CHECK(c["size"] == 1);
        }
        if (c["partition"] == "12") {
            saw_joined = true;
            CHECK(c["min"] == "1,2");
            CHECK(c["size"] == 1);
        }
    }
    CHECK(saw_split);
    CHECK(saw_joined);
}

TEST_CASE("poset JSON") {
    auto poset =
        bellhopf::BellPoset::from_columns(bellhopf::column_insert(Permutation::parse("3126457")));
    json j = serialize::poset_json(poset);
    CHECK(j["ground"] == json({1, 2, 3, 4, 5, 6, 7}));
    REQUIRE(j["covers"].size() == 7);
    int columns = 0, crosses = 0;
    bool saw31 = false;
    for (const auto& c : j["covers"]) {
        if (c["kind"] == "column") ++columns;
        if (c["kind"] == "cross") ++crosses;
        if (c["lower"] == 3 && c["upper"] == 1) {
            saw31 = true;
            CHECK(c["kind"] == "cross");
        }
    }
    CHECK(columns == 5);
    CHECK(crosses == 2);
    CHECK(saw31);
}
