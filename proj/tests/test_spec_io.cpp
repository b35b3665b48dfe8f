#include <doctest.h>

#include "cellfrob/report.hpp"

using namespace cellfrob;

namespace {

Json doc_of(const std::string& name, std::map<std::string, std::string> params = {}) {
    return Json::parse(serialize_spec(builtin_fixture(name, params)));
}

} // namespace

TEST_CASE("builtin fixtures serialize and parse back identically") {
    for (const char* name : {"koenig-xi", "dual-numbers", "matrix"}) {
        std::string text = serialize_spec(builtin_fixture(name, {}));
        ParsedInput again = parse_spec(text);
        CHECK(serialize_spec(again) == text); // canonical round trip
        auto res = run_report(again);
        CHECK(res.doc["status"]["valid"].get<bool>());
    }
    std::string fp = serialize_spec(builtin_fixture("koenig-xi", {{"field", "5"}, {"lambda", "3"}}));
    CHECK(serialize_spec(parse_spec(fp)) == fp);
}

TEST_CASE("builtin rejects forbidden koenig-xi parameters") {
    CHECK_THROWS_AS(builtin_fixture("koenig-xi", {{"lambda", "0"}}), ParseError);
    CHECK_THROWS_AS(builtin_fixture("koenig-xi", {{"lambda", "1"}}), ParseError);
    CHECK_THROWS_AS(builtin_fixture("koenig-xi", {{"field", "5"}, {"lambda", "6"}}), ParseError); // 6 = 1 in F_5
    CHECK_THROWS_AS(builtin_fixture("koenig-xi", {{"field", "4"}}), ParseError);                  // not prime
    CHECK_THROWS_AS(builtin_fixture("nonesuch", {}), ParseError);
    CHECK_THROWS_AS(builtin_fixture("matrix", {{"n", "0"}}), ParseError);
}

TEST_CASE("parse errors name the offending entry") {
    Json doc = doc_of("dual-numbers");
    SUBCASE("bad coefficient 1/0") {
        doc["structure_constants"][0][3] = "1/0";
        try {
            parse_spec(doc.dump());
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("1/0") != std::string::npos);
        }
    }
    SUBCASE("two triples mapped to one basis index") {
        doc["index_map"][0][3] = doc["index_map"][1][3];
        CHECK_THROWS_AS(parse_spec(doc.dump()), ParseError);
    }
    SUBCASE("index out of range") {
        doc["structure_constants"][0][2] = 9;
        CHECK_THROWS_AS(parse_spec(doc.dump()), ParseError);
    }
    SUBCASE("poset cycle") {
        doc["poset"].push_back(Json::array({"1", "x"}));
        CHECK_THROWS_AS(parse_spec(doc.dump()), ParseError);
    }
    SUBCASE("invalid json") {
        CHECK_THROWS_AS(parse_spec("{"), ParseError);
    }
    SUBCASE("missing field") {
        doc.erase("field");
        CHECK_THROWS_AS(parse_spec(doc.dump()), ParseError);
    }
}

TEST_CASE("machine reports are byte-identical across runs") {
    std::string text = serialize_spec(builtin_fixture("koenig-xi", {}));
    auto a = run_report(parse_spec(text));
    auto b = run_report(parse_spec(text));
    CHECK(a.doc.dump(2) == b.doc.dump(2));
    CHECK(a.exit_code == b.exit_code);
}

TEST_CASE("koenig-xi report headline and exit code") {
    auto res = run_report(parse_spec(serialize_spec(builtin_fixture("koenig-xi", {}))));
    CHECK(res.exit_code == 0);
    CHECK(res.doc["headline"].get<std::string>() == "none of the cell modules is projective");
    // the boundary flag fires on cell 1 (simple, G = 0, Psi != 0)
    bool found = false;
    for (const auto& b : res.doc["status"]["boundary_cases"])
        if (b.get<std::string>() == "1/C") found = true;
    CHECK(found);
    CHECK(res.doc["status"]["disagreements"].empty());
}

TEST_CASE("matrix report headline: projective with k = 1") {
    auto res = run_report(parse_spec(serialize_spec(builtin_fixture("matrix", {}))));
    CHECK(res.exit_code == 0);
    CHECK(res.doc["headline"].get<std::string>() == "every cell module is projective");
    CHECK(res.doc["cells"][0]["k"]["defined"].get<bool>());
    CHECK(res.doc["cells"][0]["k"]["value"].get<std::string>() == "1");
}

TEST_CASE("dual-numbers report raises the boundary flag on the bottom cell") {
    auto res = run_report(parse_spec(serialize_spec(builtin_fixture("dual-numbers", {}))));
    CHECK(res.exit_code == 0);
    CHECK(res.doc["headline"].get<std::string>() == "none of the cell modules is projective");
    const auto& cells = res.doc["cells"];
    REQUIRE(cells.size() == 2);
    // input order: cell "x" below cell "1"
    CHECK(cells[0]["label"] == "x");
    CHECK(cells[0]["gram_prime"][0][0].get<std::string>() == "1");
    CHECK(cells[0]["gram"][0][0].get<std::string>() == "0");
    CHECK(cells[0]["verdicts"]["C"]["boundary_case"].get<bool>());
    CHECK(cells[1]["verdicts"]["C"]["criterion_psi"]["verdict"] == "NotProjective");
    for (const auto& cell : cells) CHECK(cell["k"]["value"].get<std::string>() == "0");
}

TEST_CASE("corrupted fixtures produce partial reports, never verdicts") {
    Json doc = doc_of("koenig-xi");
    SUBCASE("degenerate trace") {
        for (auto& t : doc["trace"]) t = "0";
        auto res = run_report(parse_spec(doc.dump()));
        CHECK(res.exit_code == 1);
        CHECK(!res.doc["status"]["valid"].get<bool>());
        CHECK(!res.doc.contains("cells"));
        CHECK(!res.doc["validation"].contains("cellular")); // stops at the first failure
    }
    SUBCASE("reversed poset order") {
        doc["poset"] = Json::array({Json::array({"3", "2"}), Json::array({"2", "1"})});
        auto res = run_report(parse_spec(doc.dump()));
        CHECK(res.exit_code == 1);
        CHECK(!res.doc["status"]["valid"].get<bool>());
        CHECK(!res.doc.contains("cells"));
        bool c3_failed = false;
        for (const auto& chk : res.doc["validation"]["cellular"]["checks"])
            if (chk["name"] == "c3_cell_expansion" && !chk["passed"].get<bool>()) c3_failed = true;
        CHECK(c3_failed);
    }
    SUBCASE("broken associativity") {
        doc["structure_constants"].push_back(Json::array({3, 2, 1, "1"})); // c*b += a
        auto res = run_report(parse_spec(doc.dump()));
        CHECK(res.exit_code == 1);
        CHECK(!res.doc.contains("cells"));
        bool assoc_failed = false;
        for (const auto& chk : res.doc["validation"]["algebra"]["checks"])
            if (chk["name"] == "associativity" && !chk["passed"].get<bool>()) assoc_failed = true;
        CHECK(assoc_failed);
    }
}

TEST_CASE("oracle report runs per cell and flavor") {
    auto input = parse_spec(serialize_spec(builtin_fixture("matrix", {})));
    auto out = oracle_report(input, "1", "C");
    CHECK(out["projective"].get<bool>());
    CHECK(out["oracles_agree"].get<bool>());
    auto outd = oracle_report(input, "1", "d");
    CHECK(outd["projective"].get<bool>());
    CHECK_THROWS_AS(oracle_report(input, "nope", "C"), ParseError);
    CHECK_THROWS_AS(oracle_report(input, "1", "Q"), ParseError);
}

TEST_CASE("direct sum of a matrix block and dual numbers: mixed verdicts") {
    // M_2 + K[x]/(x^2), cells m (2x2), x, u with x < u; only W_C(m) is projective
    Json doc;
    doc["field"] = Json{{"type", "rational"}};
    doc["dim"] = 6;
    doc["basis"] = {"E11", "E12", "E21", "E22", "x", "u"};
    Json sc = Json::array();
    auto prod = [&](int i, int j, int k) { sc.push_back(Json::array({i, j, k, "1"})); };
    // matrix block: E_st E_uv = delta_tu E_sv with E11=0, E12=1, E21=2, E22=3
    prod(0, 0, 0); prod(0, 1, 1); prod(1, 2, 0); prod(1, 3, 1);
    prod(2, 0, 2); prod(2, 1, 3); prod(3, 2, 2); prod(3, 3, 3);
    // dual-numbers block: x*u = u*x = x, u*u = u
    prod(4, 5, 4); prod(5, 4, 4); prod(5, 5, 5);
    doc["structure_constants"] = sc;
    doc["unit"] = {"1", "0", "0", "1", "0", "1"};
    doc["involution"] = Json::array({Json::array({0, 0, "1"}), Json::array({2, 1, "1"}),
                                     Json::array({1, 2, "1"}), Json::array({3, 3, "1"}),
                                     Json::array({4, 4, "1"}), Json::array({5, 5, "1"})});
    doc["trace"] = {"1", "0", "0", "1", "1", "0"};
    doc["cells"] = Json::array({Json{{"label", "m"}, {"members", {"1", "2"}}},
                                Json{{"label", "x"}, {"members", {"1"}}},
                                Json{{"label", "u"}, {"members", {"1"}}}});
    doc["poset"] = Json::array({Json::array({"x", "u"})});
    doc["index_map"] = Json::array({Json::array({"m", "1", "1", 0}), Json::array({"m", "1", "2", 1}),
                                    Json::array({"m", "2", "1", 2}), Json::array({"m", "2", "2", 3}),
                                    Json::array({"x", "1", "1", 4}), Json::array({"u", "1", "1", 5})});

    auto res = run_report(parse_spec(doc.dump()));
    CHECK(res.exit_code == 0);
    CHECK(res.doc["headline"].get<std::string>() == "projective cell modules: m");
    CHECK(res.doc["section4"]["section4_ok"].get<bool>());
    std::map<std::string, std::string> k_by_cell;
    for (const auto& cell : res.doc["cells"])
        k_by_cell[cell["label"].get<std::string>()] = cell["k"]["value"].get<std::string>();
    CHECK(k_by_cell["m"] == "1");
    CHECK(k_by_cell["x"] == "0");
    CHECK(k_by_cell["u"] == "0");
    for (const auto& cell : res.doc["cells"]) {
        const auto& v = cell["verdicts"]["C"];
        bool is_m = cell["label"] == "m";
        CHECK(v["oracle_splitting"].get<bool>() == is_m);
        CHECK(v["criterion_k"]["verdict"] == (is_m ? "Projective" : "NotProjective"));
        CHECK(v["agreement"].get<bool>());
    }
}

TEST_CASE("human rendering carries the same headline values") {
    auto res = run_report(parse_spec(serialize_spec(builtin_fixture("koenig-xi", {}))));
    std::string text = render_human(res.doc);
    CHECK(text.find("none of the cell modules is projective") != std::string::npos);
    CHECK(text.find("exit code: 0") != std::string::npos);
}
