#include "doctest.h"

#include <sstream>

#include "ehrhart/io.hpp"
#include "ehrhart/report.hpp"
#include "ehrhart/verify.hpp"

using namespace ehrhart;
using nlohmann::json;

TEST_CASE("documents round trip")
{
    HPolytope cube = unit_cube(3).polytope;
    Polytope h_back = polytope_from_json(json::parse(to_json(cube).dump()));
    CHECK(ehrhart_poly(h_back) == unit_cube(3).ehrhart);

    HPolytope simplex = standard_simplex(2).polytope;
    Polytope s_back = polytope_from_json(to_json(simplex));
    CHECK(std::get<HPolytope>(s_back).e.rows() == 1);
    CHECK(ehrhart_poly(s_back) == standard_simplex(2).ehrhart);

    MatrixXq pts(2, 3);
    pts << 0, Rational(1, 2), 0, 0, 0, Rational(-3, 4);
    json doc = to_json(VPolytope(pts));
    CHECK(doc["kind"] == "V");
    CHECK(doc["points"][1][0] == "1/2");
    CHECK(doc["points"][2][1] == "-3/4");
    CHECK(std::get<VPolytope>(polytope_from_json(doc)).points == pts);
}

TEST_CASE("malformed documents are rejected")
{
    CHECK_THROWS_AS(polytope_from_json(json::parse(R"({"kind":"H","ambient_dim":1})")), DocumentError);
    CHECK_THROWS_AS(polytope_from_json(json::parse(R"({"kind":"X","ambient_dim":1})")), DocumentError);
    CHECK_THROWS_AS(polytope_from_json(json::parse(R"({"kind":"V","ambient_dim":2,"points":[["0"]]})")),
                    DocumentError);
    CHECK_THROWS_AS(
        polytope_from_json(json::parse(R"({"kind":"H","ambient_dim":1,"inequalities":[{"a":[1],"b":"1/2"}]})")),
        DocumentError);
    CHECK_THROWS_AS(polytope_from_json(json::parse(
                        R"({"kind":"H","ambient_dim":1,"inequalities":[{"a":[1],"b":1}],"points":[]})")),
                    DocumentError);
    CHECK_THROWS_AS(polytope_from_json(json::parse(R"({"kind":"V","ambient_dim":1,"points":[[0.5]]})")),
                    DocumentError);
    CHECK_THROWS_AS(read_document("/nonexistent/file.json"), DocumentError);
}

TEST_CASE("registry")
{
    auto cube = make_family("cube", {"3"});
    CHECK(cube.source == "cube 3");
    CHECK(count_points(cube.polytope, 2) == 27);
    CHECK(*cube.formula == unit_cube(3).ehrhart);

    auto perm = make_family("permutohedron", {"3"});
    CHECK(count_points(perm.polytope, 1) == 38);

    auto ps = make_family("pitman-stanley", {"1", "2,1"});
    CHECK(*ps.formula == pitman_stanley({1, 2, 1}).ehrhart);

    auto flow = make_family("flow", {"complete:4", "1,0,0"});
    CHECK(*flow.formula == ehrhart_poly(flow.polytope));

    auto zon = make_family("zonotope", {"1,0;0,1"});
    CHECK(*zon.formula == unit_cube(2).ehrhart);

    auto stair = make_family("typey", {"staircase:3", "1,1,2"});
    CHECK(*stair.formula == pitman_stanley({1, 1, 2}).ehrhart);

    CHECK(make_family("cross", {"3"}).hstar_formula->entries() == std::vector<Integer>{1, 3, 3, 1});
    CHECK(make_family("base-r", {"1", "3"}).formula == standard_simplex(3).ehrhart);

    CHECK_THROWS_AS(make_family("nosuch", {}), FamilyError);
    CHECK_THROWS_AS(make_family("cube", {}), FamilyError);
    CHECK_THROWS_AS(make_family("cube", {"x"}), FamilyError);
    CHECK_THROWS_AS(make_family("zonotope", {"1,0;1"}), FamilyError);

    for (const auto& name : family_names())
        CHECK(!name.empty());
}

TEST_CASE("report rows")
{
    CHECK(report_header() ==
          "source,dimension,degree,coefficients,sign_pattern,ehrhart_positive,hstar,reflexive,gorenstein_s,"
          "palindromic,unimodal,nrpr,version");
    // (t+1)^3 with Eulerian h* (1,4,1)
    CHECK(report_line(report_row(make_family("cube", {"3"}))) ==
          "cube 3,3,3,1;3;3;1,+,true,1;4;1;0,false,2,true,true,true,1");
    CHECK(report_line(report_row(make_family("pitman-stanley", {"1,1"}))).rfind("\"pitman-stanley 1,1\",", 0) == 0);

    for (const auto& [name, params] : suite_entries("counterexamples"))
    {
        ReportRow row = report_row(make_family(name, params));
        CHECK_FALSE(row.analysis.ehrhart_positive);
    }
    CHECK_THROWS_AS(suite_entries(""), std::invalid_argument);
    CHECK_THROWS_AS(suite_entries("most"), std::invalid_argument);

    std::ostringstream a, b;
    write_report("counterexamples", a);
    write_report("counterexamples", b);
    const std::string text = a.str();
    CHECK(text == b.str());
    CHECK(text.find('\r') == std::string::npos);
    CHECK(std::count(text.begin(), text.end(), '\n') == 6);
}

TEST_CASE("verify suites are deterministic")
{
    VerifyOptions one{2, 6, 99, 1}, four{2, 6, 99, 4};
    auto a = run_verify("zonotope", one), b = run_verify("zonotope", four);
    REQUIRE(a.size() == 6);
    REQUIRE(b.size() == a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        CHECK(a[i].params == b[i].params);
        CHECK(a[i].ok);
    }
    VerifyOptions other{2, 6, 100, 1};
    auto c = run_verify("zonotope", other);
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i)
        differs |= a[i].params != c[i].params;
    CHECK(differs);

    for (const auto& name : {"cube", "pitman-stanley", "flow", "delta1q", "typey", "gen-zonotope"})
        for (const auto& r : run_verify(name, one))
            CHECK_MESSAGE(r.ok, name << " " << r.params << ": " << r.detail);
    CHECK_THROWS_AS(run_verify("nosuch", one), FamilyError);
}
