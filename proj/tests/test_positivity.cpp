#include "doctest.h"

#include "ehrhart/families.hpp"
#include "ehrhart/positivity.hpp"

using namespace ehrhart;

TEST_CASE("sign patterns")
{
    CHECK(sign_pattern(reeve(13).ehrhart, 3) == "-");
    CHECK(sign_pattern(reeve(12).ehrhart, 3) == "0");
    CHECK(sign_pattern(reeve(2).ehrhart, 3) == "+");
    CHECK(sign_pattern(unit_cube(4).ehrhart, 4) == "++");
    CHECK(sign_pattern(sign_pattern_product(37, 5).ehrhart, 5) == "---");
    CHECK(ehrhart_positive(unit_cube(3).ehrhart));
    CHECK_FALSE(ehrhart_positive(reeve(13).ehrhart));
    CHECK_FALSE(ehrhart_positive(reeve(12).ehrhart));
}

TEST_CASE("sums of roots")
{
    for (int d = 1; d <= 5; ++d)
        CHECK(sum_of_roots(unit_cube(d).ehrhart) == -d);
    CHECK(sum_of_roots(cross_polytope(3).ehrhart) == Rational(-3, 2));
    CHECK(sum_of_roots(ehrhart_from_hstar(order_p_hstar(2))) == -6);
    RationalPolynomial p = reeve(13).ehrhart;
    for (long k : {2L, 3L, 7L})
        CHECK(sum_of_roots(p.dilate(k)) == sum_of_roots(p) / k);
    CHECK_THROWS(sum_of_roots(RationalPolynomial::constant(1)));
}

TEST_CASE("root-sum Gorenstein test")
{
    for (int d = 1; d <= 4; ++d)
    {
        auto cross = gorenstein_test(cross_polytope(d).ehrhart, d);
        CHECK(cross.gorenstein);
        CHECK(*cross.codegree == 1);
        auto cube = gorenstein_test(unit_cube(d).ehrhart, d);
        CHECK(cube.gorenstein);
        CHECK(*cube.codegree == 2);
    }
    CHECK_FALSE(gorenstein_test(reeve(13).ehrhart, 3).gorenstein);
}

TEST_CASE("h* shape")
{
    HStarVector cross({1, 3, 3, 1}, 3);
    CHECK(hstar_palindromic(cross));
    CHECK(codegree(cross) == 1);
    HStarVector op2({1, 2, 1, 0, 0}, 4);
    CHECK(hstar_palindromic(op2));
    CHECK(codegree(op2) == 3);
    HStarVector h141({1, 4, 1, 0}, 3);
    CHECK(hstar_palindromic(h141));
    CHECK(codegree(h141) == 2);
    CHECK_FALSE(hstar_palindromic(HStarVector({1, 0, 12, 0}, 3)));

    CHECK(hstar_unimodal(op2));
    CHECK_FALSE(hstar_unimodal(HStarVector({1, 0, 3, 0}, 3)));
    // Payne's construction with r = 0, s = 3, k = 2 is not unimodal
    CHECK_FALSE(hstar_unimodal(payne_hstar(0, 3, 2)));
}

TEST_CASE("numeric roots")
{
    auto roots = polynomial_roots({Rational(1), Rational(0), Rational(1)});
    REQUIRE(roots);
    REQUIRE(roots->size() == 2);
    for (const auto& r : *roots)
    {
        CHECK(std::abs(r.real()) < 1e-12);
        CHECK(std::abs(std::abs(r.imag()) - 1) < 1e-12);
    }
    auto triple = polynomial_roots({Rational(1), Rational(3), Rational(3), Rational(1)});
    REQUIRE(triple);
    for (const auto& r : *triple)
        CHECK(std::abs(r + 1.0) < 1e-9);
    CHECK(polynomial_roots({Rational(5)})->empty());
}

TEST_CASE("unit-circle rootedness and NRPR")
{
    CHECK(*hstar_unit_circle_rooted(HStarVector({1, 1, 1}, 2)));
    CHECK(*hstar_unit_circle_rooted(HStarVector({1, 3, 3, 1}, 3)));
    CHECK(*hstar_unit_circle_rooted(payne_hstar(0, 3, 2)));
    auto reeve_h = hstar_from_ehrhart(reeve(13).ehrhart, 3);
    CHECK_FALSE(*hstar_unit_circle_rooted(reeve_h));

    for (int d = 1; d <= 4; ++d)
    {
        CHECK(*nrpr_check(unit_cube(d).ehrhart));
        RationalPolynomial p = cross_polytope(d).ehrhart;
        CHECK(*nrpr_check(p));
        auto roots = polynomial_roots(p.coefficients());
        REQUIRE(roots);
        for (const auto& r : *roots)
            CHECK(std::abs(r.real() + 0.5) < 1e-9);
    }
    CHECK_FALSE(*nrpr_check(reeve(13).ehrhart));
}

TEST_CASE("analysis reports")
{
    auto cube = unit_cube(3);
    auto r = analyze(cube.ehrhart, hstar_from_ehrhart(cube.ehrhart, 3));
    CHECK(r.sign_pattern == "+");
    CHECK(r.ehrhart_positive);
    CHECK(r.sum_of_roots == -3);
    CHECK_FALSE(r.reflexive);
    CHECK(r.gorenstein);
    CHECK(r.codegree == 2);
    CHECK(r.vieta_agrees);

    auto cross = cross_polytope(3);
    auto c = analyze(cross.ehrhart, cross.hstar);
    CHECK(c.reflexive);
    CHECK(c.vieta_agrees);
    CHECK(*c.unit_circle_rooted);
    CHECK(*c.nrpr);

    auto t13 = reeve(13).ehrhart;
    auto rt = analyze(t13, hstar_from_ehrhart(t13, 3));
    CHECK(rt.sign_pattern == "-");
    CHECK_FALSE(rt.ehrhart_positive);
    CHECK_FALSE(rt.gorenstein);
    CHECK(rt.vieta_agrees);
    CHECK_FALSE(*rt.nrpr);

    CHECK_THROWS(analyze(t13, HStarVector({1}, 2)));
}

TEST_CASE("root-sum test is only necessary for Gorenstein")
{
    // i(T_4, t) = 2/3 t^3 + t^2 + 4/3 t + 1 has root sum -3/2 = -d/2, but
    // h* = 1 + 3z^2 is not palindromic.
    auto t4 = reeve(4).ehrhart;
    auto h = hstar_from_ehrhart(t4, 3);
    CHECK(h == HStarVector({1, 0, 3, 0}, 3));
    auto r = analyze(t4, h);
    CHECK(r.sum_of_roots == Rational(-3, 2));
    CHECK(r.vieta.gorenstein);
    CHECK_FALSE(r.gorenstein);
    CHECK_FALSE(r.vieta_agrees);
}

TEST_CASE("positive real parts imply positive coefficients")
{
    std::vector<RationalPolynomial> samples{unit_cube(4).ehrhart, cross_polytope(4).ehrhart, reeve(13).ehrhart,
                                            reeve(5).ehrhart, ehrhart_from_hstar(order_p_hstar(3)),
                                            order_q_ehrhart(20), sign_pattern_product(37, 5).ehrhart};
    for (const auto& p : samples)
    {
        auto nrpr = nrpr_check(p);
        REQUIRE(nrpr);
        if (*nrpr)
            CHECK(ehrhart_positive(p));
    }
}
