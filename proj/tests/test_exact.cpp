#include "doctest.h"

#include <numeric>

#include "ehrhart/exact.hpp"

using namespace ehrhart;

namespace {

RationalPolynomial poly(std::initializer_list<Rational> c)
{
    return RationalPolynomial(c);
}

Rational q(long p, long r = 1)
{
    return Rational(p, r);
}

}  // namespace

TEST_CASE("rational literals")
{
    CHECK(parse_rational("6/4") == q(3, 2));
    CHECK(parse_rational(" -12 ") == q(-12));
    CHECK(format_rational(parse_rational("-10/1")) == "-10");
    CHECK_THROWS_AS(parse_rational("1/0"), ExactError);
    CHECK_THROWS_AS(parse_rational("1/-3"), ExactError);
    CHECK_THROWS_AS(parse_rational("abc"), ExactError);
    CHECK(format_rational(q(-4, 6)) == "-2/3");
    CHECK(floor_of(q(-7, 2)) == -4);
    CHECK(ceil_of(q(-7, 2)) == -3);
    CHECK(floor_of(q(7, 2)) == 3);
}

TEST_CASE("canonical form after arithmetic")
{
    Rational x = q(3, 4) + q(5, 12);
    CHECK(gcd(numerator(x), denominator(x)) == 1);
    CHECK(denominator(x) > 0);
    Rational y = q(-1, 6) * q(-6, 1);
    CHECK(y == 1);
    CHECK(denominator(y) == 1);
}

TEST_CASE("binom_poly")
{
    CHECK(binom_poly(0, 0) == poly({1}));
    CHECK(binom_poly(2, 2) == poly({1, q(3, 2), q(1, 2)}));
    CHECK(binom_poly(3, 3)(1) == 4);
    for (long d = 1; d <= 6; ++d)
    {
        RationalPolynomial p = binom_poly(d, d);
        CHECK(p.leading() == Rational(1, factorial(d)));
        CHECK(p[0] == 1);
    }
}

TEST_CASE("multiset_poly")
{
    CHECK(multiset_poly(RationalPolynomial::linear(1, 0), 1) == poly({0, 1}));
    CHECK(multiset_poly(RationalPolynomial::linear(2, 1), 2) == poly({1, 3, 2}));
    CHECK(multiset_poly(RationalPolynomial::linear(1, 0), 3)(4) == 20);
    CHECK_THROWS_AS(multiset_poly(poly({0, 0, 1}), 2), ExactError);
}

TEST_CASE("interpolation")
{
    std::vector<std::pair<long, Rational>> square{{0, 1}, {1, 4}, {2, 9}};
    CHECK(interpolate(square) == poly({1, 2, 1}));
    std::vector<std::pair<long, Rational>> single{{0, 1}};
    CHECK(interpolate(single) == poly({1}));
    std::vector<Rational> simplex{1, 4, 10, 20};
    CHECK(interpolate_consecutive(simplex) == binom_poly(3, 3));
    std::vector<std::pair<long, Rational>> dup{{0, 1}, {0, 2}};
    CHECK_THROWS_AS(interpolate(dup), ExactError);

    std::vector<std::pair<long, Rational>> scattered{{-3, q(1, 2)}, {5, q(-7)}, {2, q(11, 3)}, {9, q(0)}};
    RationalPolynomial p = interpolate(scattered);
    for (const auto& [node, value] : scattered)
        CHECK(p(node) == value);
}

TEST_CASE("power sums")
{
    CHECK(power_sum_poly(0) == poly({1, 1}));
    CHECK(power_sum_poly(1) == poly({1, q(3, 2), q(1, 2)}));
    CHECK(power_sum_poly(20)[1] == q(-168011, 330));
    for (long k = 0; k <= 8; ++k)
    {
        RationalPolynomial p = power_sum_poly(k);
        CHECK(p.degree() == k + 1);
        for (long t = 0; t <= k + 5; ++t)
        {
            Integer direct = 0;
            for (long i = 1; i <= t + 1; ++i)
                direct += boost::multiprecision::pow(Integer(i), static_cast<unsigned>(k));
            CHECK(p(t) == Rational(direct));
        }
    }
}

TEST_CASE("polynomial arithmetic")
{
    RationalPolynomial a = poly({1, 1});
    CHECK(a * a == poly({1, 2, 1}));
    CHECK(poly({1, 6, 15, 16})(1) == 38);
    CHECK((a - a).is_zero());
    CHECK((a - a).degree() == -1);
    CHECK(a.dilate(3) == poly({1, 3}));
    CHECK(a.pow(3) == poly({1, 3, 3, 1}));
}

TEST_CASE("polynomial text")
{
    RationalPolynomial p = parse_polynomial("10/3t^4 + 7/6 t^3 - 1/3 t^2 + 17/6 t +1");
    CHECK(p == poly({1, q(17, 6), q(-1, 3), q(7, 6), q(10, 3)}));
    CHECK(format_coefficients(p) == "1, 17/6, -1/3, 7/6, 10/3");
    CHECK(parse_polynomial("-6673/630  t + 1")[1] == q(-6673, 630));
    CHECK(parse_polynomial("t^2")[2] == 1);
    CHECK(format_coefficients(RationalPolynomial{}) == "0");
    CHECK_THROWS_AS(parse_polynomial("3t^"), ExactError);
}
