#include "doctest.h"

#include "ehrhart/lp.hpp"

using namespace ehrhart;

namespace {

MatrixXz zmat(std::initializer_list<std::initializer_list<long>> rows)
{
    MatrixXz m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
    Eigen::Index i = 0;
    for (const auto& r : rows)
    {
        Eigen::Index j = 0;
        for (long v : r)
            m(i, j++) = v;
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("determinant")
{
    CHECK(determinant(zmat({{2, 1}, {1, 3}})) == 5);
    CHECK(determinant(zmat({{0, 1, 0}, {1, 0, 0}, {0, 0, 7}})) == -7);
    CHECK(determinant(zmat({{1, 2}, {2, 4}})) == 0);
    CHECK(determinant(zmat({{4, 3, 2, 1}, {0, 1, 5, 2}, {3, 3, 0, 1}, {1, 0, 2, 2}})) == -42);
}

TEST_CASE("integer kernel is a primitive lattice basis")
{
    MatrixXz m = zmat({{2, 4, 6}});
    MatrixXz k = integer_kernel(m);
    CHECK(k.cols() == 2);
    CHECK((m * k).isZero());
    CHECK(gcd_of_maximal_minors(k) == 1);

    MatrixXz flow = zmat({{1, 1, 0}, {-1, 0, 1}, {0, -1, -1}});
    MatrixXz kf = integer_kernel(flow);
    CHECK(kf.cols() == 1);
    CHECK((flow * kf).isZero());
}

TEST_CASE("integer solutions")
{
    MatrixXz m = zmat({{2, 4}});
    VectorXz rhs(1);
    rhs << 6;
    auto x = integer_solution(m, rhs);
    REQUIRE(x);
    CHECK(m * *x == rhs);
    rhs << 5;
    CHECK_FALSE(integer_solution(m, rhs));
}

TEST_CASE("gcd of maximal minors")
{
    CHECK(gcd_of_maximal_minors(zmat({{2}, {4}})) == 2);
    CHECK(gcd_of_maximal_minors(zmat({{1, 0}, {0, 1}, {1, 1}})) == 1);
    CHECK(gcd_of_maximal_minors(zmat({{1, 2}, {2, 4}})) == 0);
    CHECK(gcd_of_maximal_minors(zmat({{2, 0}, {0, 3}})) == 6);
}

TEST_CASE("saturation")
{
    MatrixXz s = saturate(zmat({{2}, {2}}));
    CHECK(s.cols() == 1);
    CHECK(gcd_of_maximal_minors(s) == 1);
}

TEST_CASE("exact simplex")
{
    // min -x - y  s.t. x + 2y + s1 = 4, 3x + y + s2 = 6
    MatrixXq m(2, 4);
    m << 1, 2, 1, 0, 3, 1, 0, 1;
    VectorXq r(2);
    r << 4, 6;
    ExactSimplex lp(m, r);
    REQUIRE(lp.feasible());
    VectorXq c(4);
    c << -1, -1, 0, 0;
    auto v = lp.minimize(c);
    REQUIRE(v);
    CHECK(*v == Rational(-14, 5));
    VectorXq y = lp.solution();
    CHECK(y(0) == Rational(8, 5));
    CHECK(y(1) == Rational(6, 5));

    VectorXq up(4);
    up << 0, 0, -1, 0;
    CHECK(*lp.minimize(up) == -4);
}

TEST_CASE("infeasible, unbounded and redundant programs")
{
    MatrixXq m(2, 2);
    m << 1, 1, 1, 1;
    VectorXq r(2);
    r << 1, 2;
    CHECK_FALSE(ExactSimplex(m, r).feasible());

    r << 1, 1;
    ExactSimplex redundant(m, r);
    REQUIRE(redundant.feasible());
    VectorXq c(2);
    c << 1, 0;
    CHECK(*redundant.minimize(c) == 0);

    MatrixXq open(1, 2);
    open << 1, -1;
    VectorXq r1(1);
    r1 << 0;
    ExactSimplex ray(open, r1);
    c << -1, 0;
    CHECK_FALSE(ray.minimize(c));
}

TEST_CASE("free-variable ranges")
{
    // triangle x >= 0, y >= 0, x + y <= 3 with x - y = 1
    MatrixXq a(3, 2);
    a << -1, 0, 0, -1, 1, 1;
    VectorXq b(3);
    b << 0, 0, 3;
    MatrixXq e(1, 2);
    e << 1, -1;
    VectorXq f(1);
    f << 1;
    InequalitySystemLP lp(a, b, e, f);
    VectorXq obj(2);
    obj << 0, 1;
    LinearRange range = lp.range(obj);
    CHECK(*range.lo == 0);
    CHECK(*range.hi == 1);
}
