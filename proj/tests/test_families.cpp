#include "doctest.h"

#include <random>

#include "ehrhart/families.hpp"
#include "identities.hpp"
#include "oracle.hpp"

using namespace ehrhart;
using testing::brute_count;
using testing::brute_polynomial;

namespace {

/// All vectors in {0..top}^n.
std::vector<std::vector<long>> grid(int n, long top)
{
    std::vector<std::vector<long>> out{{}};
    for (int i = 0; i < n; ++i)
    {
        std::vector<std::vector<long>> next;
        for (const auto& v : out)
            for (long x = 0; x <= top; ++x)
            {
                next.push_back(v);
                next.back().push_back(x);
            }
        out = next;
    }
    return out;
}

MatrixXz columns(std::initializer_list<std::initializer_list<long>> cols)
{
    const Eigen::Index rows = static_cast<Eigen::Index>(cols.begin()->size());
    MatrixXz m(rows, static_cast<Eigen::Index>(cols.size()));
    Eigen::Index c = 0;
    for (const auto& col : cols)
    {
        Eigen::Index r = 0;
        for (long x : col)
            m(r++, c) = x;
        ++c;
    }
    return m;
}

}  // namespace

TEST_CASE("cubes and simplices")
{
    for (int d = 1; d <= 4; ++d)
    {
        auto cube = unit_cube(d);
        CHECK(cube.ehrhart == ehrhart_poly(cube.polytope));
        auto simplex = standard_simplex(d);
        CHECK(simplex.ehrhart == ehrhart_poly(simplex.polytope));
    }
    CHECK(unit_cube(2).ehrhart == RationalPolynomial{Rational(1), Rational(2), Rational(1)});
    CHECK_THROWS_AS(unit_cube(0), FamilyError);
}

TEST_CASE("cross-polytopes")
{
    for (int d = 1; d <= 4; ++d)
    {
        auto cross = cross_polytope(d);
        RationalPolynomial oracle =
            brute_polynomial(d, [&](long t) { return brute_count(cross.polytope, t, t + 1); });
        CHECK(cross.ehrhart == oracle);
        CHECK(cross.hstar == hstar_from_ehrhart(oracle, d));
        CHECK(count_interior(cross.polytope) == 1);
    }
}

TEST_CASE("Pitman-Stanley")
{
    CHECK(pitman_stanley_indices(2) == std::vector<std::vector<long>>{{1, 1}, {2, 0}});
    // Catalan numbers
    CHECK(pitman_stanley_indices(3).size() == 5);
    CHECK(pitman_stanley_indices(4).size() == 14);
    for (int d = 1; d <= 3; ++d)
        for (const auto& a : grid(d, 2))
        {
            auto ps = pitman_stanley(a);
            CHECK(ps.ehrhart == ehrhart_poly(ps.polytope));
        }
    auto ps = pitman_stanley({1, 2});
    long radius = 3;
    CHECK(count_points(ps.polytope, 1) == brute_count(ps.polytope, 1, radius));
    CHECK_THROWS_AS(pitman_stanley({1, -1}), FamilyError);
}

TEST_CASE("Kostant partition function counts flows")
{
    FlowGraph k4 = complete_graph(4);
    for (const auto& a : grid(3, 2))
    {
        std::vector<long> b(a);
        b.push_back(-(a[0] + a[1] + a[2]));
        CHECK(kostant(k4, b) == count_points(flow_polytope(k4, a), 1));
    }
    CHECK(kostant(k4, {1, 0, 0, 0}) == 0);
    // K_3 with netflow (1, 0, -1): the direct edge or the path through 2
    CHECK(kostant(complete_graph(3), {1, 0, -1}) == 2);
}

TEST_CASE("Lidskii formulas")
{
    for (int d = 1; d <= 3; ++d)
    {
        FlowGraph g = pitman_stanley_graph(d);
        for (const auto& a : grid(d, 2))
        {
            HPolytope p = flow_polytope(g, a);
            RationalPolynomial engine = ehrhart_poly(p);
            CHECK(lidskii_ehrhart(g, a) == engine);
            CHECK(lidskii_ehrhart_multiset(g, a) == engine);
            CHECK(pitman_stanley(a).ehrhart == engine);
        }
    }
    FlowGraph k4 = complete_graph(4);
    for (const auto& a : grid(3, 3))
    {
        if (a[0] + a[1] + a[2] > 3 || a[0] + a[1] + a[2] == 0)
            continue;
        RationalPolynomial engine = ehrhart_poly(flow_polytope(k4, a));
        CHECK(lidskii_ehrhart(k4, a) == engine);
        CHECK(lidskii_ehrhart_multiset(k4, a) == engine);
    }
}

TEST_CASE("flow graph hypotheses")
{
    FlowGraph broken{3, {{1, 2}}};
    CHECK_THROWS_AS(lidskii_ehrhart(broken, {1, 0}), FamilyError);
    FlowGraph backwards{2, {{2, 1}}};
    CHECK_THROWS_AS(kostant(backwards, {1, -1}), FamilyError);
}

TEST_CASE("CRY and Tesler polytopes")
{
    for (int n = 2; n <= 4; ++n)
    {
        HPolytope c = cry(n);
        std::vector<long> unit(n, 0);
        unit[0] = 1;
        CHECK(lidskii_ehrhart(complete_graph(n + 1), unit) == ehrhart_poly(c));
    }
    for (int n = 2; n <= 3; ++n)
        CHECK(lidskii_ehrhart(complete_graph(n + 1), std::vector<long>(n, 1)) == ehrhart_poly(tesler(n)));
    CHECK(count_points(cry(3), 1) == kostant(complete_graph(4), {1, 0, 0, -1}));
}

TEST_CASE("Birkhoff polytopes")
{
    CHECK(ehrhart_poly(birkhoff(1)) == RationalPolynomial::constant(1));
    CHECK(ehrhart_poly(birkhoff(2)) == RationalPolynomial::linear(1, 1));
    HPolytope b3 = birkhoff(3);
    RationalPolynomial poly = ehrhart_poly(b3);
    CHECK(poly.degree() == 4);
    // 3x3 permutation matrices are the lattice points at t = 1
    CHECK(count_points(b3, 1) == 6);
    CHECK(poly(2) == count_points(b3, 2));
}

TEST_CASE("order polytopes")
{
    auto chain = order_polytope(chain_poset(2));
    CHECK(ehrhart_poly(chain) == binom_poly(2, 2));
    for (int k = 1; k <= 3; ++k)
    {
        HPolytope p = order_polytope(poset_p(k));
        CHECK(order_p_hstar(k) == hstar_from_ehrhart(ehrhart_poly(p), 2 * k));
    }
    CHECK(order_p_hstar(2) == HStarVector({1, 2, 1, 0, 0}, 4));
    for (int k = 1; k <= 4; ++k)
        CHECK(order_q_ehrhart(k) == ehrhart_poly(order_polytope(poset_q(k))));
    CHECK(order_q_ehrhart(20)[1] == Rational(-168011, 330));

    Poset cyclic{2, {{0, 1}, {1, 0}}};
    CHECK_THROWS_AS(order_polytope(cyclic), FamilyError);
}

TEST_CASE("order polytope of Q_k as a flow polytope")
{
    for (int k = 1; k <= 4; ++k)
    {
        FlowGraph g = order_q_graph(k);
        std::vector<long> a(k, 0);
        a[0] = 1;
        RationalPolynomial flow = ehrhart_poly(flow_polytope(g, a));
        CHECK(flow == order_q_ehrhart(k));
        CHECK(lidskii_ehrhart(g, a) == flow);
    }
}

TEST_CASE("Delta(1,q) simplices")
{
    for (int d = 1; d <= 5; ++d)
    {
        auto s = delta_1q(std::vector<long>(d, 1));
        CHECK(s.hstar == HStarVector(std::vector<Integer>(d + 1, 1), d));
        CHECK(s.reflexive);
    }
    auto q22 = delta_1q({2, 2});
    CHECK(q22.hstar == hstar_from_ehrhart(ehrhart_poly(q22.polytope), 2));
    CHECK_FALSE(q22.reflexive);

    std::mt19937 rng(41);
    std::uniform_int_distribution<long> entry(1, 4);
    for (int trial = 0; trial < 8; ++trial)
    {
        const int d = 2 + trial % 2;
        std::vector<long> q(d);
        for (auto& x : q)
            x = entry(rng);
        auto s = delta_1q(q);
        CHECK(s.hstar == hstar_from_ehrhart(ehrhart_poly(s.polytope), d));
    }
    CHECK_THROWS_AS(delta_1q({1, 0}), FamilyError);
}

TEST_CASE("Payne and base-r tuples")
{
    CHECK(payne(0, 3, 2) == std::vector<long>{1, 1, 1, 1, 1, 3});
    auto s = delta_1q(payne(0, 3, 2));
    CHECK(s.hstar == payne_hstar(0, 3, 2));
    // (1 + z^2 + z^4)(1 + z + z^2)
    CHECK(payne_hstar(0, 3, 2) == HStarVector({1, 1, 2, 1, 2, 1, 1}, 6));
    CHECK(s.reflexive);
    CHECK_THROWS_AS(payne(0, 2, 2), FamilyError);
    CHECK_THROWS_AS(payne(1, 3, 2), FamilyError);

    CHECK(base_r_simplex(2, 3).q == std::vector<long>{1, 2, 4});
    CHECK(base_r_simplex(3, 2).q == std::vector<long>{2, 6});
    auto one = base_r_simplex(1, 4);
    CHECK(one.standard_simplex);
    CHECK(one.q.empty());
    CHECK_THROWS_AS(base_r_simplex(0, 2), FamilyError);
}

TEST_CASE("zonotopes")
{
    CHECK(zonotope_coeffs(MatrixXz::Identity(3, 3)) == RationalPolynomial::linear(1, 1).pow(3));
    MatrixXz g3 = permutohedron_generators(3);
    CHECK(g3.cols() == 6);
    RationalPolynomial z3 = zonotope_coeffs(g3);
    CHECK(z3 == RationalPolynomial{Rational(1), Rational(6), Rational(15), Rational(16)});
    CHECK(z3 == ehrhart_poly(regular_permutohedron(3)));
    for (int d = 1; d <= 3; ++d)
    {
        RationalPolynomial poly = zonotope_coeffs(permutohedron_generators(d));
        CHECK(poly == ehrhart_poly(regular_permutohedron(d)));
        for (int k = 0; k <= d; ++k)
            CHECK(Rational(forest_count(d + 1, d + 1 - k)) == poly[k]);
    }
    CHECK(zonotope_coeffs(permutohedron_generators(1)) == RationalPolynomial::linear(1, 1));

    std::mt19937 rng(43);
    std::uniform_int_distribution<long> coord(-2, 2);
    for (int trial = 0; trial < 6; ++trial)
    {
        MatrixXz g(3, 3);
        for (Eigen::Index i = 0; i < 3; ++i)
            for (Eigen::Index j = 0; j < 3; ++j)
                g(i, j) = coord(rng);
        VPolytope z = zonotope_vrep(g);
        CHECK(zonotope_coeffs(g) == ehrhart_poly(z));
    }
}

TEST_CASE("spanning forests")
{
    // Cayley: 4^2 spanning trees of K_4
    CHECK(forest_count(4, 1) == 16);
    CHECK(forest_count(4, 4) == 1);
    CHECK(forest_count(4, 3) == 6);
    CHECK(forest_count(3, 5) == 0);
}

TEST_CASE("generalized zonotopes")
{
    MatrixXz g = columns({{1, 0}, {1, 1}});
    VPolytope origin(MatrixXq::Zero(2, 1));
    CHECK(gen_zonotope_ehrhart(origin, g) == zonotope_coeffs(g));

    VPolytope unit_segment = VPolytope::from_rows({{0}, {1}});
    CHECK(gen_zonotope_ehrhart(unit_segment, columns({{1}})) == RationalPolynomial::linear(1, 2));

    VPolytope segment2 = VPolytope::from_rows({{0, 0}, {1, 0}, {0, 1}});
    MatrixXz e1 = columns({{1, 0}});
    RationalPolynomial formula = gen_zonotope_ehrhart(segment2, e1);
    for (long t = 0; t <= 3; ++t)
    {
        MatrixXq ends = MatrixXq::Zero(2, 2);
        ends(0, 1) = t;
        VPolytope sum = minkowski_sum(segment2, VPolytope(ends));
        CHECK(formula(t) == brute_count(sum, 1));
    }
}

TEST_CASE("type-Y generalized permutohedra")
{
    BipartiteGraph single{4, {{0, 1, 2, 3}}};
    CHECK(draconian(single) == std::vector<std::vector<long>>{{3}});
    CHECK(typey_ehrhart(single, {1}) == binom_poly(3, 3));

    for (int d = 1; d <= 3; ++d)
    {
        BipartiteGraph g = staircase_graph(d);
        CHECK(draconian(g) == pitman_stanley_indices(d));
        for (const auto& y : grid(d, 2))
            CHECK(typey_ehrhart(g, y) == pitman_stanley(y).ehrhart);
    }

    std::vector<BipartiteGraph> graphs{
        {3, {{0, 1, 2}, {0, 1}, {1, 2}}},
        {4, {{0, 1, 2, 3}, {0, 2}, {1, 3}, {2, 3}}},
        {4, {{0, 1, 2, 3}, {1, 2, 3}, {0, 1}}},
    };
    for (const auto& g : graphs)
        for (const auto& y : grid(g.left(), 1))
        {
            if (y[0] == 0)
                continue;
            VPolytope v = typey_vrep(g, y);
            CHECK(typey_ehrhart(g, y) == ehrhart_poly(v));
        }
    BipartiteGraph bad{3, {{0, 1}, {2}}};
    CHECK_THROWS_AS(draconian(bad), FamilyError);
}

TEST_CASE("cyclic polytopes and higher integrality")
{
    VPolytope highpoly = VPolytope::from_rows({{0, 0, 0}, {4, 0, 0}, {3, 6, 0}, {2, 2, 2}});
    CHECK(is_k_integral_simplex(highpoly, 1));
    RationalPolynomial expected{Rational(1), Rational(4), Rational(10), Rational(8)};
    CHECK(higher_assemble(highpoly, 1) == expected);
    CHECK(ehrhart_poly(highpoly) == expected);

    VPolytope c2 = cyclic_polytope(2, {0, 1, 2, 3});
    CHECK(higher_assemble(c2, 2) == ehrhart_poly(c2));
    CHECK(higher_assemble(c2, 1) == ehrhart_poly(c2));
    VPolytope c3 = cyclic_polytope(3, {0, 1, 2, 3});
    CHECK(is_k_integral_simplex(c3, 3));
    for (int k = 0; k <= 3; ++k)
        CHECK(higher_assemble(c3, k) == ehrhart_poly(c3));
    CHECK_THROWS_AS(cyclic_polytope(2, {0, 2, 1}), FamilyError);
    CHECK_THROWS_AS(cyclic_polytope(3, {0, 1, 2}), FamilyError);

    auto pts = lattice_points(VPolytope::from_rows({{0, 0}, {2, 0}, {0, 2}}));
    CHECK(pts.size() == 6);
    CHECK(pts.front() == VectorXz::Zero(2));
}

TEST_CASE("Reeve tetrahedra")
{
    for (long m : {1L, 2L, 5L, 12L, 13L})
    {
        auto r = reeve(m);
        CHECK(r.ehrhart == ehrhart_poly(r.polytope));
        CHECK(ehrhart_poly(reeve_h(m)) == r.ehrhart);
        CHECK(count_points(reeve_h(m), 2) == brute_count(r.polytope, 2));
    }
    CHECK(reeve(1).ehrhart == binom_poly(3, 3));
    CHECK(reeve(12).ehrhart[1] == 0);
    CHECK(reeve(13).ehrhart[1] == Rational(-1, 6));
}

TEST_CASE("sign-pattern products")
{
    CHECK(sign_pattern_product(13, 3).ehrhart == reeve(13).ehrhart);
    auto p4 = sign_pattern_product(13, 4);
    CHECK(count_points(p4.polytope, 1) == brute_count(p4.polytope, 1, 13));
    CHECK(p4.ehrhart == ehrhart_poly(p4.polytope));
    // (2t+1)^2 i(T_m, t) has linear coefficient (36 - m)/6, the last middle one to turn negative
    auto p5 = sign_pattern_product(37, 5);
    for (int i = 1; i <= 3; ++i)
        CHECK(p5.ehrhart[i] < 0);
    CHECK(sign_pattern_product(36, 5).ehrhart[1] == 0);
    CHECK_THROWS_AS(sign_pattern_product(13, 2), FamilyError);
}

TEST_CASE("stored counterexamples")
{
    CHECK(smooth_reflexive_9_ehrhart()[1] == Rational(-6673, 630));
    CHECK(mink1_ehrhart()[2] == Rational(-1, 3));
    for (int i = 0; i <= 5; ++i)
        CHECK(mink2_q_ehrhart()[i] > 0);
    CHECK(ehrhart_poly(minkowski_sum(mink1_p(), mink1_q())) == mink1_ehrhart());
    CHECK(ehrhart_poly(mink2_q()) == mink2_q_ehrhart());
    auto stored = stored_counterexamples();
    CHECK(stored.size() == 4);
    CHECK(stored[0].name == "smooth-reflexive-9");
}

TEST_CASE("known identities on family members")
{
    auto check = [](const RationalPolynomial& poly, int d, const Integer& at_one, const HPolytope* h) {
        auto failure = testing::known_identity_failure(poly, d, at_one, h);
        CHECK_MESSAGE(!failure, (failure ? *failure : std::string()));
    };
    for (int d = 1; d <= 3; ++d)
    {
        auto cross = cross_polytope(d);
        check(cross.ehrhart, d, count_points(cross.polytope, 1), &cross.polytope);
    }
    auto ps = pitman_stanley({1, 2, 1});
    check(ps.ehrhart, 3, count_points(ps.polytope, 1), &ps.polytope);
    auto op = order_polytope(poset_p(2));
    check(ehrhart_poly(op), 4, count_points(op, 1), &op);
    auto r = reeve_h(5);
    check(reeve(5).ehrhart, 3, count_points(r, 1), &r);
}
