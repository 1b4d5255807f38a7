#include "ehrhart/families.hpp"

namespace ehrhart {

namespace {

VectorXz unit(Eigen::Index dim, Eigen::Index i, long value = 1)
{
    VectorXz v = VectorXz::Zero(dim);
    v(i) = value;
    return v;
}

void require(bool ok, const std::string& message)
{
    if (!ok)
        throw FamilyError(message);
}

void add_nonnegativity(HPolytope& p)
{
    for (Eigen::Index i = 0; i < p.ambient_dim; ++i)
        p.add_inequality(unit(p.ambient_dim, i, -1), 0);
}

void ballot(int d, int pos, long sum, std::vector<long>& cur, std::vector<std::vector<long>>& out)
{
    if (pos == d)
    {
        if (sum == d)
            out.push_back(cur);
        return;
    }
    for (long v = 0; sum + v <= d; ++v)
    {
        // prefix condition i_1 + ... + i_k >= k for k < d
        if (pos + 1 < d && sum + v < pos + 1)
            continue;
        cur.push_back(v);
        ballot(d, pos + 1, sum + v, cur, out);
        cur.pop_back();
    }
}

}  // namespace

Family<HPolytope> unit_cube(int d)
{
    require(d >= 1, "cube dimension must be positive");
    HPolytope p(d);
    for (int i = 0; i < d; ++i)
    {
        p.add_inequality(unit(d, i, -1), 0);
        p.add_inequality(unit(d, i), 1);
    }
    return {p, RationalPolynomial::linear(1, 1).pow(d)};
}

Family<HPolytope> standard_simplex(int d)
{
    require(d >= 1, "simplex dimension must be positive");
    HPolytope p(d + 1);
    p.add_equality(VectorXz::Ones(d + 1), 1);
    add_nonnegativity(p);
    return {p, binom_poly(d, d)};
}

CrossPolytope cross_polytope(int d)
{
    require(d >= 1 && d < 20, "cross-polytope dimension out of range");
    HPolytope p(d);
    for (long mask = 0; mask < (1L << d); ++mask)
    {
        VectorXz row(d);
        for (int i = 0; i < d; ++i)
            row(i) = (mask >> i) & 1 ? -1 : 1;
        p.add_inequality(row, 1);
    }
    RationalPolynomial poly;
    for (int k = 0; k <= d; ++k)
        poly += binom_poly(0, k) * Rational(Integer(1) << k) * Rational(binomial(d, k));
    std::vector<Integer> h;
    for (int i = 0; i <= d; ++i)
        h.push_back(binomial(d, i));
    return {p, poly, HStarVector(h, d)};
}

std::vector<std::vector<long>> pitman_stanley_indices(int d)
{
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    ballot(d, 0, 0, cur, out);
    return out;
}

Family<HPolytope> pitman_stanley(const std::vector<long>& a)
{
    const int d = static_cast<int>(a.size());
    require(d >= 1, "Pitman-Stanley parameter must be nonempty");
    for (long x : a)
        require(x >= 0, "Pitman-Stanley parameters must be nonnegative");
    HPolytope p(d);
    add_nonnegativity(p);
    long partial = 0;
    for (int i = 0; i < d; ++i)
    {
        partial += a[i];
        VectorXz row = VectorXz::Zero(d);
        row.head(i + 1).setOnes();
        p.add_inequality(row, partial);
    }
    RationalPolynomial poly;
    for (const auto& idx : pitman_stanley_indices(d))
    {
        RationalPolynomial term = multiset_poly(RationalPolynomial::linear(a[0], 1), idx[0]);
        for (int k = 1; k < d; ++k)
            term *= multiset_poly(RationalPolynomial::linear(a[k], 0), idx[k]);
        poly += term;
    }
    return {p, poly};
}

HPolytope birkhoff(int n)
{
    require(n >= 1, "Birkhoff size must be positive");
    HPolytope p(n * n);
    for (int i = 0; i < n; ++i)
    {
        VectorXz row = VectorXz::Zero(n * n);
        VectorXz col = VectorXz::Zero(n * n);
        for (int j = 0; j < n; ++j)
        {
            row(i * n + j) = 1;
            col(j * n + i) = 1;
        }
        p.add_equality(row, 1);
        p.add_equality(col, 1);
    }
    add_nonnegativity(p);
    return p;
}

Family<VPolytope> reeve(long m)
{
    require(m >= 1, "Reeve parameter must be positive");
    MatrixXq pts(3, 4);
    pts << 0, 1, 0, 1,
           0, 0, 1, 1,
           0, 0, 0, m;
    RationalPolynomial poly{Rational(1), Rational(12 - m, 6), Rational(1), Rational(m, 6)};
    return {VPolytope(pts), poly};
}

HPolytope reeve_h(long m)
{
    require(m >= 1, "Reeve parameter must be positive");
    HPolytope p(3);
    p.add_inequality({0, 0, -1}, 0);
    p.add_inequality({0, -m, 1}, 0);
    p.add_inequality({-m, 0, 1}, 0);
    p.add_inequality({m, m, -1}, m);
    return p;
}

Family<HPolytope> sign_pattern_product(long m, int d)
{
    require(d >= 3, "sign-pattern product needs d >= 3");
    const long len = d - 3;
    HPolytope p = reeve_h(m);
    RationalPolynomial poly = reeve(m).ehrhart;
    for (int i = 0; i < d - 3; ++i)
    {
        HPolytope seg(1);
        seg.add_inequality({-1}, 0);
        seg.add_inequality({1}, len);
        p = product(seg, p);
        poly *= RationalPolynomial::linear(len, 1);
    }
    return {p, poly};
}

}  // namespace ehrhart
