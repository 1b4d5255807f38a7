#include "ehrhart/families.hpp"

#include <functional>
#include <numeric>

namespace ehrhart {

namespace {

void for_each_subset(Eigen::Index n, Eigen::Index k, const std::function<void(const std::vector<Eigen::Index>&)>& f)
{
    std::vector<Eigen::Index> cur;
    std::function<void(Eigen::Index)> rec = [&](Eigen::Index start) {
        if (static_cast<Eigen::Index>(cur.size()) == k)
        {
            f(cur);
            return;
        }
        for (Eigen::Index i = start; i < n; ++i)
        {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

MatrixXz select_columns(const MatrixXz& m, const std::vector<Eigen::Index>& idx)
{
    MatrixXz out(m.rows(), static_cast<Eigen::Index>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
        out.col(static_cast<Eigen::Index>(i)) = m.col(idx[i]);
    return out;
}

}  // namespace

RationalPolynomial zonotope_coeffs(const MatrixXz& generators)
{
    if (generators.cols() == 0)
        throw FamilyError("zonotope needs at least one generator");
    std::vector<Rational> coeffs{Rational(1)};
    const Eigen::Index top = std::min(generators.rows(), generators.cols());
    for (Eigen::Index k = 1; k <= top; ++k)
    {
        Integer sum = 0;
        for_each_subset(generators.cols(), k, [&](const std::vector<Eigen::Index>& idx) {
            sum += gcd_of_maximal_minors(select_columns(generators, idx));
        });
        coeffs.emplace_back(sum);
    }
    return RationalPolynomial(coeffs);
}

VPolytope zonotope_vrep(const MatrixXz& generators)
{
    const Eigen::Index m = generators.cols();
    if (m == 0)
        throw FamilyError("zonotope needs at least one generator");
    if (m > 20)
        throw FamilyError("too many zonotope generators for vertex enumeration");
    MatrixXq pts(generators.rows(), Eigen::Index(1) << m);
    for (long mask = 0; mask < (1L << m); ++mask)
    {
        VectorXq sum = VectorXq::Zero(generators.rows());
        for (Eigen::Index i = 0; i < m; ++i)
            if ((mask >> i) & 1)
                sum += generators.col(i).cast<Rational>();
        pts.col(mask) = sum;
    }
    return irredundant(VPolytope(pts));
}

MatrixXz permutohedron_generators(int d)
{
    if (d < 1)
        throw FamilyError("permutohedron needs d >= 1");
    MatrixXz g = MatrixXz::Zero(d + 1, (d + 1) * d / 2);
    Eigen::Index c = 0;
    for (int i = 0; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j, ++c)
        {
            g(j, c) = 1;
            g(i, c) = -1;
        }
    return g;
}

VPolytope regular_permutohedron(int d)
{
    if (d < 1 || d > 8)
        throw FamilyError("permutohedron dimension out of range");
    std::vector<long> perm(d + 1);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::vector<long>> all;
    do
        all.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    MatrixXq pts(d + 1, static_cast<Eigen::Index>(all.size()));
    for (std::size_t c = 0; c < all.size(); ++c)
        for (int i = 0; i <= d; ++i)
            pts(i, static_cast<Eigen::Index>(c)) = all[c][i];
    return VPolytope(pts);
}

Integer forest_count(int n, int trees)
{
    if (n < 1 || n > 7)
        throw FamilyError("forest enumeration supports 1 <= n <= 7");
    if (trees < 1 || trees > n)
        return 0;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    const int want = n - trees;
    Integer count = 0;
    for (long mask = 0; mask < (1L << edges.size()); ++mask)
    {
        if (std::popcount(static_cast<unsigned long>(mask)) != want)
            continue;
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        bool acyclic = true;
        for (std::size_t e = 0; e < edges.size() && acyclic; ++e)
            if ((mask >> e) & 1)
            {
                int a = find(edges[e].first), b = find(edges[e].second);
                if (a == b)
                    acyclic = false;
                else
                    parent[a] = b;
            }
        if (acyclic)
            count += 1;
    }
    return count;
}

RationalPolynomial gen_zonotope_ehrhart(const VPolytope& p, const MatrixXz& generators)
{
    if (p.points.rows() != generators.rows())
        throw FamilyError("polytope and generators live in different dimensions");
    if (!is_lattice_polytope(p))
        throw FamilyError("polytope must have lattice vertices");
    const Eigen::Index dim = generators.rows();
    const Eigen::Index top = std::min(dim, generators.cols());
    std::vector<Rational> coeffs;
    for (Eigen::Index k = 0; k <= top; ++k)
    {
        Integer sum = 0;
        for_each_subset(generators.cols(), k, [&](const std::vector<Eigen::Index>& idx) {
            MatrixXz x = select_columns(generators, idx);
            Integer h = gcd_of_maximal_minors(x);
            if (h == 0)
                return;
            if (k == dim)
            {
                sum += h;
                return;
            }
            // W^T maps Z^D onto Z^(D-k) with kernel span(X) ∩ Z^D because the
            // kernel basis W is primitive.
            MatrixXz w = k == 0 ? MatrixXz(MatrixXz::Identity(dim, dim)) : integer_kernel(x.transpose());
            VPolytope image(w.transpose().cast<Rational>() * p.points);
            sum += count_points(image, 1) * h;
        });
        coeffs.emplace_back(sum);
    }
    return RationalPolynomial(coeffs);
}

}  // namespace ehrhart
