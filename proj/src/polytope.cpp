#include "ehrhart/polytope.hpp"

#include <set>

#include "ehrhart/lp.hpp"

namespace ehrhart {

namespace {

VectorXz literal_row(std::initializer_list<long> row)
{
    VectorXz v(static_cast<Eigen::Index>(row.size()));
    Eigen::Index i = 0;
    for (long x : row)
        v(i++) = x;
    return v;
}

void append_row(MatrixXz& m, VectorXz& rhs, const VectorXz& row, const Integer& value, Eigen::Index dim)
{
    if (row.size() != dim)
        throw PolytopeError("row length " + std::to_string(row.size()) + " does not match dimension " +
                            std::to_string(dim));
    m.conservativeResize(m.rows() + 1, dim);
    m.row(m.rows() - 1) = row.transpose();
    rhs.conservativeResize(rhs.size() + 1);
    rhs(rhs.size() - 1) = value;
}

/// LP over convex multipliers: columns are generators, rows are the
/// normalization followed by the fixed coordinates.
ExactSimplex hull_program(const VPolytope& p, std::span<const Rational> prefix)
{
    const Eigen::Index n = p.points.cols();
    const Eigen::Index k = static_cast<Eigen::Index>(prefix.size());
    MatrixXq m(k + 1, n);
    VectorXq r(k + 1);
    m.row(0).setOnes();
    r(0) = 1;
    for (Eigen::Index i = 0; i < k; ++i)
    {
        m.row(i + 1) = p.points.row(i);
        r(i + 1) = prefix[i];
    }
    return ExactSimplex(m, r);
}

}  // namespace

HPolytope::HPolytope(Eigen::Index dim)
    : ambient_dim(dim), a(0, dim), b(0), e(0, dim), f(0)
{
}

void HPolytope::add_inequality(const VectorXz& row, const Integer& rhs)
{
    append_row(a, b, row, rhs, ambient_dim);
}

void HPolytope::add_equality(const VectorXz& row, const Integer& rhs)
{
    append_row(e, f, row, rhs, ambient_dim);
}

void HPolytope::add_inequality(std::initializer_list<long> row, long rhs)
{
    add_inequality(literal_row(row), Integer(rhs));
}

void HPolytope::add_equality(std::initializer_list<long> row, long rhs)
{
    add_equality(literal_row(row), Integer(rhs));
}

VPolytope VPolytope::from_rows(std::initializer_list<std::initializer_list<long>> rows)
{
    if (rows.size() == 0)
        throw PolytopeError("a V-polytope needs at least one point");
    const Eigen::Index dim = static_cast<Eigen::Index>(rows.begin()->size());
    MatrixXq pts(dim, static_cast<Eigen::Index>(rows.size()));
    Eigen::Index c = 0;
    for (const auto& row : rows)
    {
        if (static_cast<Eigen::Index>(row.size()) != dim)
            throw PolytopeError("points of differing length");
        Eigen::Index i = 0;
        for (long x : row)
            pts(i++, c) = x;
        ++c;
    }
    return VPolytope(pts);
}

HPolytope dilate(const HPolytope& p, long t)
{
    if (t < 0)
        throw PolytopeError("dilation factor must be nonnegative");
    HPolytope out = p;
    out.b *= Integer(t);
    out.f *= Integer(t);
    return out;
}

VPolytope dilate(const VPolytope& p, long t)
{
    if (t < 0)
        throw PolytopeError("dilation factor must be nonnegative");
    VPolytope out = p;
    out.points *= Rational(t);
    return out;
}

bool contains(const HPolytope& p, const VectorXz& x)
{
    if (x.size() != p.ambient_dim)
        throw PolytopeError("point has the wrong dimension");
    VectorXz ax = p.a * x;
    for (Eigen::Index i = 0; i < ax.size(); ++i)
        if (ax(i) > p.b(i))
            return false;
    return p.e.rows() == 0 || p.e * x == p.f;
}

bool contains_relint(const HPolytope& p, const VectorXz& x)
{
    if (x.size() != p.ambient_dim)
        throw PolytopeError("point has the wrong dimension");
    VectorXz ax = p.a * x;
    for (Eigen::Index i = 0; i < ax.size(); ++i)
        if (ax(i) >= p.b(i))
            return false;
    return p.e.rows() == 0 || p.e * x == p.f;
}

bool contains_hull(const VPolytope& p, const VectorXq& x)
{
    if (x.size() != p.ambient_dim)
        throw PolytopeError("point has the wrong dimension");
    std::vector<Rational> coords(x.data(), x.data() + x.size());
    return hull_program(p, coords).feasible();
}

std::optional<Interval> coord_range(const HPolytope& p, std::span<const Integer> prefix, Eigen::Index j)
{
    const Eigen::Index k = static_cast<Eigen::Index>(prefix.size());
    if (j < k || j >= p.ambient_dim)
        throw PolytopeError("coordinate index out of range");
    MatrixXq e(p.e.rows() + k, p.ambient_dim);
    VectorXq f(p.f.size() + k);
    e.topRows(p.e.rows()) = p.e.cast<Rational>();
    f.head(p.f.size()) = p.f.cast<Rational>();
    for (Eigen::Index i = 0; i < k; ++i)
    {
        e.row(p.e.rows() + i).setZero();
        e(p.e.rows() + i, i) = 1;
        f(p.f.size() + i) = Rational(prefix[i]);
    }
    InequalitySystemLP lp(p.a.cast<Rational>(), p.b.cast<Rational>(), e, f);
    if (!lp.feasible())
        return std::nullopt;
    VectorXq objective = VectorXq::Zero(p.ambient_dim);
    objective(j) = 1;
    LinearRange range = lp.range(objective);
    if (!range.lo || !range.hi)
        throw PolytopeError("polytope is unbounded in coordinate " + std::to_string(j));
    return Interval{*range.lo, *range.hi};
}

std::optional<Interval> coord_range(const VPolytope& p, std::span<const Integer> prefix, Eigen::Index j)
{
    const Eigen::Index k = static_cast<Eigen::Index>(prefix.size());
    if (j < k || j >= p.ambient_dim)
        throw PolytopeError("coordinate index out of range");
    std::vector<Rational> fixed(prefix.begin(), prefix.end());
    ExactSimplex lp = hull_program(p, fixed);
    if (!lp.feasible())
        return std::nullopt;
    VectorXq c = p.points.row(j).transpose();
    Rational lo = *lp.minimize(c);
    Rational hi = -*lp.minimize(-c);
    return Interval{lo, hi};
}

VPolytope minkowski_sum(const VPolytope& p, const VPolytope& q)
{
    if (p.ambient_dim != q.ambient_dim)
        throw PolytopeError("Minkowski sum of polytopes in different dimensions");
    MatrixXq pts(p.ambient_dim, p.points.cols() * q.points.cols());
    Eigen::Index c = 0;
    for (Eigen::Index i = 0; i < p.points.cols(); ++i)
        for (Eigen::Index j = 0; j < q.points.cols(); ++j)
            pts.col(c++) = p.points.col(i) + q.points.col(j);
    return VPolytope(pts);
}

HPolytope product(const HPolytope& p, const HPolytope& q)
{
    const Eigen::Index dp = p.ambient_dim;
    const Eigen::Index dq = q.ambient_dim;
    HPolytope out(dp + dq);
    out.a = MatrixXz::Zero(p.a.rows() + q.a.rows(), dp + dq);
    out.a.block(0, 0, p.a.rows(), dp) = p.a;
    out.a.block(p.a.rows(), dp, q.a.rows(), dq) = q.a;
    out.b.resize(p.b.size() + q.b.size());
    out.b << p.b, q.b;
    out.e = MatrixXz::Zero(p.e.rows() + q.e.rows(), dp + dq);
    out.e.block(0, 0, p.e.rows(), dp) = p.e;
    out.e.block(p.e.rows(), dp, q.e.rows(), dq) = q.e;
    out.f.resize(p.f.size() + q.f.size());
    out.f << p.f, q.f;
    return out;
}

VPolytope project_drop_last(const VPolytope& p, Eigen::Index k)
{
    if (k < 0 || k > p.ambient_dim)
        throw PolytopeError("projection dimension out of range");
    return VPolytope(MatrixXq(p.points.topRows(k)));
}

VPolytope irredundant(const VPolytope& p)
{
    std::vector<Eigen::Index> unique;
    for (Eigen::Index i = 0; i < p.points.cols(); ++i)
    {
        bool seen = false;
        for (Eigen::Index j : unique)
            if (p.points.col(j) == p.points.col(i))
            {
                seen = true;
                break;
            }
        if (!seen)
            unique.push_back(i);
    }
    std::vector<Eigen::Index> keep;
    for (std::size_t s = 0; s < unique.size(); ++s)
    {
        MatrixXq others(p.ambient_dim, static_cast<Eigen::Index>(unique.size()) - 1);
        Eigen::Index c = 0;
        for (std::size_t u = 0; u < unique.size(); ++u)
            if (u != s)
                others.col(c++) = p.points.col(unique[u]);
        if (others.cols() == 0 || !contains_hull(VPolytope(others), p.points.col(unique[s])))
            keep.push_back(unique[s]);
    }
    MatrixXq pts(p.ambient_dim, static_cast<Eigen::Index>(keep.size()));
    for (std::size_t c = 0; c < keep.size(); ++c)
        pts.col(static_cast<Eigen::Index>(c)) = p.points.col(keep[c]);
    VPolytope out(pts);
    out.ambient_dim = p.ambient_dim;
    return out;
}

bool is_lattice_polytope(const VPolytope& p)
{
    VPolytope v = irredundant(p);
    for (Eigen::Index i = 0; i < v.points.size(); ++i)
        if (!is_integer(v.points.data()[i]))
            return false;
    return true;
}

IntegralityResult affine_integral(const AffineSpan& w)
{
    const MatrixXz& pts = w.points;
    if (pts.cols() == 0)
        throw PolytopeError("affine span needs at least one point");
    const Eigen::Index d = pts.rows();
    MatrixXz diffs(d, pts.cols() - 1);
    for (Eigen::Index i = 1; i < pts.cols(); ++i)
        diffs.col(i - 1) = pts.col(i) - pts.col(0);

    IntegralityResult out;
    out.dim = exact_rank(diffs);
    if (out.dim == 0)
    {
        out.integral = true;
        out.index = 1;
        return out;
    }
    // W ∩ Z^d is a translate of the saturated difference lattice as soon as
    // W contains a lattice point, which the generators guarantee.
    MatrixXz lattice = saturate(diffs);
    out.index = abs(determinant(MatrixXz(lattice.topRows(out.dim))));
    out.integral = out.index == 1;
    return out;
}

Eigen::Index affine_dim(const VPolytope& p)
{
    if (p.points.cols() == 0)
        throw PolytopeError("empty V-polytope");
    MatrixXq diffs(p.ambient_dim, p.points.cols() - 1);
    for (Eigen::Index i = 1; i < p.points.cols(); ++i)
        diffs.col(i - 1) = p.points.col(i) - p.points.col(0);
    return exact_rank(diffs);
}

std::vector<Eigen::Index> implicit_equalities(const HPolytope& p)
{
    InequalitySystemLP lp(p.a.cast<Rational>(), p.b.cast<Rational>(), p.e.cast<Rational>(), p.f.cast<Rational>());
    if (!lp.feasible())
        throw PolytopeError("infeasible inequality system");
    std::vector<Eigen::Index> out;
    for (Eigen::Index i = 0; i < p.a.rows(); ++i)
    {
        VectorXq row = p.a.row(i).transpose().cast<Rational>();
        LinearRange range = lp.range(row);
        if (range.lo && *range.lo == Rational(p.b(i)))
            out.push_back(i);
    }
    return out;
}

Eigen::Index affine_dim(const HPolytope& p)
{
    std::vector<Eigen::Index> implicit = implicit_equalities(p);
    MatrixXz eq(p.e.rows() + static_cast<Eigen::Index>(implicit.size()), p.ambient_dim);
    eq.topRows(p.e.rows()) = p.e;
    for (std::size_t i = 0; i < implicit.size(); ++i)
        eq.row(p.e.rows() + static_cast<Eigen::Index>(i)) = p.a.row(implicit[i]);
    return p.ambient_dim - exact_rank(eq);
}

}  // namespace ehrhart
