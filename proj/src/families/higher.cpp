#include "ehrhart/families.hpp"

#include <functional>

namespace ehrhart {

VPolytope cyclic_polytope(int d, const std::vector<long>& u)
{
    if (d < 1)
        throw FamilyError("cyclic polytope needs d >= 1");
    if (static_cast<int>(u.size()) <= d)
        throw FamilyError("cyclic polytope needs more than d parameters");
    for (std::size_t i = 1; i < u.size(); ++i)
        if (u[i] <= u[i - 1])
            throw FamilyError("cyclic parameters must be strictly increasing");
    MatrixXq pts(d, static_cast<Eigen::Index>(u.size()));
    for (std::size_t c = 0; c < u.size(); ++c)
    {
        Rational power(1);
        for (int i = 0; i < d; ++i)
        {
            power *= u[c];
            pts(i, static_cast<Eigen::Index>(c)) = power;
        }
    }
    return VPolytope(pts);
}

std::vector<VectorXz> lattice_points(const VPolytope& p, long t)
{
    const VPolytope q = dilate(p, t);
    const Eigen::Index dim = q.ambient_dim;
    std::vector<VectorXz> out;
    std::vector<Integer> prefix;
    std::function<void()> rec = [&] {
        const Eigen::Index j = static_cast<Eigen::Index>(prefix.size());
        if (j == dim)
        {
            VectorXz x(dim);
            for (Eigen::Index i = 0; i < dim; ++i)
                x(i) = prefix[i];
            out.push_back(x);
            return;
        }
        auto range = coord_range(q, prefix, j);
        if (!range)
            return;
        for (Integer v = ceil_of(range->first); v <= floor_of(range->second); ++v)
        {
            prefix.push_back(v);
            rec();
            prefix.pop_back();
        }
    };
    if (q.points.cols() > 0)
        rec();
    return out;
}

RationalPolynomial higher_assemble(const VPolytope& p, int k)
{
    const Eigen::Index d = p.ambient_dim;
    if (k < 0 || k > d)
        throw FamilyError("k must lie in 0..d");
    if (affine_dim(p) != d)
        throw FamilyError("higher assembly needs a full-dimensional polytope");
    std::vector<Rational> coeffs(d + 1, Rational(0));
    coeffs[0] = 1;
    for (int l = 1; l <= k; ++l)
        coeffs[l] = ehrhart_poly(project_drop_last(p, l)).leading();
    if (k == d)
        return RationalPolynomial(coeffs);

    // Slice sums over the lattice points of the k-dimensional projection;
    // the slices live at the dilated prefix t * y.
    const auto base = k == 0 ? std::vector<VectorXz>{VectorXz(0)} : lattice_points(project_drop_last(p, k));
    const long degree = d - k;
    std::vector<Rational> values;
    for (long t = 0; t <= degree + 1; ++t)
    {
        Integer total = 0;
        for (const auto& y : base)
        {
            std::vector<Integer> prefix(y.size());
            for (Eigen::Index i = 0; i < y.size(); ++i)
                prefix[i] = y(i) * t;
            total += count_slice(p, t, prefix);
        }
        values.emplace_back(total);
    }
    RationalPolynomial slices = interpolate_consecutive(std::span<const Rational>(values.data(), degree + 1));
    if (slices(degree + 1) != values.back())
        throw FamilyError("slice counts are not polynomial; the polytope is not k-integral");
    for (long l = k + 1; l <= d; ++l)
        coeffs[l] = slices[l - k];
    return RationalPolynomial(coeffs);
}

bool is_k_integral_simplex(const VPolytope& p, int k)
{
    const Eigen::Index n = p.points.cols();
    if (n != p.ambient_dim + 1 || affine_dim(p) != p.ambient_dim)
        throw FamilyError("expected a full-dimensional simplex");
    MatrixXz pts(p.ambient_dim, n);
    for (Eigen::Index i = 0; i < p.ambient_dim; ++i)
        for (Eigen::Index c = 0; c < n; ++c)
        {
            if (!is_integer(p.points(i, c)))
                throw FamilyError("simplex vertices must be lattice points");
            pts(i, c) = numerator(p.points(i, c));
        }
    // Faces of a simplex are spanned by vertex subsets; size s gives dimension s - 1.
    for (long mask = 1; mask < (1L << n); ++mask)
    {
        const int size = std::popcount(static_cast<unsigned long>(mask));
        if (size < 2 || size > k + 1)
            continue;
        MatrixXz face(p.ambient_dim, size);
        Eigen::Index c = 0;
        for (Eigen::Index i = 0; i < n; ++i)
            if ((mask >> i) & 1)
                face.col(c++) = pts.col(i);
        if (!affine_integral(AffineSpan{face}).integral)
            return false;
    }
    return true;
}

}  // namespace ehrhart
