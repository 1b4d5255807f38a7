#pragma once

#include "ehrhart/polytope.hpp"
#include "ehrhart/exact.hpp"

namespace ehrhart::testing {

/// Visits every integer point of the box [lo, hi]^dim.
template <typename F>
void for_each_box_point(Eigen::Index dim, const std::vector<long>& lo, const std::vector<long>& hi, F&& f)
{
    VectorXz x(dim);
    std::vector<long> cur(lo);
    if (dim == 0)
    {
        f(x);
        return;
    }
    for (Eigen::Index i = 0; i < dim; ++i)
        if (lo[i] > hi[i])
            return;
    while (true)
    {
        for (Eigen::Index i = 0; i < dim; ++i)
            x(i) = cur[i];
        f(x);
        Eigen::Index i = 0;
        while (i < dim && cur[i] == hi[i])
        {
            cur[i] = lo[i];
            ++i;
        }
        if (i == dim)
            return;
        ++cur[i];
    }
}

/// Plain membership count of tP over a caller-supplied box (no pruning).
inline Integer brute_count(const HPolytope& p, long t, long radius)
{
    HPolytope q = dilate(p, t);
    std::vector<long> lo(p.ambient_dim, -radius), hi(p.ambient_dim, radius);
    Integer n = 0;
    for_each_box_point(p.ambient_dim, lo, hi, [&](const VectorXz& x) {
        if (contains(q, x))
            ++n;
    });
    return n;
}

/// Hull-membership count of tP over the bounding box of its generators.
inline Integer brute_count(const VPolytope& p, long t)
{
    VPolytope q = dilate(p, t);
    std::vector<long> lo(p.ambient_dim), hi(p.ambient_dim);
    for (Eigen::Index i = 0; i < p.ambient_dim; ++i)
    {
        lo[i] = ceil_of(q.points.row(i).minCoeff()).convert_to<long>();
        hi[i] = floor_of(q.points.row(i).maxCoeff()).convert_to<long>();
    }
    Integer n = 0;
    for_each_box_point(p.ambient_dim, lo, hi, [&](const VectorXz& x) {
        if (contains_hull(q, x.cast<Rational>()))
            ++n;
    });
    return n;
}

/// Interpolates brute-force counts at t = 0..degree.
template <typename Counter>
RationalPolynomial brute_polynomial(long degree, Counter count)
{
    std::vector<Rational> values;
    for (long t = 0; t <= degree; ++t)
        values.emplace_back(count(t));
    return interpolate_consecutive(values);
}

}  // namespace ehrhart::testing
