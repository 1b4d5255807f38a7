#include "ehrhart/engine.hpp"

#include <future>
#include <limits>

#include "ehrhart/lp.hpp"

namespace ehrhart {

namespace {

long to_long(const Integer& v)
{
    if (v > std::numeric_limits<long>::max() / 4 || v < std::numeric_limits<long>::min() / 4)
        throw EngineError("coefficient too large for machine-word enumeration");
    return v.convert_to<long>();
}

long floor_div(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

long ceil_div(long a, long b)
{
    return -floor_div(-a, b);
}

/// Integer points of {y : a y <= b} inside a starting box, enumerated
/// coordinate by coordinate. Each node tightens the box by propagating
/// every row to a fixpoint; with all but the last coordinate fixed the
/// propagated interval is exact.
class BoxCounter
{
    public:
        struct Term
        {
            int col;
            long coef;
        };
        struct Row
        {
            std::vector<Term> terms;
            long rhs;
        };

        BoxCounter(std::vector<Row> rows, std::vector<long> lo, std::vector<long> hi)
            : rows_(std::move(rows)), lo_(std::move(lo)), hi_(std::move(hi)), n_(static_cast<int>(lo_.size()))
        {
        }

        Integer count(unsigned workers) const
        {
            std::vector<long> lo = lo_, hi = hi_;
            if (!propagate(lo, hi))
                return 0;
            if (n_ == 1)
                return hi[0] - lo[0] + 1;
            if (workers <= 1)
                return Integer(descend(0, lo, hi));
            std::vector<std::future<long long>> parts;
            for (unsigned w = 0; w < workers; ++w)
                parts.push_back(std::async(std::launch::async, [&, w] {
                    long long total = 0;
                    for (long v = lo[0] + static_cast<long>(w); v <= hi[0]; v += static_cast<long>(workers))
                        total += fix_and_descend(0, v, lo, hi);
                    return total;
                }));
            Integer total = 0;
            for (auto& part : parts)
                total += part.get();
            return total;
        }

    private:
        std::vector<Row> rows_;
        std::vector<long> lo_;
        std::vector<long> hi_;
        int n_;

        long long fix_and_descend(int k, long v, const std::vector<long>& lo, const std::vector<long>& hi) const
        {
            std::vector<long> l = lo, h = hi;
            l[k] = h[k] = v;
            if (!propagate(l, h))
                return 0;
            if (k + 1 == n_ - 1)
                return h[k + 1] - l[k + 1] + 1;
            return descend(k + 1, l, h);
        }

        long long descend(int k, const std::vector<long>& lo, const std::vector<long>& hi) const
        {
            long long total = 0;
            for (long v = lo[k]; v <= hi[k]; ++v)
                total += fix_and_descend(k, v, lo, hi);
            return total;
        }

        bool propagate(std::vector<long>& lo, std::vector<long>& hi) const
        {
            for (int pass = 0; pass < 16; ++pass)
            {
                bool changed = false;
                for (const Row& row : rows_)
                {
                    long minsum = 0;
                    for (const Term& t : row.terms)
                        minsum += t.coef > 0 ? t.coef * lo[t.col] : t.coef * hi[t.col];
                    if (minsum > row.rhs)
                        return false;
                    for (const Term& t : row.terms)
                    {
                        if (lo[t.col] == hi[t.col])
                            continue;
                        const long own = t.coef > 0 ? t.coef * lo[t.col] : t.coef * hi[t.col];
                        const long slack = row.rhs - (minsum - own);
                        if (t.coef > 0)
                        {
                            long bound = floor_div(slack, t.coef);
                            if (bound < hi[t.col])
                            {
                                hi[t.col] = bound;
                                changed = true;
                            }
                        }
                        else
                        {
                            long bound = ceil_div(slack, t.coef);
                            if (bound > lo[t.col])
                            {
                                lo[t.col] = bound;
                                changed = true;
                            }
                        }
                        if (lo[t.col] > hi[t.col])
                            return false;
                    }
                }
                if (!changed)
                    break;
            }
            return true;
        }
};

/// {y : a y <= b} in lattice coordinates of an affine lattice x = x0 + K y.
struct ReducedSystem
{
    bool empty = false;
    MatrixXz a;
    VectorXz b;
};

ReducedSystem reduce_equalities(const MatrixXz& a, const VectorXz& b, const MatrixXz& e, const VectorXz& f)
{
    const Eigen::Index n = a.cols();
    ReducedSystem out;
    if (e.rows() == 0)
    {
        out.a = a;
        out.b = b;
        return out;
    }

    MatrixXq aug(e.rows(), n + 1);
    aug.leftCols(n) = e.cast<Rational>();
    aug.col(n) = f.cast<Rational>();
    std::vector<Eigen::Index> pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == n)
    {
        out.empty = true;
        return out;
    }

    bool integral_rref = true;
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(pivots.size()) && integral_rref; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            if (!is_integer(aug(i, j)))
            {
                integral_rref = false;
                break;
            }

    VectorXz x0 = VectorXz::Zero(n);
    MatrixXz kernel;
    if (integral_rref)
    {
        // Pivot coordinates are integer-affine functions of the free ones,
        // so the free coordinates parametrize the lattice points directly.
        std::vector<bool> is_pivot(n, false);
        for (Eigen::Index p : pivots)
            is_pivot[p] = true;
        for (std::size_t i = 0; i < pivots.size(); ++i)
        {
            const Rational& c = aug(static_cast<Eigen::Index>(i), n);
            if (!is_integer(c))
            {
                out.empty = true;
                return out;
            }
            x0(pivots[i]) = numerator(c);
        }
        kernel = MatrixXz::Zero(n, n - static_cast<Eigen::Index>(pivots.size()));
        Eigen::Index col = 0;
        for (Eigen::Index j = 0; j < n; ++j)
        {
            if (is_pivot[j])
                continue;
            kernel(j, col) = 1;
            for (std::size_t i = 0; i < pivots.size(); ++i)
                kernel(pivots[i], col) = -numerator(aug(static_cast<Eigen::Index>(i), j));
            ++col;
        }
    }
    else
    {
        auto solution = integer_solution(e, f);
        if (!solution)
        {
            out.empty = true;
            return out;
        }
        x0 = *solution;
        kernel = integer_kernel(e);
    }
    out.a = a * kernel;
    out.b = b - a * x0;
    return out;
}

Integer count_system(const MatrixXz& a, const VectorXz& b, const MatrixXz& e, const VectorXz& f, unsigned workers)
{
    ReducedSystem sys = reduce_equalities(a, b, e, f);
    if (sys.empty)
        return 0;
    const Eigen::Index n = sys.a.cols();
    if (n == 0)
    {
        for (Eigen::Index i = 0; i < sys.b.size(); ++i)
            if (sys.b(i) < 0)
                return 0;
        return 1;
    }

    InequalitySystemLP lp(sys.a.cast<Rational>(), sys.b.cast<Rational>(), MatrixXq(0, n), VectorXq(0));
    if (!lp.feasible())
        return 0;
    std::vector<long> lo(n), hi(n);
    for (Eigen::Index j = 0; j < n; ++j)
    {
        VectorXq objective = VectorXq::Zero(n);
        objective(j) = 1;
        LinearRange range = lp.range(objective);
        if (!range.lo || !range.hi)
            throw EngineError("polytope is unbounded");
        Integer l = ceil_of(*range.lo);
        Integer h = floor_of(*range.hi);
        if (l > h)
            return 0;
        lo[j] = to_long(l);
        hi[j] = to_long(h);
    }

    std::vector<BoxCounter::Row> rows;
    for (Eigen::Index i = 0; i < sys.a.rows(); ++i)
    {
        BoxCounter::Row row;
        for (Eigen::Index j = 0; j < n; ++j)
            if (sys.a(i, j) != 0)
                row.terms.push_back({static_cast<int>(j), to_long(sys.a(i, j))});
        row.rhs = to_long(sys.b(i));
        if (row.terms.empty())
        {
            if (row.rhs < 0)
                return 0;
            continue;
        }
        rows.push_back(std::move(row));
    }
    return BoxCounter(std::move(rows), std::move(lo), std::move(hi)).count(workers);
}

Integer count_slice_system(const HPolytope& p, long t, std::span<const Integer> prefix, unsigned workers)
{
    if (t < 0)
        throw EngineError("dilation factor must be nonnegative");
    const Eigen::Index k = static_cast<Eigen::Index>(prefix.size());
    if (k > p.ambient_dim)
        throw EngineError("prefix longer than the dimension");
    MatrixXz e(p.e.rows() + k, p.ambient_dim);
    VectorXz f(p.f.size() + k);
    e.topRows(p.e.rows()) = p.e;
    f.head(p.f.size()) = p.f * Integer(t);
    for (Eigen::Index i = 0; i < k; ++i)
    {
        e.row(p.e.rows() + i).setZero();
        e(p.e.rows() + i, i) = 1;
        f(p.f.size() + i) = prefix[i];
    }
    return count_system(p.a, p.b * Integer(t), e, f, workers);
}

/// Lattice points in the convex hull of the (already dilated) generators.
class HullCounter
{
    public:
        explicit HullCounter(const VPolytope& p) : p_(p) {}

        Integer count(std::vector<Rational> prefix, unsigned workers) const
        {
            const Eigen::Index dim = p_.ambient_dim;
            if (static_cast<Eigen::Index>(prefix.size()) == dim)
                return feasible(prefix) ? 1 : 0;
            auto range = next_range(prefix);
            if (!range)
                return 0;
            const auto [lo, hi] = *range;
            if (static_cast<Eigen::Index>(prefix.size()) + 1 == dim)
                return hi >= lo ? Integer(hi - lo + 1) : Integer(0);
            if (workers <= 1)
                return Integer(descend(prefix, lo, hi, 1));
            std::vector<std::future<long long>> parts;
            for (unsigned w = 0; w < workers; ++w)
                parts.push_back(std::async(std::launch::async, [&, w] {
                    std::vector<Rational> local = prefix;
                    return descend(local, lo + static_cast<long>(w), hi, static_cast<long>(workers));
                }));
            Integer total = 0;
            for (auto& part : parts)
                total += part.get();
            return total;
        }

    private:
        VPolytope p_;

        bool feasible(const std::vector<Rational>& prefix) const
        {
            VectorXq x(static_cast<Eigen::Index>(prefix.size()));
            for (std::size_t i = 0; i < prefix.size(); ++i)
                x(static_cast<Eigen::Index>(i)) = prefix[i];
            return contains_hull(p_, x);
        }

        std::optional<std::pair<long, long>> next_range(const std::vector<Rational>& prefix) const
        {
            std::vector<Integer> fixed;
            for (const auto& v : prefix)
                fixed.push_back(numerator(v));
            auto range = coord_range(p_, fixed, static_cast<Eigen::Index>(prefix.size()));
            if (!range)
                return std::nullopt;
            return std::make_pair(to_long(ceil_of(range->first)), to_long(floor_of(range->second)));
        }

        long long descend(std::vector<Rational>& prefix, long from, long to, long step) const
        {
            long long total = 0;
            const bool last = static_cast<Eigen::Index>(prefix.size()) + 2 == p_.ambient_dim;
            for (long v = from; v <= to; v += step)
            {
                prefix.emplace_back(v);
                auto range = next_range(prefix);
                if (range && range->second >= range->first)
                {
                    if (last)
                        total += range->second - range->first + 1;
                    else
                        total += descend(prefix, range->first, range->second, 1);
                }
                prefix.pop_back();
            }
            return total;
        }
};

Integer count_hull(const VPolytope& reduced, long t, std::span<const Integer> prefix, unsigned workers)
{
    if (t < 0)
        throw EngineError("dilation factor must be nonnegative");
    if (static_cast<Eigen::Index>(prefix.size()) > reduced.ambient_dim)
        throw EngineError("prefix longer than the dimension");
    std::vector<Rational> fixed(prefix.begin(), prefix.end());
    return HullCounter(dilate(reduced, t)).count(std::move(fixed), workers);
}

void check_polynomial(const RationalPolynomial& p, const std::vector<Integer>& counts, Eigen::Index dim)
{
    if (counts.front() != 1)
        throw EngineError("count at t = 0 is " + counts.front().str() + ", expected 1");
    if (p.degree() != dim)
        throw EngineError("interpolated degree " + std::to_string(p.degree()) + " differs from dimension " +
                          std::to_string(dim));
    if (p.leading() <= 0)
        throw EngineError("nonpositive leading coefficient");
}

RationalPolynomial interpolate_counts(const std::vector<Integer>& counts)
{
    std::vector<Rational> values(counts.begin(), counts.end());
    return interpolate_consecutive(values);
}

}  // namespace

HStarVector::HStarVector(std::vector<Integer> entries, int dim) : entries_(std::move(entries)), dim_(dim)
{
    if (dim_ < 0)
        throw EngineError("negative dimension");
    if (static_cast<int>(entries_.size()) > dim_ + 1)
    {
        for (std::size_t i = dim_ + 1; i < entries_.size(); ++i)
            if (entries_[i] != 0)
                throw EngineError("h* vector longer than dimension + 1");
    }
    entries_.resize(dim_ + 1, Integer(0));
    if (entries_[0] != 1)
        throw EngineError("h*_0 must equal 1");
    for (const auto& h : entries_)
        if (h < 0)
            throw EngineError("negative h* entry");
}

int HStarVector::degree() const
{
    for (int i = dim_; i >= 0; --i)
        if (entries_[i] != 0)
            return i;
    return 0;
}

Integer HStarVector::sum() const
{
    Integer s = 0;
    for (const auto& h : entries_)
        s += h;
    return s;
}

Integer count_points(const HPolytope& p, long t, const CountOptions& options)
{
    return count_slice_system(p, t, {}, options.workers);
}

Integer count_points(const VPolytope& p, long t, const CountOptions& options)
{
    return count_hull(irredundant(p), t, {}, options.workers);
}

Integer count_points(const Polytope& p, long t, const CountOptions& options)
{
    return std::visit([&](const auto& q) { return count_points(q, t, options); }, p);
}

Integer count_slice(const HPolytope& p, long t, std::span<const Integer> prefix)
{
    return count_slice_system(p, t, prefix, 1);
}

Integer count_slice(const VPolytope& p, long t, std::span<const Integer> prefix)
{
    return count_hull(irredundant(p), t, prefix, 1);
}

RationalPolynomial ehrhart_poly(const HPolytope& p, const CountOptions& options)
{
    const Eigen::Index dim = affine_dim(p);
    std::vector<Integer> counts;
    for (long t = 0; t <= dim; ++t)
        counts.push_back(count_points(p, t, options));
    RationalPolynomial poly = interpolate_counts(counts);
    check_polynomial(poly, counts, dim);
    return poly;
}

RationalPolynomial ehrhart_poly(const VPolytope& p, const CountOptions& options)
{
    VPolytope reduced = irredundant(p);
    for (Eigen::Index i = 0; i < reduced.points.size(); ++i)
        if (!is_integer(reduced.points.data()[i]))
            throw EngineError("non-integral vertex " + format_rational(reduced.points.data()[i]));
    const Eigen::Index dim = affine_dim(reduced);
    std::vector<Integer> counts;
    for (long t = 0; t <= dim; ++t)
        counts.push_back(count_hull(reduced, t, {}, options.workers));
    RationalPolynomial poly = interpolate_counts(counts);
    check_polynomial(poly, counts, dim);
    return poly;
}

RationalPolynomial ehrhart_poly(const Polytope& p, const CountOptions& options)
{
    return std::visit([&](const auto& q) { return ehrhart_poly(q, options); }, p);
}

Eigen::Index affine_dim(const Polytope& p)
{
    return std::visit([](const auto& q) { return affine_dim(q); }, p);
}

HStarVector hstar_from_ehrhart(const RationalPolynomial& p, int d)
{
    if (p.degree() != d)
        throw EngineError("polynomial degree " + std::to_string(p.degree()) + " differs from d = " +
                          std::to_string(d));
    std::vector<Integer> h;
    for (int j = 0; j <= d; ++j)
    {
        Rational acc = 0;
        for (int i = 0; i <= j; ++i)
        {
            Rational term = Rational(binomial(d + 1, i)) * p(j - i);
            acc += (i % 2 == 0) ? term : Rational(-term);
        }
        if (!is_integer(acc))
            throw EngineError("non-integral h* entry " + format_rational(acc));
        if (acc < 0)
            throw EngineError("negative h* entry " + format_rational(acc));
        h.push_back(numerator(acc));
    }
    return HStarVector(std::move(h), d);
}

RationalPolynomial ehrhart_from_hstar(const HStarVector& h)
{
    const int d = h.dim();
    RationalPolynomial out;
    for (int j = 0; j <= d; ++j)
        if (h[j] != 0)
            out += binom_poly(d - j, d) * Rational(h[j]);
    return out;
}

Integer count_interior(const HPolytope& p, long t)
{
    if (t < 0)
        throw EngineError("dilation factor must be nonnegative");
    std::vector<Eigen::Index> implicit = implicit_equalities(p);
    std::vector<bool> is_implicit(p.a.rows(), false);
    for (Eigen::Index i : implicit)
        is_implicit[i] = true;

    HPolytope strict(p.ambient_dim);
    for (Eigen::Index i = 0; i < p.e.rows(); ++i)
        strict.add_equality(p.e.row(i).transpose(), p.f(i) * t);
    for (Eigen::Index i = 0; i < p.a.rows(); ++i)
    {
        if (is_implicit[i])
            strict.add_equality(p.a.row(i).transpose(), p.b(i) * t);
        else
            strict.add_inequality(p.a.row(i).transpose(), p.b(i) * t - 1);
    }
    return count_points(strict, 1);
}

bool ehrhart_series_check(const Polytope& p, int order)
{
    const int d = static_cast<int>(affine_dim(p));
    if (order < d + 2)
        throw EngineError("series order must be at least d + 2");
    HStarVector h = hstar_from_ehrhart(ehrhart_poly(p), d);
    for (int t = 0; t <= order; ++t)
    {
        Integer series = 0;
        for (int j = 0; j <= std::min(t, d); ++j)
            series += h[j] * binomial(t - j + d, d);
        if (series != count_points(p, t))
            return false;
    }
    return true;
}

}  // namespace ehrhart
