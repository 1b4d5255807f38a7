#include "ehrhart/linalg.hpp"

#include <numeric>

namespace ehrhart {

Integer determinant(const MatrixXz& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    const Eigen::Index n = m.rows();
    if (n == 0)
        return 1;
    MatrixXz a = m;
    Integer prev = 1;
    int sign = 1;
    for (Eigen::Index k = 0; k < n - 1; ++k)
    {
        if (a(k, k) == 0)
        {
            Eigen::Index swap = -1;
            for (Eigen::Index r = k + 1; r < n; ++r)
                if (a(r, k) != 0)
                {
                    swap = r;
                    break;
                }
            if (swap < 0)
                return 0;
            a.row(k).swap(a.row(swap));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i)
            for (Eigen::Index j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

ColumnEchelon column_echelon(const MatrixXz& m)
{
    const Eigen::Index rows = m.rows();
    const Eigen::Index n = m.cols();
    ColumnEchelon out{m, MatrixXz::Identity(n, n), {}};
    MatrixXz& a = out.reduced;
    MatrixXz& u = out.transform;

    Eigen::Index pivot_col = 0;
    for (Eigen::Index r = 0; r < rows && pivot_col < n; ++r)
    {
        // Euclid across columns pivot_col..n-1 until one nonzero remains in row r.
        while (true)
        {
            Eigen::Index best = -1;
            for (Eigen::Index c = pivot_col; c < n; ++c)
                if (a(r, c) != 0 && (best < 0 || abs(a(r, c)) < abs(a(r, best))))
                    best = c;
            if (best < 0)
                break;
            a.col(pivot_col).swap(a.col(best));
            u.col(pivot_col).swap(u.col(best));
            bool done = true;
            for (Eigen::Index c = pivot_col + 1; c < n; ++c)
            {
                if (a(r, c) == 0)
                    continue;
                Integer q = a(r, c) / a(r, pivot_col);
                a.col(c) -= q * a.col(pivot_col);
                u.col(c) -= q * u.col(pivot_col);
                if (a(r, c) != 0)
                    done = false;
            }
            if (done)
            {
                out.pivot_rows.push_back(r);
                ++pivot_col;
                break;
            }
        }
    }
    return out;
}

MatrixXz integer_kernel(const MatrixXz& m)
{
    ColumnEchelon e = column_echelon(m);
    const Eigen::Index rank = static_cast<Eigen::Index>(e.pivot_rows.size());
    return e.transform.rightCols(m.cols() - rank);
}

std::optional<VectorXz> integer_solution(const MatrixXz& m, const VectorXz& rhs)
{
    ColumnEchelon e = column_echelon(m);
    const Eigen::Index rank = static_cast<Eigen::Index>(e.pivot_rows.size());
    VectorXz z = VectorXz::Zero(m.cols());
    for (Eigen::Index k = 0; k < rank; ++k)
    {
        const Eigen::Index r = e.pivot_rows[k];
        Integer residual = rhs(r);
        for (Eigen::Index c = 0; c < k; ++c)
            residual -= e.reduced(r, c) * z(c);
        if (residual % e.reduced(r, k) != 0)
            return std::nullopt;
        z(k) = residual / e.reduced(r, k);
    }
    VectorXz x = e.transform * z;
    if (m * x != rhs)
        return std::nullopt;
    return x;
}

MatrixXz saturate(const MatrixXz& columns)
{
    // span(columns) ∩ Z^n is the integer kernel of a basis of its orthogonal complement.
    MatrixXz complement = integer_kernel(columns.transpose());
    if (complement.cols() == 0)
        return MatrixXz::Identity(columns.rows(), columns.rows());
    return integer_kernel(complement.transpose());
}

namespace {

void for_each_subset(Eigen::Index n, Eigen::Index k, std::vector<Eigen::Index>& current, Eigen::Index start,
                     const std::function<void(const std::vector<Eigen::Index>&)>& f)
{
    if (static_cast<Eigen::Index>(current.size()) == k)
    {
        f(current);
        return;
    }
    for (Eigen::Index i = start; i < n; ++i)
    {
        current.push_back(i);
        for_each_subset(n, k, current, i + 1, f);
        current.pop_back();
    }
}

}  // namespace

Integer gcd_of_maximal_minors(const MatrixXz& columns)
{
    const Eigen::Index k = columns.cols();
    if (k == 0)
        return 1;
    Integer g = 0;
    std::vector<Eigen::Index> rows;
    for_each_subset(columns.rows(), k, rows, 0, [&](const std::vector<Eigen::Index>& idx) {
        MatrixXz minor(k, k);
        for (Eigen::Index i = 0; i < k; ++i)
            minor.row(i) = columns.row(idx[i]);
        g = gcd(g, abs(determinant(minor)));
    });
    return g;
}

}  // namespace ehrhart
