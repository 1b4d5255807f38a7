#include "ehrhart/lp.hpp"

namespace ehrhart {

ExactSimplex::ExactSimplex(const MatrixXq& m, const VectorXq& r) : vars_(m.cols())
{
    const Eigen::Index rows = m.rows();
    const Eigen::Index total = vars_ + rows;
    tableau_ = MatrixXq::Zero(rows, total + 1);
    for (Eigen::Index i = 0; i < rows; ++i)
    {
        const int sign = r(i) < 0 ? -1 : 1;
        for (Eigen::Index j = 0; j < vars_; ++j)
            if (m(i, j) != 0)
                tableau_(i, j) = sign * m(i, j);
        tableau_(i, vars_ + i) = 1;
        tableau_(i, total) = sign * r(i);
        basis_.push_back(vars_ + i);
    }

    // Phase one: minimize the sum of the artificial variables.
    VectorXq objective = VectorXq::Zero(total + 1);
    for (Eigen::Index i = 0; i < rows; ++i)
    {
        for (Eigen::Index j = 0; j < vars_; ++j)
            objective(j) -= tableau_(i, j);
        objective(total) -= tableau_(i, total);
    }
    Rational value;
    optimize(objective, value, vars_);
    if (value != 0)
        return;
    feasible_ = true;

    // Drive the remaining artificials out of the basis; rows where that is
    // impossible are linearly dependent and get dropped.
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < rows; ++i)
    {
        if (basis_[i] < vars_)
        {
            keep.push_back(i);
            continue;
        }
        Eigen::Index col = -1;
        for (Eigen::Index j = 0; j < vars_; ++j)
            if (tableau_(i, j) != 0)
            {
                col = j;
                break;
            }
        if (col >= 0)
        {
            pivot(i, col);
            keep.push_back(i);
        }
    }
    MatrixXq reduced(static_cast<Eigen::Index>(keep.size()), vars_ + 1);
    std::vector<Eigen::Index> basis;
    for (std::size_t k = 0; k < keep.size(); ++k)
    {
        reduced.row(static_cast<Eigen::Index>(k)).head(vars_) = tableau_.row(keep[k]).head(vars_);
        reduced(static_cast<Eigen::Index>(k), vars_) = tableau_(keep[k], total);
        basis.push_back(basis_[keep[k]]);
    }
    tableau_ = std::move(reduced);
    basis_ = std::move(basis);
}

void ExactSimplex::pivot(Eigen::Index row, Eigen::Index col)
{
    const Rational inv = Rational(1) / tableau_(row, col);
    for (Eigen::Index j = 0; j < tableau_.cols(); ++j)
        if (tableau_(row, j) != 0)
            tableau_(row, j) *= inv;
    for (Eigen::Index i = 0; i < tableau_.rows(); ++i)
    {
        if (i == row || tableau_(i, col) == 0)
            continue;
        const Rational f = tableau_(i, col);
        for (Eigen::Index j = 0; j < tableau_.cols(); ++j)
            if (tableau_(row, j) != 0)
                tableau_(i, j) -= f * tableau_(row, j);
    }
    basis_[row] = col;
}

bool ExactSimplex::optimize(VectorXq& reduced, Rational& value, Eigen::Index columns)
{
    const Eigen::Index rhs = tableau_.cols() - 1;
    while (true)
    {
        Eigen::Index enter = -1;
        for (Eigen::Index j = 0; j < columns; ++j)
            if (reduced(j) < 0)
            {
                enter = j;
                break;
            }
        if (enter < 0)
        {
            value = -reduced(rhs);
            return true;
        }
        Eigen::Index leave = -1;
        Rational best;
        for (Eigen::Index i = 0; i < tableau_.rows(); ++i)
        {
            if (tableau_(i, enter) <= 0)
                continue;
            Rational ratio = tableau_(i, rhs) / tableau_(i, enter);
            if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave]))
            {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0)
            return false;
        pivot(leave, enter);
        const Rational f = reduced(enter);
        for (Eigen::Index j = 0; j < reduced.size(); ++j)
            if (tableau_(leave, j) != 0)
                reduced(j) -= f * tableau_(leave, j);
    }
}

std::optional<Rational> ExactSimplex::minimize(const VectorXq& c)
{
    if (!feasible_)
        throw std::logic_error("minimize called on an infeasible program");
    const Eigen::Index rhs = tableau_.cols() - 1;
    VectorXq reduced = VectorXq::Zero(rhs + 1);
    reduced.head(vars_) = c;
    for (Eigen::Index i = 0; i < tableau_.rows(); ++i)
    {
        const Rational cb = c(basis_[i]);
        if (cb == 0)
            continue;
        for (Eigen::Index j = 0; j <= rhs; ++j)
            if (tableau_(i, j) != 0)
                reduced(j) -= cb * tableau_(i, j);
    }
    Rational value;
    if (!optimize(reduced, value, vars_))
        return std::nullopt;
    return value;
}

VectorXq ExactSimplex::solution() const
{
    VectorXq y = VectorXq::Zero(vars_);
    const Eigen::Index rhs = tableau_.cols() - 1;
    for (Eigen::Index i = 0; i < tableau_.rows(); ++i)
        if (basis_[i] < vars_)
            y(basis_[i]) = tableau_(i, rhs);
    return y;
}

MatrixXq InequalitySystemLP::build_matrix(const MatrixXq& a, const MatrixXq& e)
{
    const Eigen::Index n = std::max(a.cols(), e.cols());
    const Eigen::Index k = a.rows();
    MatrixXq m = MatrixXq::Zero(k + e.rows(), 2 * n + k);
    if (k > 0)
    {
        m.block(0, 0, k, n) = a;
        m.block(0, n, k, n) = -a;
        m.block(0, 2 * n, k, k) = MatrixXq::Identity(k, k);
    }
    if (e.rows() > 0)
    {
        m.block(k, 0, e.rows(), n) = e;
        m.block(k, n, e.rows(), n) = -e;
    }
    return m;
}

VectorXq InequalitySystemLP::build_rhs(const VectorXq& b, const VectorXq& f)
{
    VectorXq r(b.size() + f.size());
    r << b, f;
    return r;
}

InequalitySystemLP::InequalitySystemLP(const MatrixXq& a, const VectorXq& b, const MatrixXq& e, const VectorXq& f)
    : dim_(std::max(a.cols(), e.cols())), slacks_(a.rows()), simplex_(build_matrix(a, e), build_rhs(b, f))
{
}

LinearRange InequalitySystemLP::range(const VectorXq& objective)
{
    LinearRange out;
    if (!simplex_.feasible())
        return out;
    out.feasible = true;
    VectorXq c = VectorXq::Zero(2 * dim_ + slacks_);
    c.head(dim_) = objective;
    c.segment(dim_, dim_) = -objective;
    out.lo = simplex_.minimize(c);
    if (auto neg = simplex_.minimize(-c))
        out.hi = -*neg;
    return out;
}

}  // namespace ehrhart
