#pragma once

#include <optional>

#include "ehrhart/linalg.hpp"

namespace ehrhart {

/**
 * Exact two-phase primal simplex over the rationals for problems in
 * standard form
 *
 *     minimize c.y  subject to  M y = r,  y >= 0.
 *
 * Construction runs phase one. Each call to minimize() continues from the
 * last optimal basis, so a sequence of objectives over the same feasible
 * region is cheap. Bland's rule guarantees termination.
 */
class ExactSimplex
{
    public:
        ExactSimplex(const MatrixXq& m, const VectorXq& r);

        bool feasible() const { return feasible_; }

        /// Optimal value, or nullopt when the objective is unbounded below.
        std::optional<Rational> minimize(const VectorXq& c);

        /// Primal solution of the last solve (or the phase-one point).
        VectorXq solution() const;

    private:
        Eigen::Index vars_ = 0;
        MatrixXq tableau_;  // rows x (vars_ + 1); last column is the right-hand side
        std::vector<Eigen::Index> basis_;
        bool feasible_ = false;

        void pivot(Eigen::Index row, Eigen::Index col);
        bool optimize(VectorXq& reduced, Rational& value, Eigen::Index columns);
};

/// Bounds of a linear objective over {x : a x <= b, e x = f}. Each side is
/// nullopt when unbounded in that direction; both empty sets are reported
/// through `feasible`.
struct LinearRange
{
    bool feasible = false;
    std::optional<Rational> lo;
    std::optional<Rational> hi;
};

/// Reusable solver for objectives over a fixed system a x <= b, e x = f
/// with free variables.
class InequalitySystemLP
{
    public:
        InequalitySystemLP(const MatrixXq& a, const VectorXq& b, const MatrixXq& e, const VectorXq& f);

        bool feasible() const { return simplex_.feasible(); }
        LinearRange range(const VectorXq& objective);

    private:
        Eigen::Index dim_;
        Eigen::Index slacks_;
        ExactSimplex simplex_;

        static MatrixXq build_matrix(const MatrixXq& a, const MatrixXq& e);
        static VectorXq build_rhs(const VectorXq& b, const VectorXq& f);
};

}  // namespace ehrhart
