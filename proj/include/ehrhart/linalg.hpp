#pragma once

#include <functional>
#include <optional>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include "ehrhart/exact.hpp"

namespace ehrhart {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixXq = Matrix<Rational>;
using VectorXq = Vector<Rational>;
using MatrixXz = Matrix<Integer>;
using VectorXz = Vector<Integer>;
using MatrixXl = Matrix<long>;
using VectorXl = Vector<long>;

/// Reduced row echelon form over an exact field; returns the pivot columns.
template <typename Scalar>
std::vector<Eigen::Index> row_reduce(Matrix<Scalar>& m)
{
    std::vector<Eigen::Index> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col)
    {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = row; r < m.rows(); ++r)
            if (m(r, col) != 0)
            {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        m.row(row).swap(m.row(pivot));
        Scalar inv = Scalar(1) / m(row, col);
        for (Eigen::Index c = col; c < m.cols(); ++c)
            m(row, c) *= inv;
        for (Eigen::Index r = 0; r < m.rows(); ++r)
        {
            if (r == row || m(r, col) == 0)
                continue;
            Scalar f = m(r, col);
            for (Eigen::Index c = col; c < m.cols(); ++c)
                m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m)
{
    MatrixXq work = m.template cast<Rational>();
    return static_cast<Eigen::Index>(row_reduce(work).size());
}

/// Determinant of a square integer matrix by fraction-free elimination.
Integer determinant(const MatrixXz& m);

/// m * transform = reduced, with transform unimodular and reduced in column
/// echelon form: the k-th pivot sits in row pivot_rows[k], column k, and
/// columns past the rank are zero.
struct ColumnEchelon
{
    MatrixXz reduced;
    MatrixXz transform;
    std::vector<Eigen::Index> pivot_rows;
};

ColumnEchelon column_echelon(const MatrixXz& m);

/// Some x in Z^n with m x = rhs, if one exists.
std::optional<VectorXz> integer_solution(const MatrixXz& m, const VectorXz& rhs);

/// Columns form a lattice basis of {x in Z^n : m x = 0}. The basis is
/// primitive: it extends to a unimodular basis of Z^n.
MatrixXz integer_kernel(const MatrixXz& m);

/// Basis of span_R(columns) intersected with Z^n (the saturation of the
/// lattice generated by the columns).
MatrixXz saturate(const MatrixXz& columns);

/// gcd of all k x k minors of an n x k matrix; zero when rank < k.
Integer gcd_of_maximal_minors(const MatrixXz& columns);

}  // namespace ehrhart
