#pragma once

#include <optional>
#include <variant>

#include "ehrhart/linalg.hpp"

namespace ehrhart {

/// Raised on malformed or inconsistent polytope data.
class PolytopeError : public std::runtime_error
{
    public:
        explicit PolytopeError(const std::string& what) : std::runtime_error(what) {}
};

/// {x in R^D : a x <= b, e x = f} with integer data. Rows of `a` and `e`
/// have length D.
struct HPolytope
{
    Eigen::Index ambient_dim = 0;
    MatrixXz a;
    VectorXz b;
    MatrixXz e;
    VectorXz f;

    HPolytope() = default;
    explicit HPolytope(Eigen::Index dim);

    void add_inequality(const VectorXz& row, const Integer& rhs);
    void add_equality(const VectorXz& row, const Integer& rhs);
    /// Convenience for small literal rows.
    void add_inequality(std::initializer_list<long> row, long rhs);
    void add_equality(std::initializer_list<long> row, long rhs);
};

/// Convex hull of the columns of `points`; redundant generators are allowed.
struct VPolytope
{
    Eigen::Index ambient_dim = 0;
    MatrixXq points;  // ambient_dim x (number of generators)

    VPolytope() = default;
    explicit VPolytope(const MatrixXq& generators) : ambient_dim(generators.rows()), points(generators) {}

    static VPolytope from_rows(std::initializer_list<std::initializer_list<long>> rows);
};

using Polytope = std::variant<HPolytope, VPolytope>;

/// Affine subspace spanned by the integer columns of `points`.
struct AffineSpan
{
    MatrixXz points;
};

HPolytope dilate(const HPolytope& p, long t);
VPolytope dilate(const VPolytope& p, long t);

bool contains(const HPolytope& p, const VectorXz& x);
/// Equalities hold and every inequality is strict.
bool contains_relint(const HPolytope& p, const VectorXz& x);
bool contains_hull(const VPolytope& p, const VectorXq& x);

/// Exact min and max of coordinate j over the slice of p whose first
/// prefix.size() coordinates equal prefix; nullopt when the slice is empty.
/// Throws when the slice is unbounded in coordinate j.
using Interval = std::pair<Rational, Rational>;
std::optional<Interval> coord_range(const HPolytope& p, std::span<const Integer> prefix, Eigen::Index j);
std::optional<Interval> coord_range(const VPolytope& p, std::span<const Integer> prefix, Eigen::Index j);

VPolytope minkowski_sum(const VPolytope& p, const VPolytope& q);
HPolytope product(const HPolytope& p, const HPolytope& q);
/// Keeps the first k coordinates of every generator.
VPolytope project_drop_last(const VPolytope& p, Eigen::Index k);

/// Generators that are not convex combinations of the others, duplicates removed.
VPolytope irredundant(const VPolytope& p);
/// True when every irredundant generator is a lattice point.
bool is_lattice_polytope(const VPolytope& p);

struct IntegralityResult
{
    bool integral = false;
    /// Index of the projected lattice in Z^l; 0 when the projection drops rank.
    Integer index;
    Eigen::Index dim = 0;
};

/// Whether the projection of W ∩ Z^d onto the first dim(W) coordinates is
/// all of Z^dim(W).
IntegralityResult affine_integral(const AffineSpan& w);

Eigen::Index affine_dim(const VPolytope& p);
/// Throws when the system is infeasible.
Eigen::Index affine_dim(const HPolytope& p);

/// Inequality rows that hold with equality on all of p.
std::vector<Eigen::Index> implicit_equalities(const HPolytope& p);

}  // namespace ehrhart
