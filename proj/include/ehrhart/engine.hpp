#pragma once

#include "ehrhart/polytope.hpp"

namespace ehrhart {

/// Raised when counting or interpolation contradicts integrality.
class EngineError : public std::runtime_error
{
    public:
        explicit EngineError(const std::string& what) : std::runtime_error(what) {}
};

/// (h*_0, ..., h*_d) with h*_0 = 1 and nonnegative integer entries.
class HStarVector
{
    public:
        HStarVector(std::vector<Integer> entries, int dim);

        int dim() const { return dim_; }
        const std::vector<Integer>& entries() const { return entries_; }
        const Integer& operator[](std::size_t i) const { return entries_[i]; }
        /// Largest index with a nonzero entry.
        int degree() const;
        int codegree() const { return dim_ + 1 - degree(); }
        Integer sum() const;

        friend bool operator==(const HStarVector& a, const HStarVector& b) = default;

    private:
        std::vector<Integer> entries_;
        int dim_;
};

struct CountOptions
{
    unsigned workers = 1;
};

/// |tP ∩ Z^D| by depth-first enumeration with per-coordinate pruning.
Integer count_points(const HPolytope& p, long t, const CountOptions& options = {});
Integer count_points(const VPolytope& p, long t, const CountOptions& options = {});
Integer count_points(const Polytope& p, long t, const CountOptions& options = {});

/// Lattice points of tP whose first prefix.size() coordinates equal prefix
/// (the prefix is given at the dilated scale).
Integer count_slice(const HPolytope& p, long t, std::span<const Integer> prefix);
Integer count_slice(const VPolytope& p, long t, std::span<const Integer> prefix);

/// Interpolates counts at t = 0..dim(P). V-form input must have lattice
/// vertices; H-form integrality is trusted.
RationalPolynomial ehrhart_poly(const HPolytope& p, const CountOptions& options = {});
RationalPolynomial ehrhart_poly(const VPolytope& p, const CountOptions& options = {});
RationalPolynomial ehrhart_poly(const Polytope& p, const CountOptions& options = {});

Eigen::Index affine_dim(const Polytope& p);

HStarVector hstar_from_ehrhart(const RationalPolynomial& p, int d);
RationalPolynomial ehrhart_from_hstar(const HStarVector& h);

/// Lattice points in the relative interior of tP.
Integer count_interior(const HPolytope& p, long t = 1);

/// Expands h*(z)/(1-z)^(d+1) to order `order` and compares with direct counts.
bool ehrhart_series_check(const Polytope& p, int order);

}  // namespace ehrhart
