#pragma once

#include <complex>
#include <optional>

#include "ehrhart/engine.hpp"

namespace ehrhart {

/// '+', '0' or '-' for each coefficient of t^1 .. t^(d-2).
std::string sign_pattern(const RationalPolynomial& p, int d);
bool ehrhart_positive(const RationalPolynomial& p);

/// -c_(d-1) / c_d; throws on polynomials of degree < 1.
Rational sum_of_roots(const RationalPolynomial& p);

struct GorensteinVerdict
{
    bool gorenstein = false;
    std::optional<long> codegree;
};

/// Root-sum test: gorenstein when sum_of_roots * (-2/d) is a positive integer.
GorensteinVerdict gorenstein_test(const RationalPolynomial& p, int d);

/// h_i = h_(deg - i) on the nonzero prefix.
bool hstar_palindromic(const HStarVector& h);
bool hstar_unimodal(const HStarVector& h);
int codegree(const HStarVector& h);

/// Complex roots of sum c_i z^i by simultaneous (Aberth) iteration in 50-digit
/// arithmetic; nullopt unless every root has monic residual below 1e-12.
std::optional<std::vector<std::complex<double>>> polynomial_roots(const std::vector<Rational>& coeffs);

/// nullopt when root finding fails to converge.
std::optional<bool> hstar_unit_circle_rooted(const HStarVector& h, double tol = 1e-9);
/// Every root has real part below -tol.
std::optional<bool> nrpr_check(const RationalPolynomial& p, double tol = 1e-9);

struct AnalysisReport
{
    int dim = 0;
    std::string sign_pattern;
    bool ehrhart_positive = false;
    Rational sum_of_roots;
    /// From h*: palindromic with codegree 1.
    bool reflexive = false;
    /// From h*: palindromic, with its codegree.
    bool gorenstein = false;
    int codegree = 0;
    bool hstar_palindromic = false;
    bool hstar_unimodal = false;
    std::optional<bool> unit_circle_rooted;
    std::optional<bool> nrpr;
    /// The root-sum test alone, and whether it matches the h* verdict.
    GorensteinVerdict vieta;
    bool vieta_agrees = false;
};

/// Requires deg(p) = h.dim(). Never throws on disagreement between the
/// two Gorenstein tests; see vieta_agrees.
AnalysisReport analyze(const RationalPolynomial& p, const HStarVector& h);

}  // namespace ehrhart
