#include "ehrhart/positivity.hpp"

#include <boost/multiprecision/cpp_complex.hpp>

namespace ehrhart {

namespace {

using Complex = boost::multiprecision::cpp_complex_50;
using Real = boost::multiprecision::cpp_bin_float_50;

Complex to_complex(const Rational& r)
{
    Real num(numerator(r).str()), den(denominator(r).str());
    return Complex(num / den);
}

Complex horner(const std::vector<Complex>& c, const Complex& z)
{
    Complex acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

}  // namespace

std::string sign_pattern(const RationalPolynomial& p, int d)
{
    std::string out;
    for (int i = 1; i <= d - 2; ++i)
    {
        const Rational c = p[i];
        out += c > 0 ? '+' : c < 0 ? '-' : '0';
    }
    return out;
}

bool ehrhart_positive(const RationalPolynomial& p)
{
    for (const auto& c : p.coefficients())
        if (c <= 0)
            return false;
    return !p.is_zero();
}

Rational sum_of_roots(const RationalPolynomial& p)
{
    const int d = p.degree();
    if (d < 1)
        throw EngineError("sum of roots needs degree at least one");
    return -p[d - 1] / p[d];
}

GorensteinVerdict gorenstein_test(const RationalPolynomial& p, int d)
{
    if (p.degree() != d)
        throw EngineError("polynomial degree differs from the dimension");
    if (d < 1)
        return {};
    const Rational s = sum_of_roots(p) * Rational(-2, d);
    if (!is_integer(s) || s <= 0)
        return {};
    return {true, numerator(s).convert_to<long>()};
}

bool hstar_palindromic(const HStarVector& h)
{
    const int deg = h.degree();
    for (int i = 0; i <= deg; ++i)
        if (h[i] != h[deg - i])
            return false;
    return true;
}

bool hstar_unimodal(const HStarVector& h)
{
    const auto& e = h.entries();
    std::size_t i = 1;
    while (i < e.size() && e[i] >= e[i - 1])
        ++i;
    while (i < e.size() && e[i] <= e[i - 1])
        ++i;
    return i == e.size();
}

int codegree(const HStarVector& h)
{
    return h.codegree();
}

std::optional<std::vector<std::complex<double>>> polynomial_roots(const std::vector<Rational>& coeffs)
{
    std::vector<Rational> trimmed(coeffs);
    while (!trimmed.empty() && trimmed.back() == 0)
        trimmed.pop_back();
    if (trimmed.empty())
        return std::nullopt;
    const std::size_t n = trimmed.size() - 1;
    if (n == 0)
        return std::vector<std::complex<double>>{};

    // monic copy and its derivative
    std::vector<Complex> c(n + 1), dc(n);
    const Complex lead = to_complex(trimmed.back());
    for (std::size_t i = 0; i <= n; ++i)
        c[i] = to_complex(trimmed[i]) / lead;
    for (std::size_t i = 1; i <= n; ++i)
        dc[i - 1] = c[i] * Complex(static_cast<double>(i));

    // Cauchy bound for the starting circle
    Real radius = 0;
    for (std::size_t i = 0; i < n; ++i)
        radius = std::max(radius, Real(abs(c[i])));
    radius = 1 + radius;
    std::vector<Complex> z(n);
    for (std::size_t k = 0; k < n; ++k)
    {
        const double angle = 2 * 3.14159265358979323846 * (static_cast<double>(k) + 0.25) / static_cast<double>(n) + 0.4;
        z[k] = Complex(radius * std::cos(angle) / 2, radius * std::sin(angle) / 2);
    }

    const Real step_tol("1e-45");
    for (int iter = 0; iter < 2000; ++iter)
    {
        Real biggest = 0;
        for (std::size_t k = 0; k < n; ++k)
        {
            const Complex pz = horner(c, z[k]);
            if (pz == Complex(0))
                continue;
            const Complex ratio = pz / horner(dc, z[k]);
            Complex repulsion(0);
            for (std::size_t j = 0; j < n; ++j)
                if (j != k)
                    repulsion += Complex(1) / (z[k] - z[j]);
            const Complex w = ratio / (Complex(1) - ratio * repulsion);
            z[k] -= w;
            biggest = std::max(biggest, Real(abs(w)));
        }
        if (biggest < step_tol)
            break;
    }

    std::vector<std::complex<double>> out;
    for (const auto& root : z)
    {
        if (abs(horner(c, root)) >= Real("1e-12"))
            return std::nullopt;
        out.emplace_back(root.real().convert_to<double>(), root.imag().convert_to<double>());
    }
    return out;
}

std::optional<bool> hstar_unit_circle_rooted(const HStarVector& h, double tol)
{
    std::vector<Rational> coeffs(h.entries().begin(), h.entries().end());
    auto roots = polynomial_roots(coeffs);
    if (!roots)
        return std::nullopt;
    for (const auto& r : *roots)
        if (std::abs(std::abs(r) - 1.0) >= tol)
            return false;
    return true;
}

std::optional<bool> nrpr_check(const RationalPolynomial& p, double tol)
{
    if (p.degree() < 1)
        throw EngineError("root check needs degree at least one");
    auto roots = polynomial_roots(p.coefficients());
    if (!roots)
        return std::nullopt;
    for (const auto& r : *roots)
        if (r.real() >= -tol)
            return false;
    return true;
}

AnalysisReport analyze(const RationalPolynomial& p, const HStarVector& h)
{
    const int d = h.dim();
    if (p.degree() != d)
        throw EngineError("polynomial degree differs from the h* dimension");
    AnalysisReport r;
    r.dim = d;
    r.sign_pattern = sign_pattern(p, d);
    r.ehrhart_positive = ehrhart_positive(p);
    r.hstar_palindromic = hstar_palindromic(h);
    r.hstar_unimodal = hstar_unimodal(h);
    r.codegree = h.codegree();
    r.gorenstein = r.hstar_palindromic;
    r.reflexive = r.hstar_palindromic && r.codegree == 1;
    r.unit_circle_rooted = hstar_unit_circle_rooted(h);
    if (d >= 1)
    {
        r.sum_of_roots = sum_of_roots(p);
        r.nrpr = nrpr_check(p);
        r.vieta = gorenstein_test(p, d);
        r.vieta_agrees = r.vieta.gorenstein == r.gorenstein && (!r.gorenstein || *r.vieta.codegree == r.codegree);
    }
    else
    {
        // a point: h* = (1) is palindromic with codegree 1
        r.vieta = {true, 1};
        r.vieta_agrees = true;
    }
    return r;
}

}  // namespace ehrhart
