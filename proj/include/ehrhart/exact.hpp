#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace ehrhart {

/// Arbitrary-precision integer and rational scalars. GMP keeps every
/// rational canonical (lowest terms, positive denominator) after each
/// operation.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Raised on malformed rational literals and invalid polynomial inputs.
class ExactError : public std::runtime_error
{
    public:
        explicit ExactError(const std::string& what) : std::runtime_error(what) {}
};

/// "p/q" or a bare integer; whitespace around the literal is ignored.
Rational parse_rational(std::string_view text);

/// Lowest-terms "p/q", or "p" when the denominator is one.
std::string format_rational(const Rational& value);

bool is_integer(const Rational& value);
Integer floor_of(const Rational& value);
Integer ceil_of(const Rational& value);
Integer binomial(long n, long k);
Integer factorial(long n);

/**
 * Dense univariate polynomial in t, stored in the monomial basis with the
 * coefficient of t^i at index i. Trailing zeros are trimmed so the zero
 * polynomial is the empty coefficient list.
 */
template <typename Scalar>
class Polynomial
{
    public:
        Polynomial() = default;

        explicit Polynomial(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients))
        {
            trim();
        }

        Polynomial(std::initializer_list<Scalar> coefficients) : coeffs_(coefficients)
        {
            trim();
        }

        static Polynomial constant(const Scalar& c)
        {
            return Polynomial(std::vector<Scalar>{c});
        }

        /// The polynomial a*t + b.
        static Polynomial linear(const Scalar& a, const Scalar& b)
        {
            return Polynomial(std::vector<Scalar>{b, a});
        }

        static Polynomial variable()
        {
            return linear(Scalar(1), Scalar(0));
        }

        /// -1 for the zero polynomial.
        int degree() const
        {
            return static_cast<int>(coeffs_.size()) - 1;
        }

        bool is_zero() const
        {
            return coeffs_.empty();
        }

        /// Coefficient of t^i; zero beyond the degree.
        Scalar operator[](std::size_t i) const
        {
            return i < coeffs_.size() ? coeffs_[i] : Scalar(0);
        }

        Scalar leading() const
        {
            return coeffs_.empty() ? Scalar(0) : coeffs_.back();
        }

        const std::vector<Scalar>& coefficients() const
        {
            return coeffs_;
        }

        template <typename Point>
        Scalar operator()(const Point& t) const
        {
            Scalar acc(0);
            for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
                acc = acc * Scalar(t) + *it;
            return acc;
        }

        Polynomial& operator+=(const Polynomial& other)
        {
            if (other.coeffs_.size() > coeffs_.size())
                coeffs_.resize(other.coeffs_.size(), Scalar(0));
            for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
                coeffs_[i] += other.coeffs_[i];
            trim();
            return *this;
        }

        Polynomial& operator-=(const Polynomial& other)
        {
            if (other.coeffs_.size() > coeffs_.size())
                coeffs_.resize(other.coeffs_.size(), Scalar(0));
            for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
                coeffs_[i] -= other.coeffs_[i];
            trim();
            return *this;
        }

        Polynomial& operator*=(const Scalar& c)
        {
            for (auto& x : coeffs_)
                x *= c;
            trim();
            return *this;
        }

        friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
        friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
        friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
        friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }

        friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
        {
            if (a.is_zero() || b.is_zero())
                return {};
            std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
            for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
                for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                    out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            return Polynomial(std::move(out));
        }

        Polynomial& operator*=(const Polynomial& other)
        {
            *this = *this * other;
            return *this;
        }

        friend bool operator==(const Polynomial& a, const Polynomial& b)
        {
            return a.coeffs_ == b.coeffs_;
        }

        /// p(k t): the coefficient of t^i is scaled by k^i.
        Polynomial dilate(const Scalar& k) const
        {
            std::vector<Scalar> out(coeffs_);
            Scalar power(1);
            for (auto& x : out)
            {
                x *= power;
                power *= k;
            }
            return Polynomial(std::move(out));
        }

        Polynomial pow(unsigned e) const
        {
            Polynomial result = constant(Scalar(1));
            for (unsigned i = 0; i < e; ++i)
                result *= *this;
            return result;
        }

    private:
        std::vector<Scalar> coeffs_;

        void trim()
        {
            while (!coeffs_.empty() && coeffs_.back() == Scalar(0))
                coeffs_.pop_back();
        }
};

using RationalPolynomial = Polynomial<Rational>;

/// C(t + shift, k) as a polynomial in t.
RationalPolynomial binom_poly(long shift, long k);

/// C(linear, k) = linear (linear - 1) ... (linear - k + 1) / k! for a
/// polynomial of degree at most one.
RationalPolynomial binom_of(const RationalPolynomial& linear, long k);

/// Multiset coefficient ((linear, k)) = C(linear + k - 1, k).
RationalPolynomial multiset_poly(const RationalPolynomial& linear, long k);

/// Lagrange interpolation through (node, value) pairs with distinct nodes.
RationalPolynomial interpolate(std::span<const std::pair<long, Rational>> points);

/// Interpolates values[0..n] at the nodes 0..n.
RationalPolynomial interpolate_consecutive(std::span<const Rational> values);

/// The polynomial P with P(t) = sum_{i=1}^{t+1} i^k for all integers t >= 0.
RationalPolynomial power_sum_poly(long k);

/// Parses expressions like "10/3t^4 + 7/6 t^3 - 1/3 t^2 + 17/6 t +1".
RationalPolynomial parse_polynomial(std::string_view text);

/// Coefficients low-to-high joined by `separator`, "0" for the zero polynomial.
std::string format_coefficients(const RationalPolynomial& p, std::string_view separator = ", ");

}  // namespace ehrhart
