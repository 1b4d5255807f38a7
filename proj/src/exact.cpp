#include "ehrhart/exact.hpp"

#include <cctype>
#include <sstream>

namespace ehrhart {

namespace {

std::string_view strip(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

bool valid_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Integer parse_integer(std::string_view s)
{
    if (!valid_integer_literal(s))
        throw ExactError("malformed integer literal '" + std::string(s) + "'");
    if (s.front() == '+')
        s.remove_prefix(1);
    return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view s = strip(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(s));
    Integer num = parse_integer(strip(s.substr(0, slash)));
    std::string_view den_text = strip(s.substr(slash + 1));
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
        throw ExactError("denominator must be an unsigned integer in '" + std::string(text) + "'");
    Integer den = parse_integer(den_text);
    if (den == 0)
        throw ExactError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string format_rational(const Rational& value)
{
    if (denominator(value) == 1)
        return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

bool is_integer(const Rational& value)
{
    return denominator(value) == 1;
}

Integer floor_of(const Rational& value)
{
    Integer q = numerator(value) / denominator(value);  // truncates toward zero
    if (value < 0 && q * denominator(value) != numerator(value))
        q -= 1;
    return q;
}

Integer ceil_of(const Rational& value)
{
    return -floor_of(-value);
}

Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer r = 1;
    for (long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

Integer factorial(long n)
{
    Integer r = 1;
    for (long i = 2; i <= n; ++i)
        r *= i;
    return r;
}

RationalPolynomial binom_of(const RationalPolynomial& linear, long k)
{
    if (linear.degree() > 1)
        throw ExactError("binomial polynomial requires an argument of degree at most one");
    if (k < 0)
        throw ExactError("binomial polynomial requires k >= 0");
    RationalPolynomial result = RationalPolynomial::constant(1);
    for (long i = 0; i < k; ++i)
        result *= linear - RationalPolynomial::constant(Rational(i));
    return result * Rational(1, factorial(k));
}

RationalPolynomial binom_poly(long shift, long k)
{
    return binom_of(RationalPolynomial::linear(1, shift), k);
}

RationalPolynomial multiset_poly(const RationalPolynomial& linear, long k)
{
    if (linear.degree() > 1)
        throw ExactError("multiset polynomial requires an argument of degree at most one");
    if (k < 0)
        throw ExactError("multiset polynomial requires k >= 0");
    RationalPolynomial result = RationalPolynomial::constant(1);
    for (long j = 0; j < k; ++j)
        result *= linear + RationalPolynomial::constant(Rational(j));
    return result * Rational(1, factorial(k));
}

RationalPolynomial interpolate(std::span<const std::pair<long, Rational>> points)
{
    if (points.empty())
        throw ExactError("interpolation needs at least one point");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw ExactError("duplicate interpolation node " + std::to_string(points[i].first));

    // Newton divided differences, then expansion into the monomial basis.
    std::vector<Rational> dd;
    dd.reserve(points.size());
    for (const auto& p : points)
        dd.push_back(p.second);
    for (std::size_t level = 1; level < points.size(); ++level)
        for (std::size_t i = points.size() - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / Rational(points[i].first - points[i - level].first);

    RationalPolynomial result;
    for (std::size_t i = points.size(); i-- > 0;)
    {
        result *= RationalPolynomial::linear(1, -points[i].first);
        result += RationalPolynomial::constant(dd[i]);
    }
    return result;
}

RationalPolynomial interpolate_consecutive(std::span<const Rational> values)
{
    std::vector<std::pair<long, Rational>> pts;
    pts.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        pts.emplace_back(static_cast<long>(i), values[i]);
    return interpolate(pts);
}

RationalPolynomial power_sum_poly(long k)
{
    if (k < 0)
        throw ExactError("power sum exponent must be nonnegative");
    std::vector<Rational> values;
    Integer partial = 0;
    for (long t = 0; t <= k + 1; ++t)
    {
        partial += boost::multiprecision::pow(Integer(t + 1), static_cast<unsigned>(k));
        values.emplace_back(partial);
    }
    return interpolate_consecutive(values);
}

RationalPolynomial parse_polynomial(std::string_view text)
{
    // Terms are split at top-level '+' / '-' signs; each term is an optional
    // rational coefficient followed by an optional t or t^k.
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    if (s.empty())
        throw ExactError("empty polynomial");

    std::vector<Rational> coeffs;
    std::size_t pos = 0;
    while (pos < s.size())
    {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-')
        {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-')
            ++end;
        std::string term = s.substr(pos, end - pos);
        pos = end;
        if (term.empty())
            throw ExactError("malformed polynomial '" + std::string(text) + "'");

        long power = 0;
        std::string coeff_text = term;
        auto tpos = term.find('t');
        if (tpos != std::string::npos)
        {
            coeff_text = term.substr(0, tpos);
            std::string rest = term.substr(tpos + 1);
            if (rest.empty())
                power = 1;
            else if (rest.size() > 1 && rest[0] == '^' && valid_integer_literal(rest.substr(1)))
                power = std::stol(rest.substr(1));
            else
                throw ExactError("malformed power in term '" + term + "'");
            if (!coeff_text.empty() && coeff_text.back() == '*')
                coeff_text.pop_back();
        }
        Rational c = coeff_text.empty() ? Rational(1) : parse_rational(coeff_text);
        if (static_cast<long>(coeffs.size()) <= power)
            coeffs.resize(power + 1, Rational(0));
        coeffs[power] += sign * c;
    }
    return RationalPolynomial(std::move(coeffs));
}

std::string format_coefficients(const RationalPolynomial& p, std::string_view separator)
{
    if (p.is_zero())
        return "0";
    std::ostringstream out;
    for (int i = 0; i <= p.degree(); ++i)
    {
        if (i)
            out << separator;
        out << format_rational(p[i]);
    }
    return out.str();
}

}  // namespace ehrhart
