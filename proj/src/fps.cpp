#include "relosc/fps.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace relosc {

namespace {

using boost::multiprecision::cpp_int;

void require_same_variable(const FormalSeries& a, const FormalSeries& b)
{
    if (a.variable() != b.variable())
        throw VariableMismatch("series variables differ: '" + a.variable() + "' vs '" +
                               b.variable() + "'");
}

bool exact_integer_sqrt(const cpp_int& n, cpp_int& root)
{
    if (n < 0)
        return false;
    root = boost::multiprecision::sqrt(n);
    return root * root == n;
}

}  // namespace

std::string to_string(const Rational& value)
{
    const cpp_int num = boost::multiprecision::numerator(value);
    const cpp_int den = boost::multiprecision::denominator(value);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text)
{
    const auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rational(cpp_int(text));
    return Rational(cpp_int(text.substr(0, slash)), cpp_int(text.substr(slash + 1)));
}

double to_double(const Rational& value)
{
    return value.convert_to<double>();
}

Rational binomial(const Rational& alpha, int n)
{
    if (n < 0)
        throw std::domain_error("binomial: negative index");
    Rational c = 1;
    for (int i = 0; i < n; ++i)
        c = c * (alpha - i) / (i + 1);
    return c;
}

Rational binomial_half(int n)
{
    return binomial(Rational(1, 2), n);
}

FormalSeries::FormalSeries(std::string variable, std::vector<Rational> coefficients)
    : variable_(std::move(variable)), coeffs_(std::move(coefficients))
{
    if (coeffs_.empty())
        throw std::invalid_argument("FormalSeries needs at least one coefficient");
}

FormalSeries FormalSeries::zero(std::string variable, int order)
{
    return constant(std::move(variable), 0, order);
}

FormalSeries FormalSeries::constant(std::string variable, const Rational& value, int order)
{
    return monomial(std::move(variable), value, 0, order);
}

FormalSeries FormalSeries::monomial(std::string variable, const Rational& value, int power,
                                    int order)
{
    if (order < 0 || power < 0)
        throw std::invalid_argument("FormalSeries: negative order or power");
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    if (power <= order)
        c[static_cast<std::size_t>(power)] = value;
    return FormalSeries(std::move(variable), std::move(c));
}

FormalSeries FormalSeries::truncated(int order) const
{
    if (order < 0 || order > this->order())
        throw std::invalid_argument("truncated: order out of range");
    return FormalSeries(variable_, {coeffs_.begin(), coeffs_.begin() + order + 1});
}

FormalSeries FormalSeries::renamed(std::string variable) const
{
    return FormalSeries(std::move(variable), coeffs_);
}

FormalSeries add(const FormalSeries& a, const FormalSeries& b)
{
    require_same_variable(a, b);
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        c[i] = a[i] + b[i];
    return FormalSeries(a.variable(), std::move(c));
}

FormalSeries sub(const FormalSeries& a, const FormalSeries& b)
{
    return add(a, scale(b, -1));
}

FormalSeries scale(const FormalSeries& a, const Rational& factor)
{
    std::vector<Rational> c(a.coefficients().begin(), a.coefficients().end());
    for (auto& v : c)
        v *= factor;
    return FormalSeries(a.variable(), std::move(c));
}

FormalSeries mul(const FormalSeries& a, const FormalSeries& b)
{
    require_same_variable(a, b);
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; i + j <= n; ++j)
            c[i + j] += a[i] * b[j];
    }
    return FormalSeries(a.variable(), std::move(c));
}

FormalSeries power(const FormalSeries& a, int n)
{
    if (n < 0)
        throw std::domain_error("power: negative exponent");
    FormalSeries result = FormalSeries::constant(a.variable(), 1, a.order());
    FormalSeries base = a;
    while (n > 0) {
        if (n & 1)
            result = mul(result, base);
        n >>= 1;
        if (n > 0)
            base = mul(base, base);
    }
    return result;
}

FormalSeries sqrt(const FormalSeries& a)
{
    if (a[0] <= 0)
        throw std::domain_error("sqrt: constant term must be positive");
    cpp_int num_root, den_root;
    if (!exact_integer_sqrt(boost::multiprecision::numerator(a[0]), num_root) ||
        !exact_integer_sqrt(boost::multiprecision::denominator(a[0]), den_root))
        throw std::domain_error("sqrt: constant term " + to_string(a[0]) +
                                " is not a rational square");

    const int n = a.order();
    std::vector<Rational> s(static_cast<std::size_t>(n) + 1);
    s[0] = Rational(num_root, den_root);
    const Rational two_s0 = 2 * s[0];
    for (int k = 1; k <= n; ++k) {
        Rational acc = a[k];
        for (int i = 1; i < k; ++i)
            acc -= s[i] * s[k - i];
        s[k] = acc / two_s0;
    }
    return FormalSeries(a.variable(), std::move(s));
}

FormalSeries reciprocal(const FormalSeries& a)
{
    if (a[0] == 0)
        throw std::domain_error("reciprocal: zero constant term");
    const int n = a.order();
    std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
    b[0] = 1 / a[0];
    for (int k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (int i = 1; i <= k; ++i)
            acc += a[i] * b[k - i];
        b[k] = -acc / a[0];
    }
    return FormalSeries(a.variable(), std::move(b));
}

FormalSeries compose(const FormalSeries& outer, const FormalSeries& inner)
{
    if (inner[0] != 0)
        throw std::domain_error("compose: inner series must have zero constant term");
    const int n = std::min(outer.order(), inner.order());
    const FormalSeries g = inner.truncated(n);
    FormalSeries result = FormalSeries::constant(g.variable(), outer[n], n);
    for (int i = n - 1; i >= 0; --i)
        result = add(mul(result, g), FormalSeries::constant(g.variable(), outer[i], n));
    return result;
}

FormalSeries differentiate(const FormalSeries& a)
{
    if (a.order() == 0)
        return FormalSeries::zero(a.variable(), 0);
    std::vector<Rational> d(static_cast<std::size_t>(a.order()));
    for (int i = 1; i <= a.order(); ++i)
        d[i - 1] = a[i] * i;
    return FormalSeries(a.variable(), std::move(d));
}

SeriesValue eval(const FormalSeries& a, double x)
{
    const int n = a.order();
    double v = 0.0;
    for (int i = n; i >= 0; --i)
        v = v * x + to_double(a[i]);
    return {v, std::abs(to_double(a[n]) * std::pow(x, n))};
}

FormalSeries laurent_coefficient(const FormalSeries& descending, const FormalSeries& ascending,
                                 int shift, std::string ratio_variable)
{
    if (shift < 0 || shift > descending.order())
        throw std::invalid_argument("laurent_coefficient: shift out of range");
    const int n = std::min(descending.order() - shift, ascending.order());
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int b = 0; b <= n; ++b)
        c[b] = descending[b + shift] * ascending[b];
    return FormalSeries(std::move(ratio_variable), std::move(c));
}

}  // namespace relosc
