#pragma once

// Truncated formal power series with exact rational coefficients.
//
// A FormalSeries holds c_0 ... c_N for one named variable. N (the order) is
// part of the value: every operation returns a result that is exact through
// its stated order, and binary operations truncate to the smaller order.
// Mixing series in different variables is an error.

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace relosc {

using Rational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);
Rational parse_rational(const std::string& text);
double to_double(const Rational& value);

/// Generalized binomial coefficient C(alpha, n) = alpha (alpha-1) ... (alpha-n+1) / n!.
Rational binomial(const Rational& alpha, int n);
/// C(1/2, n): coefficients of the square-root binomial series.
Rational binomial_half(int n);

struct VariableMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class FormalSeries {
public:
    /// Coefficients c_0..c_N; must be non-empty.
    FormalSeries(std::string variable, std::vector<Rational> coefficients);

    static FormalSeries zero(std::string variable, int order);
    static FormalSeries constant(std::string variable, const Rational& value, int order);
    /// value * variable^power, truncated at order.
    static FormalSeries monomial(std::string variable, const Rational& value, int power, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::string& variable() const { return variable_; }
    const Rational& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    std::span<const Rational> coefficients() const { return coeffs_; }

    FormalSeries truncated(int order) const;
    FormalSeries renamed(std::string variable) const;

    bool operator==(const FormalSeries&) const = default;

private:
    std::string variable_;
    std::vector<Rational> coeffs_;
};

FormalSeries add(const FormalSeries& a, const FormalSeries& b);
FormalSeries sub(const FormalSeries& a, const FormalSeries& b);
FormalSeries scale(const FormalSeries& a, const Rational& factor);
/// Cauchy product truncated to min(a.order, b.order).
FormalSeries mul(const FormalSeries& a, const FormalSeries& b);

inline FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) { return add(a, b); }
inline FormalSeries operator-(const FormalSeries& a, const FormalSeries& b) { return sub(a, b); }
inline FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) { return mul(a, b); }
inline FormalSeries operator*(const Rational& f, const FormalSeries& a) { return scale(a, f); }

/// a^n with n >= 0.
FormalSeries power(const FormalSeries& a, int n);

/// Principal square root. Requires c_0 > 0 and c_0 a perfect rational square
/// (otherwise the result would not be rational); throws std::domain_error.
FormalSeries sqrt(const FormalSeries& a);

/// Multiplicative inverse. Requires c_0 != 0.
FormalSeries reciprocal(const FormalSeries& a);

/// outer(inner(x)). inner must have zero constant term; the result is in
/// inner's variable with order min(outer.order, inner.order).
FormalSeries compose(const FormalSeries& outer, const FormalSeries& inner);

/// Termwise derivative; order drops by one (an order-0 series maps to 0).
FormalSeries differentiate(const FormalSeries& a);

struct SeriesValue {
    double value;
    double last_term;  ///< |c_N x^N|, a crude truncation indicator
};

/// Horner evaluation in double precision.
SeriesValue eval(const FormalSeries& a, double x);

/// Residue extraction for a two-sided Laurent product.
///
/// Given D(u) = sum d_a u^a and A(v) = sum a_b v^b, the product
/// D(1/w) * A(rho w) is a Laurent series in w. Its coefficient of w^{-shift},
/// collected by powers of rho, is sum_b d_{b+shift} a_b rho^b; this returns
/// that series in `ratio_variable`.
FormalSeries laurent_coefficient(const FormalSeries& descending, const FormalSeries& ascending,
                                 int shift, std::string ratio_variable);

}  // namespace relosc
