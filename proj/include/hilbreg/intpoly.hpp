#pragma once
#include <string>
#include <vector>

#include "hilbreg/rational.hpp"

namespace hilbreg {

// Univariate numerical polynomial p(t) with rational coefficients that takes
// integer values at integers. Coefficients stored low to high; the zero
// polynomial has no coefficients.
class IntegerPolynomial {
public:
    IntegerPolynomial() = default;
    explicit IntegerPolynomial(std::vector<Rat> coeffs);

    static IntegerPolynomial zero() { return IntegerPolynomial(); }
    static IntegerPolynomial constant(const Rat& c);

    // Interpolate through (x_i, y_i); values are verified integral where callers need it.
    static IntegerPolynomial interpolate(const std::vector<std::pair<Rat, Rat>>& pts);

    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

    Rat operator()(const Rat& t) const;
    Rat operator()(long t) const { return (*this)(Rat(t)); }

    // Integer value at integer argument; throws internal_error if not integral.
    Int value_at(long t) const;

    // Checked via d+1 consecutive forward differences at 0.
    bool is_integer_valued() const;

    IntegerPolynomial operator+(const IntegerPolynomial& o) const;
    IntegerPolynomial operator-(const IntegerPolynomial& o) const;
    bool operator==(const IntegerPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const IntegerPolynomial& o) const { return c_ != o.c_; }

    // "2*t+2", "t^2", "(t^2+3*t+2)/2", "0"
    std::string text() const;

private:
    std::vector<Rat> c_;
    void normalize();
};

// Grammar: sum of signed terms `a`, `a*t^k`, `a t^k`, `t^k`, `t`, with integer or
// `num/den` rational coefficients and an optional overall `( ... )/m` form.
// Whitespace-insensitive.
IntegerPolynomial parse_intpoly(const std::string& s);

// C(t + shift, a) as a polynomial in t.
IntegerPolynomial binomial_poly(long a, long shift);

}  // namespace hilbreg
