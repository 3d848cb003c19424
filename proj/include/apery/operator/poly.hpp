#pragma once

#include <string>
#include <vector>

#include "apery/series/rational.hpp"

namespace apery::op {

using series::Integer;
using series::Rational;

class OperatorError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dense univariate polynomial with exact rational coefficients, lowest
/// degree first. Trailing zeros are trimmed.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    static Poly from_strings(const std::vector<std::string> &coeffs);
    static Poly monomial(int degree, const Rational &c = 1);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational> &coeffs() const { return coeffs_; }
    Rational coeff(int i) const;
    /// Lowest degree with a nonzero coefficient; -1 for zero.
    int valuation() const;

    Rational operator()(const Rational &x) const;
    /// p(x + c)
    Poly shifted(const Rational &c) const;

    Poly operator+(const Poly &o) const;
    Poly operator-(const Poly &o) const;
    Poly operator*(const Poly &o) const;
    Poly operator*(const Rational &c) const;
    bool operator==(const Poly &o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly &o) const { return !(*this == o); }

    /// Human-readable form in the given variable, highest degree first.
    std::string to_string(const std::string &var) const;
    std::vector<std::string> to_strings() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

} // namespace apery::op
