#pragma once

// Arbitrary-precision real and complex numbers on top of MPFR.
//
// Every value carries its own precision. Binary operations produce a result
// at the larger of the two operand precisions; in-place operations keep the
// precision of the left-hand side.

#include <cstdint>
#include <string>
#include <utility>

#include <gmpxx.h>
#include <mpfr.h>

namespace apery::analytic {

using Precision = mpfr_prec_t;

/// Bits needed to carry `digits` decimal digits, plus `guard` extra bits.
Precision bits_for_digits(int digits, Precision guard = 0);

class Real {
public:
    explicit Real(Precision prec = 128);
    Real(long value, Precision prec);
    Real(const mpq_class &value, Precision prec);
    Real(const mpz_class &value, Precision prec);
    Real(double value, Precision prec);
    Real(const std::string &decimal, Precision prec);

    Real(const Real &other);
    Real(Real &&other) noexcept;
    Real &operator=(const Real &other);
    Real &operator=(Real &&other) noexcept;
    ~Real();

    Precision precision() const { return mpfr_get_prec(value_); }
    /// Copy at a different precision (rounded to nearest).
    Real with_precision(Precision prec) const;

    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }

    Real &operator+=(const Real &rhs);
    Real &operator-=(const Real &rhs);
    Real &operator*=(const Real &rhs);
    Real &operator/=(const Real &rhs);
    Real &operator*=(long rhs);
    Real &operator/=(long rhs);

    Real operator-() const;

    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    bool is_finite() const { return mpfr_number_p(value_) != 0; }
    int sign() const { return mpfr_sgn(value_); }

    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    /// log10 of the absolute value as a double; -inf for zero.
    double log10_abs() const;
    /// Scientific notation with `digits` significant digits.
    std::string to_string(int digits) const;
    /// Fixed-point notation with `decimals` digits after the point.
    std::string to_fixed(int decimals) const;

private:
    mpfr_t value_;
};

Real operator+(const Real &a, const Real &b);
Real operator-(const Real &a, const Real &b);
Real operator*(const Real &a, const Real &b);
Real operator/(const Real &a, const Real &b);
Real operator*(const Real &a, long b);
Real operator*(long a, const Real &b);
Real operator/(const Real &a, long b);

bool operator<(const Real &a, const Real &b);
bool operator>(const Real &a, const Real &b);
bool operator<=(const Real &a, const Real &b);
bool operator>=(const Real &a, const Real &b);
bool operator==(const Real &a, const Real &b);

Real abs(const Real &x);
Real sqrt(const Real &x);
Real exp(const Real &x);
Real log(const Real &x);
Real sin(const Real &x);
Real cos(const Real &x);
Real pow(const Real &x, long n);
Real pow(const Real &x, const Real &y);
Real max(const Real &a, const Real &b);

Real const_pi(Precision prec);
/// 10^e at the given precision.
Real pow10(long e, Precision prec);

class Complex {
public:
    explicit Complex(Precision prec = 128) : re_(prec), im_(prec) {}
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit Complex(Real re);

    const Real &re() const { return re_; }
    const Real &im() const { return im_; }
    Real &re() { return re_; }
    Real &im() { return im_; }
    Precision precision() const;

    Complex &operator+=(const Complex &rhs);
    Complex &operator-=(const Complex &rhs);
    Complex &operator*=(const Complex &rhs);
    Complex &operator*=(const Real &rhs);
    Complex &operator/=(const Complex &rhs);

    Complex operator-() const { return {-re_, -im_}; }
    Complex conj() const { return {re_, -im_}; }

    std::string to_string(int digits) const;

private:
    Real re_;
    Real im_;
};

Complex operator+(const Complex &a, const Complex &b);
Complex operator-(const Complex &a, const Complex &b);
Complex operator*(const Complex &a, const Complex &b);
Complex operator*(const Complex &a, const Real &b);
Complex operator*(const Real &a, const Complex &b);
Complex operator/(const Complex &a, const Complex &b);

Real abs(const Complex &z);
/// e^{i*theta}
Complex expi(const Real &theta);
/// e^{2*pi*i*r} for an exact rational r, reduced modulo 1 before evaluation.
Complex unit_root(const mpq_class &r, Precision prec);
/// i^k for integer k.
Complex i_pow(long k, Precision prec);

/// Number together with a certified bound on its truncation error.
template <class T>
struct Certified {
    T value;
    Real error_bound;
};

} // namespace apery::analytic
