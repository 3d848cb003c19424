#include "apery/analytic/hp.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

namespace apery::analytic {

Precision bits_for_digits(int digits, Precision guard)
{
    // log2(10) = 3.3219...
    return static_cast<Precision>(std::ceil(digits * 3.3219280948873623)) + guard;
}

Real::Real(Precision prec)
{
    mpfr_init2(value_, prec);
    mpfr_set_zero(value_, 1);
}

Real::Real(long value, Precision prec)
{
    mpfr_init2(value_, prec);
    mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const mpq_class &value, Precision prec)
{
    mpfr_init2(value_, prec);
    mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const mpz_class &value, Precision prec)
{
    mpfr_init2(value_, prec);
    mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(double value, Precision prec)
{
    mpfr_init2(value_, prec);
    mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(const std::string &decimal, Precision prec)
{
    mpfr_init2(value_, prec);
    if (mpfr_set_str(value_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(value_);
        throw std::invalid_argument("not a decimal number: " + decimal);
    }
}

Real::Real(const Real &other)
{
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real &&other) noexcept
{
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

Real &Real::operator=(const Real &other)
{
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

Real &Real::operator=(Real &&other) noexcept
{
    mpfr_swap(value_, other.value_);
    return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::with_precision(Precision prec) const
{
    Real out(prec);
    mpfr_set(out.value_, value_, MPFR_RNDN);
    return out;
}

Real &Real::operator+=(const Real &rhs)
{
    mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real &Real::operator-=(const Real &rhs)
{
    mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real &Real::operator*=(const Real &rhs)
{
    mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real &Real::operator/=(const Real &rhs)
{
    mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real &Real::operator*=(long rhs)
{
    mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
    return *this;
}

Real &Real::operator/=(long rhs)
{
    mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
    return *this;
}

Real Real::operator-() const
{
    Real out(precision());
    mpfr_neg(out.value_, value_, MPFR_RNDN);
    return out;
}

double Real::log10_abs() const
{
    if (is_zero())
        return -std::numeric_limits<double>::infinity();
    // Exponent and mantissa separately so huge or tiny values do not overflow.
    long exp2 = 0;
    double mant = mpfr_get_d_2exp(&exp2, value_, MPFR_RNDN);
    return std::log10(std::fabs(mant)) + static_cast<double>(exp2) * std::log10(2.0);
}

std::string Real::to_string(int digits) const
{
    char *buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", digits > 0 ? digits - 1 : 0, value_);
    std::unique_ptr<char, decltype(&mpfr_free_str)> holder(buf, &mpfr_free_str);
    return std::string(buf);
}

std::string Real::to_fixed(int decimals) const
{
    char *buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rf", decimals, value_);
    std::unique_ptr<char, decltype(&mpfr_free_str)> holder(buf, &mpfr_free_str);
    return std::string(buf);
}

namespace {

Precision max_prec(const Real &a, const Real &b)
{
    return std::max(a.precision(), b.precision());
}

} // namespace

Real operator+(const Real &a, const Real &b)
{
    Real out(max_prec(a, b));
    mpfr_add(out.get(), a.get(), b.get(), MPFR_RNDN);
    return out;
}

Real operator-(const Real &a, const Real &b)
{
    Real out(max_prec(a, b));
    mpfr_sub(out.get(), a.get(), b.get(), MPFR_RNDN);
    return out;
}

Real operator*(const Real &a, const Real &b)
{
    Real out(max_prec(a, b));
    mpfr_mul(out.get(), a.get(), b.get(), MPFR_RNDN);
    return out;
}

Real operator/(const Real &a, const Real &b)
{
    Real out(max_prec(a, b));
    mpfr_div(out.get(), a.get(), b.get(), MPFR_RNDN);
    return out;
}

Real operator*(const Real &a, long b)
{
    Real out(a.precision());
    mpfr_mul_si(out.get(), a.get(), b, MPFR_RNDN);
    return out;
}

Real operator*(long a, const Real &b) { return b * a; }

Real operator/(const Real &a, long b)
{
    Real out(a.precision());
    mpfr_div_si(out.get(), a.get(), b, MPFR_RNDN);
    return out;
}

bool operator<(const Real &a, const Real &b) { return mpfr_less_p(a.get(), b.get()) != 0; }
bool operator>(const Real &a, const Real &b) { return mpfr_greater_p(a.get(), b.get()) != 0; }
bool operator<=(const Real &a, const Real &b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }
bool operator>=(const Real &a, const Real &b) { return mpfr_greaterequal_p(a.get(), b.get()) != 0; }
bool operator==(const Real &a, const Real &b) { return mpfr_equal_p(a.get(), b.get()) != 0; }

Real abs(const Real &x)
{
    Real out(x.precision());
    mpfr_abs(out.get(), x.get(), MPFR_RNDN);
    return out;
}

Real sqrt(const Real &x)
{
    Real out(x.precision());
    mpfr_sqrt(out.get(), x.get(), MPFR_RNDN);
    return out;
}

Real exp(const Real &x)
{
    Real out(x.precision());
    mpfr_exp(out.get(), x.get(), MPFR_RNDN);
    return out;
}

Real log(const Real &x)
{
    Real out(x.precision());
    mpfr_log(out.get(), x.get(), MPFR_RNDN);
    return out;
}

Real sin(const Real &x)
{
    Real out(x.precision());
    mpfr_sin(out.get(), x.get(), MPFR_RNDN);
    return out;
}

Real cos(const Real &x)
{
    Real out(x.precision());
    mpfr_cos(out.get(), x.get(), MPFR_RNDN);
    return out;
}

Real pow(const Real &x, long n)
{
    Real out(x.precision());
    mpfr_pow_si(out.get(), x.get(), n, MPFR_RNDN);
    return out;
}

Real pow(const Real &x, const Real &y)
{
    Real out(max_prec(x, y));
    mpfr_pow(out.get(), x.get(), y.get(), MPFR_RNDN);
    return out;
}

Real max(const Real &a, const Real &b) { return a < b ? b : a; }

Real const_pi(Precision prec)
{
    Real out(prec);
    mpfr_const_pi(out.get(), MPFR_RNDN);
    return out;
}

Real pow10(long e, Precision prec)
{
    Real out(prec);
    mpfr_ui_pow_ui(out.get(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
    if (e < 0)
        mpfr_ui_div(out.get(), 1, out.get(), MPFR_RNDN);
    return out;
}

Complex::Complex(Real re) : re_(std::move(re)), im_(re_.precision()) {}

Precision Complex::precision() const { return std::max(re_.precision(), im_.precision()); }

Complex &Complex::operator+=(const Complex &rhs)
{
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
}

Complex &Complex::operator-=(const Complex &rhs)
{
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
}

Complex &Complex::operator*=(const Complex &rhs)
{
    Real re = re_ * rhs.re_ - im_ * rhs.im_;
    Real im = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Complex &Complex::operator*=(const Real &rhs)
{
    re_ *= rhs;
    im_ *= rhs;
    return *this;
}

Complex &Complex::operator/=(const Complex &rhs)
{
    Real den = rhs.re_ * rhs.re_ + rhs.im_ * rhs.im_;
    Real re = (re_ * rhs.re_ + im_ * rhs.im_) / den;
    Real im = (im_ * rhs.re_ - re_ * rhs.im_) / den;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string Complex::to_string(int digits) const
{
    return re_.to_string(digits) + (im_.sign() < 0 ? " - " : " + ") + abs(im_).to_string(digits) + "i";
}

Complex operator+(const Complex &a, const Complex &b)
{
    Complex out = a;
    out += b;
    return out;
}

Complex operator-(const Complex &a, const Complex &b)
{
    Complex out = a;
    out -= b;
    return out;
}

Complex operator*(const Complex &a, const Complex &b)
{
    Complex out = a;
    out *= b;
    return out;
}

Complex operator*(const Complex &a, const Real &b)
{
    Complex out = a;
    out *= b;
    return out;
}

Complex operator*(const Real &a, const Complex &b) { return b * a; }

Complex operator/(const Complex &a, const Complex &b)
{
    Complex out = a;
    out /= b;
    return out;
}

Real abs(const Complex &z)
{
    Real out(z.precision());
    mpfr_hypot(out.get(), z.re().get(), z.im().get(), MPFR_RNDN);
    return out;
}

Complex expi(const Real &theta)
{
    Real s(theta.precision()), c(theta.precision());
    mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
    return {std::move(c), std::move(s)};
}

Complex unit_root(const mpq_class &r, Precision prec)
{
    // Reduce to [0, 1) exactly, then use the symmetric quarter turns exactly.
    mpz_class num = r.get_num() % r.get_den();
    if (num < 0)
        num += r.get_den();
    mpq_class frac(num, r.get_den());
    frac.canonicalize();
    if (frac == 0)
        return Complex(Real(1L, prec), Real(0L, prec));
    if (frac == mpq_class(1, 2))
        return Complex(Real(-1L, prec), Real(0L, prec));
    if (frac == mpq_class(1, 4))
        return Complex(Real(0L, prec), Real(1L, prec));
    if (frac == mpq_class(3, 4))
        return Complex(Real(0L, prec), Real(-1L, prec));
    Real theta = const_pi(prec + 16) * Real(frac, prec + 16) * 2L;
    Complex z = expi(theta);
    return Complex(z.re().with_precision(prec), z.im().with_precision(prec));
}

Complex i_pow(long k, Precision prec)
{
    long m = ((k % 4) + 4) % 4;
    switch (m) {
    case 0:
        return Complex(Real(1L, prec), Real(0L, prec));
    case 1:
        return Complex(Real(0L, prec), Real(1L, prec));
    case 2:
        return Complex(Real(-1L, prec), Real(0L, prec));
    default:
        return Complex(Real(0L, prec), Real(-1L, prec));
    }
}

} // namespace apery::analytic
