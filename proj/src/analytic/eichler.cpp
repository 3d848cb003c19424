#include "apery/analytic/eichler.hpp"

#include <cmath>

namespace apery::analytic {

namespace {

// Smallest M such that C r^{M+1} / (1-r)^k <= 10^{-digits}, with ln r = log_r.
long terms_needed(double C, double log_r, int digits, int k)
{
    double r = std::exp(log_r);
    double target = -digits * std::log(10.0) - std::log(std::max(C, 1e-300)) + k * std::log1p(-r);
    // (M+1) log_r <= target
    double m = std::ceil(target / log_r) - 1;
    return std::max(1L, static_cast<long>(m));
}

} // namespace

CoefficientBound coefficient_bound(const std::vector<mpq_class> &c, int sigma)
{
    CoefficientBound b;
    b.sigma = sigma;
    for (std::size_t n = 1; n < c.size(); ++n) {
        if (c[n] == 0)
            continue;
        double v = std::fabs(c[n].get_d()) / std::pow(static_cast<double>(n), sigma);
        b.C = std::max(b.C, v);
    }
    // Round up so the bound covers floating conversion.
    b.C *= 1 + 1e-12;
    return b;
}

EichlerSeries::EichlerSeries(const series::QSeries &f, int order) : order_(order)
{
    if (f.lead_exp().get_den() != 1 || f.lead_exp() < 0)
        throw EvalError("Eichler series needs integral non-negative exponents");
    long top = f.abs_order().get_num().get_si();
    coeffs_.resize(static_cast<std::size_t>(top) + 1);
    for (long e = 0; e <= top; ++e)
        coeffs_[e] = f.coeff_at(e);
    if (coeffs_[0] != 0)
        throw EvalError("Eichler series needs a vanishing constant term");
    bound_ = coefficient_bound(coeffs_, order);
}

EichlerSeries::EichlerSeries(std::vector<mpq_class> coeffs, int order, CoefficientBound bound)
    : coeffs_(std::move(coeffs)), order_(order), bound_(bound)
{
    auto actual = coefficient_bound(coeffs_, bound_.sigma);
    if (actual.C > bound_.C * (1 + 1e-9))
        throw EvalError("coefficient bound violated by materialized coefficients");
}

Certified<Complex> eichler_eval(const EichlerSeries &E, const Complex &tau, int target_digits)
{
    if (tau.im().sign() <= 0)
        throw EvalError("tau must lie in the upper half-plane");
    const Precision wp = bits_for_digits(target_digits, 32) + 32;
    Real two_pi = const_pi(wp) * 2L;
    Real x = tau.re().with_precision(wp);
    Real y = tau.im().with_precision(wp);
    double log_r = -(two_pi * y).to_double();
    // |c_n / n^order| <= C n^{sigma-order}; with sigma <= order the tail is geometric.
    if (E.bound().sigma > E.order())
        throw EvalError("coefficient growth exceeds the Eichler order");
    long M = terms_needed(E.bound().C, log_r, target_digits + 1, 1);
    if (M >= static_cast<long>(E.size()))
        throw EvalError("coefficient stream exhausted: need " + std::to_string(M) + " terms, have " +
                        std::to_string(E.size() - 1));
    Real modulus = exp(-(two_pi * y));
    Complex q = expi(two_pi * x) * modulus;
    Complex qn(Real(1L, wp), Real(0L, wp));
    Complex sum(wp);
    for (long n = 1; n <= M; ++n) {
        qn *= q;
        const mpq_class &c = E.coeffs()[n];
        if (c == 0)
            continue;
        Real w = Real(c, wp) / pow(Real(n, wp), E.order());
        sum += qn * w;
    }
    Real r = modulus;
    Real bound = Real(E.bound().C, wp) * pow(r, M + 1) / (Real(1L, wp) - r);
    return {sum, bound};
}

Certified<Complex> lambert_character_sum(const Complex &x, const std::vector<long> &chi, int power, int target_digits)
{
    if (chi.empty())
        throw EvalError("empty character table");
    const Precision wp = bits_for_digits(target_digits, 32) + 32;
    Real rx = abs(x).with_precision(wp);
    if (rx >= Real(1L, wp))
        throw EvalError("|x| must be below 1");
    Complex sum(wp);
    if (rx.is_zero())
        return {sum, Real(0L, wp)};
    double log_r = log(rx).to_double();
    long cmax = 0;
    for (long c : chi)
        cmax = std::max(cmax, std::labs(c));
    long M = terms_needed(static_cast<double>(cmax), log_r, target_digits + 1, 2);
    Complex one(Real(1L, wp), Real(0L, wp));
    Complex xx(x.re().with_precision(wp), x.im().with_precision(wp));
    Complex xn = one;
    const long m = static_cast<long>(chi.size());
    for (long n = 1; n <= M; ++n) {
        xn *= xx;
        long c = chi[static_cast<std::size_t>(n % m)];
        if (c == 0)
            continue;
        Complex term = xn / (one - xn);
        term *= Real(c, wp) / pow(Real(n, wp), power);
        sum += term;
    }
    Real one_r(1L, wp);
    Real bound = Real(cmax, wp) * pow(rx, M + 1) / ((one_r - rx) * (one_r - rx));
    return {sum, bound};
}

Certified<Complex> ramanujan_sum(const Complex &x, int target_digits)
{
    return lambert_character_sum(x, {0, 1, -1}, 2, target_digits);
}

} // namespace apery::analytic
