#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library except for the Real wrapper around MPFR.

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <mpfr.h>

#include "apery/analytic/hp.hpp"

namespace oracle {

using apery::analytic::Real;

/// prod (1 - q^{m k})^e over the given factors, by repeated multiplication
/// and division by (1 - q^j), through q^N. The q^{sum m e / 24} prefactor is
/// not included.
inline std::vector<mpz_class> eta_product(const std::vector<std::pair<long, long>> &factors, int N)
{
    std::vector<mpz_class> c(N + 1);
    c[0] = 1;
    for (auto [m, e] : factors) {
        for (long k = 1; m * k <= N; ++k) {
            long j = m * k;
            for (long r = 0; r < (e < 0 ? -e : e); ++r) {
                if (e > 0) {
                    for (int i = N; i >= j; --i)
                        c[i] -= c[i - j];
                } else {
                    for (int i = j; i <= N; ++i)
                        c[i] += c[i - j];
                }
            }
        }
    }
    return c;
}

/// prod_{n=1}^{N} (1 - q^n)^{e[n]} through q^N.
inline std::vector<mpz_class> single_factors(const std::vector<long> &e, int N)
{
    std::vector<mpz_class> c(N + 1);
    c[0] = 1;
    for (int n = 1; n <= N; ++n) {
        for (long r = 0; r < (e[n] < 0 ? -e[n] : e[n]); ++r) {
            if (e[n] > 0) {
                for (int i = N; i >= n; --i)
                    c[i] -= c[i - n];
            } else {
                for (int i = n; i <= N; ++i)
                    c[i] += c[i - n];
            }
        }
    }
    return c;
}

inline mpz_class binomial(unsigned long n, unsigned long k)
{
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

/// sum_k C(n,k)^2 C(n+k,k)^2
inline mpz_class apery3(unsigned long n)
{
    mpz_class s = 0;
    for (unsigned long k = 0; k <= n; ++k) {
        mpz_class t = binomial(n, k) * binomial(n + k, k);
        s += t * t;
    }
    return s;
}

/// sum_k C(n,k)^2 C(n+k,k)
inline mpz_class apery2(unsigned long n)
{
    mpz_class s = 0;
    for (unsigned long k = 0; k <= n; ++k)
        s += binomial(n, k) * binomial(n, k) * binomial(n + k, k);
    return s;
}

inline mpz_class sigma(long n, unsigned long k)
{
    mpz_class s = 0;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) {
            mpz_class p;
            mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), k);
            s += p;
        }
    return s;
}

inline Real zeta(unsigned long s, mpfr_prec_t prec)
{
    Real out(prec);
    mpfr_zeta_ui(out.get(), s, MPFR_RNDN);
    return out;
}

inline Real catalan(mpfr_prec_t prec)
{
    Real out(prec);
    mpfr_const_catalan(out.get(), MPFR_RNDN);
    return out;
}

inline Real pi(mpfr_prec_t prec)
{
    Real out(prec);
    mpfr_const_pi(out.get(), MPFR_RNDN);
    return out;
}

/// sum_{k>=0} 1/(3k+1)^2 - 1/(3k+2)^2: K blocks summed directly, the rest
/// by Euler-Maclaurin (integral plus half the first term).
inline long double l2_chi3(long K = 100000)
{
    auto f = [](long double k) {
        long double a = 3 * k + 1, b = 3 * k + 2;
        return 1 / (a * a) - 1 / (b * b);
    };
    long double s = 0;
    for (long k = K - 1; k >= 0; --k)
        s += f(k);
    long double kk = K;
    s += 1 / (3 * (3 * kk + 1)) - 1 / (3 * (3 * kk + 2)) + f(kk) / 2;
    return s;
}

inline double abs_diff(const Real &a, const Real &b) { return apery::analytic::abs(a - b).to_double(); }

} // namespace oracle
