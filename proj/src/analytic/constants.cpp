#include "apery/analytic/constants.hpp"

#include <cmath>
#include <mutex>

namespace apery::analytic {

Constant parse_constant(const std::string &name)
{
    if (name == "pi")
        return Constant::pi;
    if (name == "pi2")
        return Constant::pi2;
    if (name == "zeta2")
        return Constant::zeta2;
    if (name == "zeta3")
        return Constant::zeta3;
    if (name == "L2_chi3")
        return Constant::L2_chi3;
    if (name == "L2_chi_minus1" || name == "catalan")
        return Constant::L2_chi_minus1;
    throw EvalError("unknown constant: " + name);
}

std::string to_string(Constant c)
{
    switch (c) {
    case Constant::pi:
        return "pi";
    case Constant::pi2:
        return "pi2";
    case Constant::zeta2:
        return "zeta2";
    case Constant::zeta3:
        return "zeta3";
    case Constant::L2_chi3:
        return "L2_chi3";
    case Constant::L2_chi_minus1:
        return "L2_chi_minus1";
    }
    return "?";
}

std::vector<mpq_class> bernoulli_numbers(int n)
{
    static std::mutex mu;
    static std::vector<mpq_class> cache{mpq_class(1)};
    std::lock_guard<std::mutex> lock(mu);
    // sum_{k=0}^{m} C(m+1, k) B_k = 0
    for (int m = static_cast<int>(cache.size()); m <= n; ++m) {
        mpq_class acc = 0;
        mpz_class binom = 1; // C(m+1, 0)
        for (int k = 0; k < m; ++k) {
            acc += mpq_class(binom) * cache[k];
            binom = binom * (m + 1 - k) / (k + 1);
        }
        mpq_class b = -acc / mpq_class(m + 1);
        b.canonicalize();
        cache.push_back(b);
    }
    return std::vector<mpq_class>(cache.begin(), cache.begin() + n + 1);
}

Real hurwitz_zeta(long s, const mpq_class &a, Precision prec)
{
    if (s < 2)
        throw EvalError("hurwitz_zeta needs s >= 2");
    if (a <= 0 || a > 1)
        throw EvalError("hurwitz_zeta needs 0 < a <= 1");
    const Precision wp = prec + 32;
    const long M = static_cast<long>(prec / 4) + 16;
    Real aa(a, wp);
    Real sum(wp);
    for (long k = 0; k < M; ++k) {
        Real x = aa + Real(k, wp);
        sum += pow(x, -s);
    }
    Real x = aa + Real(M, wp);
    sum += pow(x, 1 - s) / (s - 1);
    sum += pow(x, -s) / 2L;
    // sum_j B_{2j}/(2j)! * s(s+1)...(s+2j-2) * x^{-s-2j+1}
    Real eps = pow(Real(2L, wp), -static_cast<long>(prec) - 8);
    Real xinv2 = Real(1L, wp) / (x * x);
    Real xpow = pow(x, -s - 1); // x^{-s-2j+1} at j = 1
    mpq_class rising = s;       // s(s+1)...(s+2j-2)
    mpz_class fact = 2;         // (2j)!
    std::vector<mpq_class> B;
    for (int j = 1; j < 4 * M; ++j) {
        if (static_cast<int>(B.size()) <= 2 * j)
            B = bernoulli_numbers(2 * j + 32);
        mpq_class coef = B[2 * j] * rising / mpq_class(fact);
        Real term = Real(coef, wp) * xpow;
        sum += term;
        if (abs(term) < eps * abs(sum))
            return sum.with_precision(prec);
        rising *= mpq_class((s + 2 * j - 1) * (s + 2 * j));
        fact *= mpz_class((2 * j + 1) * (2 * j + 2));
        xpow *= xinv2;
    }
    throw EvalError("Euler-Maclaurin summation did not converge");
}

Real periodic_dirichlet_series(long s, const std::vector<long> &chi, Precision prec)
{
    const long m = static_cast<long>(chi.size());
    if (m == 0)
        throw EvalError("empty periodic weight table");
    const Precision wp = prec + 16;
    Real sum(wp);
    for (long r = 1; r <= m; ++r) {
        long w = chi[static_cast<std::size_t>(r % m)];
        if (w == 0)
            continue;
        sum += hurwitz_zeta(s, mpq_class(r, m), wp) * w;
    }
    sum /= pow(Real(m, wp), s);
    return sum.with_precision(prec);
}

Real constant(Constant c, Precision prec)
{
    switch (c) {
    case Constant::pi:
        return const_pi(prec);
    case Constant::pi2: {
        Real p = const_pi(prec);
        return p * p;
    }
    case Constant::zeta2:
        return hurwitz_zeta(2, 1, prec);
    case Constant::zeta3:
        return hurwitz_zeta(3, 1, prec);
    case Constant::L2_chi3:
        return periodic_dirichlet_series(2, {0, 1, -1}, prec);
    case Constant::L2_chi_minus1:
        return periodic_dirichlet_series(2, {0, 1, 0, -1}, prec);
    }
    throw EvalError("unknown constant");
}

} // namespace apery::analytic
