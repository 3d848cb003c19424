#include "apery/series/eta.hpp"

namespace apery::series {

std::vector<Integer> product_expansion(const std::vector<long> &exponents, int N)
{
    if (N < 0)
        throw SeriesError("negative truncation order");
    // Logarithmic derivative: n g_n = -sum_{k=1}^{n} D_k g_{n-k}, D_k = sum_{d|k} d c_d.
    std::vector<Integer> D(static_cast<std::size_t>(N) + 1);
    for (long d = 1; d <= N; ++d) {
        long c = d < static_cast<long>(exponents.size()) ? exponents[d] : 0;
        if (c == 0)
            continue;
        Integer w = Integer(d) * c;
        for (long k = d; k <= N; k += d)
            D[k] += w;
    }
    std::vector<Integer> g(static_cast<std::size_t>(N) + 1);
    g[0] = 1;
    for (long n = 1; n <= N; ++n) {
        Integer acc = 0;
        for (long k = 1; k <= n; ++k)
            if (D[k] != 0)
                mpz_addmul(acc.get_mpz_t(), D[k].get_mpz_t(), g[n - k].get_mpz_t());
        mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n));
        g[n] = -acc;
    }
    return g;
}

Rational EtaQuotient::lead_exp() const
{
    Integer s = 0;
    for (auto [m, e] : factors)
        s += Integer(m) * e;
    Rational out(s, 24);
    out.canonicalize();
    return out;
}

Rational EtaQuotient::weight() const
{
    long s = 0;
    for (auto [m, e] : factors)
        s += e;
    Rational out(s, 2);
    out.canonicalize();
    return out;
}

QSeries expand(const EtaQuotient &eq, int N)
{
    std::vector<long> exps(static_cast<std::size_t>(N) + 1, 0);
    for (auto [m, e] : eq.factors) {
        if (m <= 0)
            throw SeriesError("eta multiplier must be positive");
        for (long k = m; k <= N; k += m)
            exps[k] += e;
    }
    return QSeries(eq.lead_exp(), product_expansion(exps, N));
}

QSeries expand(const PeriodicProduct &pp, int N)
{
    if (pp.exponents.empty())
        throw SeriesError("periodic product needs at least one exponent");
    long M = static_cast<long>(pp.exponents.size());
    std::vector<long> exps(static_cast<std::size_t>(N) + 1, 0);
    for (long n = 1; n <= N; ++n)
        exps[n] = pp.exponents[n % M];
    return QSeries(pp.lead, product_expansion(exps, N));
}

} // namespace apery::series
