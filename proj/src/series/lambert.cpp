#include "apery/series/lambert.hpp"

#include <limits>

namespace apery::series {

namespace {

const Rational &weight_at(const std::vector<Rational> &w, long n)
{
    return w[static_cast<std::size_t>(n % static_cast<long>(w.size()))];
}

std::int64_t checked_add(std::int64_t a, __int128 b)
{
    __int128 s = static_cast<__int128>(a) + b;
    if (s > std::numeric_limits<std::int64_t>::max() || s < std::numeric_limits<std::int64_t>::min())
        throw SeriesError("coefficient overflow in machine-integer expansion");
    return static_cast<std::int64_t>(s);
}

std::int64_t to_int64(const Rational &r, const char *what)
{
    if (r.get_den() != 1 || !r.get_num().fits_slong_p())
        throw SeriesError(std::string(what) + " must be a machine integer");
    return r.get_num().get_si();
}

} // namespace

LambertShape parse_lambert_shape(const std::string &name)
{
    if (name == "divisor")
        return LambertShape::divisor;
    if (name == "codivisor")
        return LambertShape::codivisor;
    if (name == "alternating_one_plus")
        return LambertShape::alternating_one_plus;
    throw SeriesError("unregistered Lambert shape: " + name);
}

std::string to_string(LambertShape shape)
{
    switch (shape) {
    case LambertShape::divisor:
        return "divisor";
    case LambertShape::codivisor:
        return "codivisor";
    case LambertShape::alternating_one_plus:
        return "alternating_one_plus";
    }
    return "?";
}

QSeries expand(const LambertSeries &ls, int N)
{
    if (ls.weights.empty())
        throw SeriesError("Lambert series needs at least one weight");
    if (ls.power < 0)
        throw SeriesError("Lambert power must be non-negative");
    std::vector<Rational> c(static_cast<std::size_t>(N) + 1);
    auto npow = [&](long n) {
        Integer r;
        mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(ls.power));
        return r;
    };
    switch (ls.shape) {
    case LambertShape::divisor:
        for (long d = 1; d <= N; ++d) {
            const Rational &w = weight_at(ls.weights, d);
            if (w == 0)
                continue;
            Rational term = w * npow(d);
            for (long n = d; n <= N; n += d)
                c[n] += term;
        }
        break;
    case LambertShape::codivisor:
        for (long n = 1; n <= N; ++n) {
            Integer p = npow(n);
            for (long k = 1; k * n <= N; ++k) {
                const Rational &w = weight_at(ls.weights, k);
                if (w != 0)
                    c[k * n] += w * p;
            }
        }
        break;
    case LambertShape::alternating_one_plus:
        // q^n/(1+q^{2n}) = sum_j (-1)^j q^{n(2j+1)}
        for (long n = 1; n <= N; ++n) {
            const Rational &w = weight_at(ls.weights, n);
            if (w == 0)
                continue;
            Rational term = w * npow(n);
            if (n % 2 == 0)
                term = -term;
            for (long j = 0; n * (2 * j + 1) <= N; ++j)
                c[n * (2 * j + 1)] += (j % 2 == 0) ? term : Rational(-term);
        }
        break;
    }
    for (auto &x : c)
        x *= ls.scale;
    c[0] += ls.constant;
    return QSeries(0, std::move(c));
}

Integer divisor_sigma(long n, int k)
{
    Integer s = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        Integer t;
        mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
        s += t;
        long e = n / d;
        if (e != d) {
            mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned long>(k));
            s += t;
        }
    }
    return s;
}

QSeries eisenstein(EisensteinKind kind, long multiplier, int N)
{
    if (multiplier < 1)
        throw SeriesError("Eisenstein multiplier must be positive");
    int k = kind == EisensteinKind::E2 ? 1 : 3;
    long factor = kind == EisensteinKind::E2 ? -24 : 240;
    std::vector<Rational> c(static_cast<std::size_t>(N) + 1);
    c[0] = 1;
    for (long n = 1; n * multiplier <= N; ++n)
        c[n * multiplier] = Rational(divisor_sigma(n, k) * factor);
    return QSeries(0, std::move(c));
}

QSeries triple_product_sparse(const Rational &multiplier, int N, const Rational &scale)
{
    if (multiplier <= 0)
        throw SeriesError("triple product multiplier must be positive");
    Rational eight = multiplier * 8;
    if (eight.get_den() != 1)
        throw SeriesError("triple product exponents leave the integer lattice");
    std::vector<Rational> c(static_cast<std::size_t>(N) + 1);
    // Relative exponent of the n-th term: 4 m n(n+1).
    for (long n = 0;; ++n) {
        Rational rel = multiplier * 4 * n * (n + 1);
        if (rel > N)
            break;
        long idx = rel.get_num().get_si();
        long sign = n % 2 == 0 ? 1 : -1;
        c[idx] += scale * (sign * (2 * n + 1));
    }
    return QSeries(multiplier, std::move(c));
}

std::vector<std::int64_t> triple_product_pair_coefficients(const Rational &m1, const Rational &m2, std::size_t N)
{
    Rational lead = m1 + m2;
    if (lead.get_den() != 1 || m1 <= 0 || m2 <= 0)
        throw SeriesError("triple product pair must have positive multipliers with integral sum");
    Integer den;
    mpz_lcm(den.get_mpz_t(), m1.get_den_mpz_t(), m2.get_den_mpz_t());
    if (!den.fits_slong_p())
        throw SeriesError("triple product denominators too large");
    long D = den.get_si();
    long a1 = Rational(m1 * D).get_num().get_si();
    long a2 = Rational(m2 * D).get_num().get_si();
    // Exponents in units of 1/D: a_i (2n+1)^2.
    auto terms = [&](long a) {
        std::vector<std::pair<long, long>> out;
        for (long n = 0;; ++n) {
            long e = a * (2 * n + 1) * (2 * n + 1);
            if (e > static_cast<long>(N) * D)
                break;
            out.emplace_back(e, (n % 2 == 0 ? 1 : -1) * (2 * n + 1));
        }
        return out;
    };
    auto t1 = terms(a1);
    auto t2 = terms(a2);
    std::vector<std::int64_t> c(N + 1, 0);
    long limit = static_cast<long>(N) * D;
    for (auto [e1, c1] : t1)
        for (auto [e2, c2] : t2) {
            long e = e1 + e2;
            if (e > limit)
                break;
            if (e % D != 0)
                throw SeriesError("triple product pair leaves the integer lattice");
            c[e / D] = checked_add(c[e / D], static_cast<__int128>(c1) * c2);
        }
    return c;
}

std::vector<std::int64_t> lambert_coefficients(const LambertSeries &ls, std::size_t N)
{
    if (ls.weights.empty())
        throw SeriesError("Lambert series needs at least one weight");
    std::vector<std::int64_t> w;
    for (const auto &x : ls.weights)
        w.push_back(to_int64(x, "Lambert weight"));
    std::int64_t scale = to_int64(ls.scale, "Lambert scale");
    std::int64_t constant = to_int64(ls.constant, "Lambert constant");
    long M = static_cast<long>(w.size());
    auto npow = [&](long n) {
        __int128 r = 1;
        for (int i = 0; i < ls.power; ++i)
            r *= n;
        return r;
    };
    std::vector<std::int64_t> c(N + 1, 0);
    long n_max = static_cast<long>(N);
    switch (ls.shape) {
    case LambertShape::divisor:
        for (long d = 1; d <= n_max; ++d) {
            if (w[d % M] == 0)
                continue;
            __int128 term = static_cast<__int128>(w[d % M]) * npow(d) * scale;
            for (long n = d; n <= n_max; n += d)
                c[n] = checked_add(c[n], term);
        }
        break;
    case LambertShape::codivisor:
        for (long n = 1; n <= n_max; ++n) {
            __int128 p = npow(n) * scale;
            for (long k = 1; k * n <= n_max; ++k)
                if (w[k % M] != 0)
                    c[k * n] = checked_add(c[k * n], p * w[k % M]);
        }
        break;
    case LambertShape::alternating_one_plus:
        for (long n = 1; n <= n_max; ++n) {
            if (w[n % M] == 0)
                continue;
            __int128 term = static_cast<__int128>(w[n % M]) * npow(n) * scale * (n % 2 == 0 ? -1 : 1);
            for (long j = 0; n * (2 * j + 1) <= n_max; ++j)
                c[n * (2 * j + 1)] = checked_add(c[n * (2 * j + 1)], j % 2 == 0 ? term : -term);
        }
        break;
    }
    c[0] = checked_add(c[0], constant);
    return c;
}

} // namespace apery::series
