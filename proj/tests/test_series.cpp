#include <doctest.h>

#include "apery/series/eta.hpp"
#include "apery/series/lambert.hpp"
#include "apery/series/qseries.hpp"
#include "oracles.hpp"

using namespace apery::series;

namespace {

std::vector<Rational> ints(std::initializer_list<long> v)
{
    std::vector<Rational> out;
    for (long x : v)
        out.emplace_back(x);
    return out;
}

void check_against(const QSeries &s, const std::vector<mpz_class> &ref, const Rational &lead)
{
    REQUIRE(s.lead_exp() == lead);
    for (int i = 0; i <= s.trunc_order() && i < static_cast<int>(ref.size()); ++i)
        CHECK(s[i] == Rational(ref[i]));
}

} // namespace

TEST_CASE("rational parsing")
{
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-7") == -7);
    CHECK(to_string(parse_rational("-10/15")) == "-2/3");
    CHECK_THROWS_AS(parse_rational("1/0"), SeriesError);
    CHECK_THROWS_AS(parse_rational("abc"), SeriesError);
    CHECK(common_denominator({Rational(1, 4), Rational(5, 6), 2}) == 12);
}

TEST_CASE("series arithmetic")
{
    QSeries a(0, ints({1, 2, 3, 4, 5}));
    QSeries b(0, ints({1, -1, 0, 0, 0}));
    QSeries ab = a * b;
    CHECK(ab.coeffs() == ints({1, 1, 1, 1, 1}));
    CHECK(a * inverse(a) == QSeries::one(4));
    CHECK(int_pow(a, -2) * int_pow(a, 2) == QSeries::one(4));

    SUBCASE("fractional lead exponents")
    {
        QSeries x = QSeries::monomial(Rational(1, 24), 1, 3);
        QSeries y = int_pow(x, 24);
        CHECK(y.lead_exp() == 1);
        CHECK_THROWS_AS(x + QSeries::one(3), SeriesError);
    }

    SUBCASE("truncation follows the shorter operand")
    {
        QSeries s = a + QSeries(0, ints({1, 1}));
        CHECK(s.trunc_order() == 1);
        CHECK_THROWS_AS(s.coeff_at(2), SeriesError);
        CHECK(s.coeff_at(Rational(1, 2)) == 0);
    }

    SUBCASE("theta")
    {
        QSeries t = theta_q(QSeries(1, ints({1, 1, 1})));
        CHECK(t.coeffs() == ints({1, 2, 3}));
    }

    SUBCASE("json round trip")
    {
        QSeries s(Rational(1, 3), std::vector<Rational>{Rational(1, 2), -3});
        CHECK(qseries_from_json(to_json(s)) == s);
        CHECK(qseries_from_json(to_json(s)).lead_exp() == Rational(1, 3));
    }

    SUBCASE("polynomial substitution")
    {
        QSeries t(1, ints({1, 1, 1, 1, 1, 1}));
        QSeries p = polynomial_in(ints({1, -2, 1}), t, 5);
        QSeries one_minus_t = QSeries::one(5) - QSeries(1, ints({1, 1, 1, 1, 1}));
        CHECK(p == one_minus_t * one_minus_t);
    }
}

TEST_CASE("eta quotients match the product oracle")
{
    const int N = 120;
    std::vector<std::vector<std::pair<long, long>>> cases = {
        {{1, 24}}, {{1, 3}, {7, 3}}, {{2, 3}, {6, 3}}, {{4, 6}}, {{3, 9}, {1, -3}}, {{3, 12}, {1, -12}},
        {{1, -1}, {2, 5}, {4, -2}}};
    for (const auto &f : cases) {
        EtaQuotient eq{f};
        Rational lead = 0;
        for (auto [m, e] : f)
            lead += Rational(m * e, 24);
        lead.canonicalize();
        check_against(expand(eq, N), oracle::eta_product(f, N), lead);
    }
}

TEST_CASE("known expansions")
{
    QSeries t = expand(EtaQuotient{{{3, 12}, {1, -12}}}, 4);
    CHECK(t.lead_exp() == 1);
    CHECK(t.coeffs() == ints({1, 12, 90, 508, 2391}));

    QSeries delta = expand(EtaQuotient{{{1, 24}}}, 5);
    CHECK(delta.coeffs() == ints({1, -24, 252, -1472, 4830, -6048}));

    CHECK(EtaQuotient{{{1, 3}, {7, 3}}}.weight() == 3);
    CHECK(EtaQuotient{{{3, 9}, {1, -3}}}.lead_exp() == 1);

    std::vector<long> e5 = {0, 5, -5, -5, 5};
    QSeries pp = expand(PeriodicProduct{1, e5}, 60);
    std::vector<long> ex(61);
    for (int n = 1; n <= 60; ++n)
        ex[n] = e5[n % 5];
    check_against(pp, oracle::single_factors(ex, 60), 1);
}

TEST_CASE("product expansion against repeated multiplication")
{
    std::vector<long> ex(41);
    for (int n = 1; n <= 40; ++n)
        ex[n] = (n % 3 == 0) ? 2 : -1;
    auto got = product_expansion(ex, 40);
    auto want = oracle::single_factors(ex, 40);
    for (int i = 0; i <= 40; ++i)
        CHECK(got[i] == want[i]);
}

TEST_CASE("Eisenstein series and divisor sums")
{
    QSeries e2 = eisenstein(EisensteinKind::E2, 1, 3);
    CHECK(e2.coeffs() == ints({1, -24, -72, -96}));
    QSeries e4 = eisenstein(EisensteinKind::E4, 1, 3);
    CHECK(e4.coeffs() == ints({1, 240, 2160, 6720}));

    QSeries e4_3 = eisenstein(EisensteinKind::E4, 3, 60);
    for (int n = 1; n <= 60; ++n)
        CHECK(e4_3.coeff_at(n) == (n % 3 == 0 ? Rational(240 * oracle::sigma(n / 3, 3)) : Rational(0)));

    for (long n = 1; n <= 200; ++n) {
        CHECK(divisor_sigma(n, 0) == oracle::sigma(n, 0));
        CHECK(divisor_sigma(n, 1) == oracle::sigma(n, 1));
        CHECK(divisor_sigma(n, 3) == oracle::sigma(n, 3));
    }

    // E4^2 = E8 = 1 + 480 sum sigma_7(n) q^n
    QSeries e4sq = int_pow(eisenstein(EisensteinKind::E4, 1, 30), 2);
    for (int n = 1; n <= 30; ++n)
        CHECK(e4sq.coeff_at(n) == Rational(480 * oracle::sigma(n, 7)));
}

TEST_CASE("Lambert series")
{
    SUBCASE("divisor shape by direct expansion")
    {
        LambertSeries ls{LambertShape::divisor, ints({0, 1, -2, 2, -1}), 2, 0, 1};
        QSeries s = expand(ls, 60);
        for (int n = 1; n <= 60; ++n) {
            Rational want = 0;
            for (int d = 1; d <= n; ++d)
                if (n % d == 0)
                    want += ls.weights[d % 5] * d * d;
            CHECK(s.coeff_at(n) == want);
        }
    }

    SUBCASE("codivisor shape is the eta quotient of weight 3 on Gamma0(3)")
    {
        LambertSeries ls{LambertShape::codivisor, ints({0, 1, -1}), 2, 0, 1};
        QSeries s = expand(ls, 150);
        QSeries eq = expand(EtaQuotient{{{3, 9}, {1, -3}}}, 149);
        for (int n = 1; n <= 150; ++n)
            CHECK(s.coeff_at(n) == eq.coeff_at(n));
    }

    SUBCASE("alternating shape")
    {
        LambertSeries ls{LambertShape::alternating_one_plus, ints({1}), 0, 0, 1};
        QSeries s = expand(ls, 40);
        for (int m = 1; m <= 40; ++m) {
            Rational want = 0;
            for (int n = 1; n <= m; ++n)
                for (int j = 0; n * (2 * j + 1) <= m; ++j)
                    if (n * (2 * j + 1) == m)
                        want += ((n % 2) ? 1 : -1) * ((j % 2) ? -1 : 1);
            CHECK(s.coeff_at(m) == want);
        }
    }

    SUBCASE("constant and scale")
    {
        LambertSeries ls{LambertShape::divisor, ints({0, 1, 1, -1, 1, -1, -1}), 0, 1, 2};
        QSeries s = expand(ls, 10);
        CHECK(s[0] == 1);
        CHECK(s[1] == 2);
        auto fast = lambert_coefficients(ls, 10);
        for (int n = 0; n <= 10; ++n)
            CHECK(Rational(fast[n]) == s[n]);
    }

    CHECK(parse_lambert_shape("codivisor") == LambertShape::codivisor);
    CHECK_THROWS_AS(parse_lambert_shape("nope"), SeriesError);
}

TEST_CASE("triple products")
{
    SUBCASE("eta cubed")
    {
        QSeries s = triple_product_sparse(Rational(1, 8), 200);
        CHECK(s.lead_exp() == Rational(1, 8));
        auto ref = oracle::eta_product({{1, 3}}, 200);
        for (int n = 0; n <= 200; ++n)
            CHECK(s[n] == Rational(ref[n]));
    }

    SUBCASE("support of eta(4t)^6")
    {
        auto c = triple_product_pair_coefficients(Rational(1, 2), Rational(1, 2), 2000);
        bool ok = true;
        for (std::size_t n = 0; n <= 2000; ++n)
            if (n % 4 != 1 && c[n] != 0)
                ok = false;
        CHECK(ok);
        auto ref = oracle::eta_product({{4, 6}}, 200);
        for (int n = 1; n <= 200; ++n)
            CHECK(c[n] == ref[n - 1]);
    }

    SUBCASE("eta(2t)^3 eta(6t)^3: support and multiplicativity")
    {
        auto c = triple_product_pair_coefficients(Rational(1, 4), Rational(3, 4), 2000);
        auto ref = oracle::eta_product({{2, 3}, {6, 3}}, 300);
        for (int n = 1; n <= 300; ++n)
            CHECK(c[n] == ref[n - 1]);
        bool support = true;
        for (std::size_t n = 1; n <= 2000; ++n)
            if ((n % 2 == 0 || n % 12 == 5 || n % 12 == 11) && c[n] != 0)
                support = false;
        CHECK(support);
        bool mult = true;
        for (std::size_t n = 1; n <= 200; ++n)
            if (c[3 * n] != c[3] * c[n])
                mult = false;
        CHECK(mult);
    }
}
