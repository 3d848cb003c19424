#include <doctest.h>

#include <cmath>

#include "apery/lfunctions/identities.hpp"
#include "apery/series/eta.hpp"
#include "apery/series/lambert.hpp"
#include "oracles.hpp"

using namespace apery;
using namespace apery::lfun;

namespace {

StreamPtr stream_of(std::string name, std::function<std::int64_t(std::size_t)> c)
{
    return std::make_shared<CoefficientStream>(std::move(name), [c](std::size_t N) {
        std::vector<std::int64_t> v(N + 1);
        for (std::size_t n = 0; n <= N; ++n)
            v[n] = c(n);
        return v;
    });
}

StreamPtr pair_stream(mpq_class m1, mpq_class m2)
{
    return std::make_shared<CoefficientStream>("pair", [m1, m2](std::size_t N) {
        return series::triple_product_pair_coefficients(m1, m2, N);
    });
}

/// eta(3t)^9 / eta(t)^3 = sum n^2 sum_k (k/3) q^{kn}
StreamPtr fh_stream()
{
    return std::make_shared<CoefficientStream>("fh", [](std::size_t N) {
        series::LambertSeries ls{series::LambertShape::codivisor, {0, 1, -1}, 2, 0, 1};
        return series::lambert_coefficients(ls, N);
    });
}

StreamPtr e4_stream()
{
    return stream_of("E4", [](std::size_t n) {
        return n == 0 ? std::int64_t{1} : 240 * oracle::sigma(static_cast<long>(n), 3).get_si();
    });
}

LSeriesData self_dual(StreamPtr s, int k, mpq_class scale_sq)
{
    LSeriesData d;
    d.coeffs = d.dual_coeffs = std::move(s);
    d.weight = k;
    d.scale_sq = scale_sq;
    return d;
}

double cdist(const Complex &a, const Complex &b) { return analytic::abs(a - b).to_double(); }

} // namespace

TEST_CASE("upper incomplete gamma against MPFR")
{
    for (int m = 1; m <= 6; ++m)
        for (const char *xs : {"0.25", "1", "7.5", "40"}) {
            Real x(xs, 200);
            Real want(200), a(static_cast<long>(m), 200);
            mpfr_gamma_inc(want.get(), a.get(), x.get(), MPFR_RNDN);
            Real got = upper_gamma_int(m, x);
            CHECK(analytic::abs((got - want) / want).to_double() < 1e-55);
        }
}

TEST_CASE("coefficient streams grow on demand")
{
    int calls = 0;
    auto s = std::make_shared<CoefficientStream>("n", [&calls](std::size_t N) {
        ++calls;
        std::vector<std::int64_t> v(N + 1);
        for (std::size_t n = 0; n <= N; ++n)
            v[n] = static_cast<std::int64_t>(n);
        return v;
    });
    s->ensure(10);
    CHECK(s->top() >= 10);
    CHECK((*s)[7] == 7);
    s->ensure(5);
    CHECK(calls == 1);
    CHECK(s->growth_constant(1) == doctest::Approx(1.0));
}

TEST_CASE("Eisenstein L-values")
{
    auto d = self_dual(e4_stream(), 4, 1);
    const Precision p = 200;
    Real pi = oracle::pi(p);

    auto v2 = lvalue_smoothed(d, 2, 30);
    CHECK(std::abs(v2.value.re().to_double() + 10 * M_PI * M_PI / 3) < 1e-12);
    CHECK(oracle::abs_diff(v2.value.re(), pi * pi * (-10L) / 3L) < 1e-28);
    CHECK(std::abs(v2.value.im().to_double()) < 1e-28);
    CHECK(v2.eps.re().to_double() == doctest::Approx(1.0));

    // 240 zeta(3) zeta(0)
    auto v3 = lvalue_smoothed(d, 3, 30);
    CHECK(oracle::abs_diff(v3.value.re(), oracle::zeta(3, p) * (-120L)) < 1e-27);
}

TEST_CASE("root numbers")
{
    SUBCASE("eta(t)^3 eta(7t)^3 under the Fricke involution")
    {
        auto d = self_dual(pair_stream(mpq_class(1, 8), mpq_class(7, 8)), 3, 7);
        Complex eps = detect_root_number(d, 2);
        CHECK(std::abs(eps.re().to_double()) < 1e-20);
        CHECK(eps.im().to_double() == doctest::Approx(1.0));
    }

    SUBCASE("eta(3t)^9 / eta(t)^3 with the twist by 2/3")
    {
        auto d = self_dual(fh_stream(), 3, 9);
        d.a_over_c = mpq_class(2, 3);
        d.d_over_c = mpq_class(-1, 3);
        Complex eps = detect_root_number(d, 2);
        CHECK(eps.re().to_double() == doctest::Approx(-1.0));
        CHECK(std::abs(eps.im().to_double()) < 1e-20);
        auto v = lvalue_smoothed(d, 2, 25);
        CHECK(v.fe_residual.to_double() < 1e-20);
    }

    SUBCASE("a wrong level breaks the functional equation")
    {
        auto d = self_dual(pair_stream(mpq_class(1, 8), mpq_class(7, 8)), 3, 5);
        CHECK_THROWS_AS(lvalue_smoothed(d, 2, 20), LFunctionError);
    }
}

TEST_CASE("dual data")
{
    LSeriesData d = self_dual(e4_stream(), 3, 9);
    d.a_over_c = mpq_class(2, 3);
    d.d_over_c = mpq_class(-1, 3);
    d.eps = Complex(Real(0L, 64), Real(1L, 64));
    LSeriesData r = d.dual();
    CHECK(r.a_over_c == mpq_class(1, 3));
    CHECK(r.d_over_c == mpq_class(-2, 3));
    REQUIRE(r.eps.has_value());
    // conj(i) (-1)^3 = i
    CHECK(r.eps->im().to_double() == 1.0);
}

TEST_CASE("Abel regularization")
{
    auto ones = stream_of("1", [](std::size_t n) { return n == 0 ? 0 : 1; });
    const Precision p = 128;
    Real pi = oracle::pi(p);

    auto alt = abel_twisted(*ones, mpq_class(1, 2), 2);
    CHECK(oracle::abs_diff(alt.value.re(), -(pi * pi) / 12L) < 1e-15);
    CHECK(alt.error_estimate < 1e-12);

    // Each class alone has mean 1/4 and a delta log delta term; the
    // difference does not.
    auto r1 = abel_residue_class(*ones, 1, 4, 2);
    auto r3 = abel_residue_class(*ones, 3, 4, 2);
    CHECK(oracle::abs_diff(r1.value.re() - r3.value.re(), oracle::catalan(p)) < 1e-15);

    // Divergent without damping: sum n^{-1} (1 - 3 [3 | n]) = log 3
    std::vector<Complex> w = {Complex(Real(-2L, p), Real(0L, p)), Complex(Real(1L, p), Real(0L, p)),
                              Complex(Real(1L, p), Real(0L, p))};
    auto l3 = abel_regularized_sum(*ones, w, 1);
    CHECK(oracle::abs_diff(l3.value.re(), log(Real(3L, p))) < 1e-12);
}

TEST_CASE("smoothed evaluator against Abel")
{
    auto f7 = pair_stream(mpq_class(1, 8), mpq_class(7, 8));
    auto sm = lvalue_smoothed(self_dual(f7, 3, 7), 2, 25);
    auto ab = abel_twisted(*f7, 0, 2);
    CHECK(cdist(sm.value, ab.value) < 1e-10);
}

TEST_CASE("stabilizer and corollary identities")
{
    FormData f6;
    f6.name = "f6";
    f6.coeffs = std::make_shared<CoefficientStream>("f6", [](std::size_t N) {
        return series::triple_product_pair_coefficients(mpq_class(1, 4), mpq_class(3, 4), N);
    });
    f6.equations = {{"fricke", 12, 0, 0}, {"sigma", 12, mpq_class(1, 2), mpq_class(-1, 2)}};

    CHECK(find_equation(f6, "sigma").a_over_c == mpq_class(1, 2));
    CHECK_THROWS_AS(find_equation(f6, "nope"), LFunctionError);

    auto checks = verify_stabilizer_identity(f6, {7, -3, 12, -5}, 8);
    REQUIRE(checks.size() >= 3);
    for (const auto &c : checks) {
        CAPTURE(c.identity);
        CHECK(c.pass);
        CHECK(c.abs_error.to_double() < 1e-8);
    }
    CHECK_THROWS_AS(verify_stabilizer_identity(f6, {1, 1, 1, 1}, 8), LFunctionError);
    CHECK_THROWS_AS(verify_stabilizer_identity(f6, {1, 0, 2, 3}, 8), LFunctionError);

    for (const auto &c : corollary_checks("mod12", f6, 8)) {
        CAPTURE(c.identity);
        CHECK(c.pass);
    }
    CHECK_THROWS_AS(corollary_checks("mod7", f6, 8), LFunctionError);

    auto j = to_json(checks.front(), 8);
    CHECK(j.contains("identity"));
    CHECK(j.contains("abs_error"));
    CHECK(j["pass"].get<bool>());
}
