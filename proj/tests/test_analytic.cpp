#include <doctest.h>

#include <cmath>

#include "apery/analytic/constants.hpp"
#include "apery/analytic/eichler.hpp"
#include "apery/analytic/extrapolate.hpp"
#include "oracles.hpp"

using namespace apery::analytic;

TEST_CASE("constants against MPFR")
{
    const Precision p = 400;
    Real pi = oracle::pi(p);
    CHECK(oracle::abs_diff(constant(Constant::pi, p), pi) < 1e-115);
    CHECK(oracle::abs_diff(constant(Constant::pi2, p), pi * pi) < 1e-115);
    CHECK(oracle::abs_diff(constant(Constant::zeta2, p), oracle::zeta(2, p)) < 1e-115);
    CHECK(oracle::abs_diff(constant(Constant::zeta3, p), oracle::zeta(3, p)) < 1e-115);
    CHECK(oracle::abs_diff(constant(Constant::L2_chi_minus1, p), oracle::catalan(p)) < 1e-115);
    CHECK(constant(Constant::L2_chi3, 128).to_double() == doctest::Approx(static_cast<double>(oracle::l2_chi3())).epsilon(1e-13));

    CHECK(parse_constant("zeta3") == Constant::zeta3);
    CHECK(to_string(Constant::L2_chi3) == "L2_chi3");
    CHECK_THROWS_AS(parse_constant("zeta5"), EvalError);
}

TEST_CASE("Hurwitz zeta")
{
    const Precision p = 300;
    CHECK(oracle::abs_diff(hurwitz_zeta(3, 1, p), oracle::zeta(3, p)) < 1e-85);
    // zeta(s, 1/2) = (2^s - 1) zeta(s)
    CHECK(oracle::abs_diff(hurwitz_zeta(4, mpq_class(1, 2), p), oracle::zeta(4, p) * 15L) < 1e-85);
    // sum over r/6 of zeta(s, r/6) = 6^s zeta(s)
    Real s(p);
    for (long r = 1; r <= 6; ++r)
        s += hurwitz_zeta(2, mpq_class(r, 6), p);
    CHECK(oracle::abs_diff(s, oracle::zeta(2, p) * 36L) < 1e-85);
    // Catalan: (zeta(2, 1/4) - zeta(2, 3/4)) / 16
    Real g = (hurwitz_zeta(2, mpq_class(1, 4), p) - hurwitz_zeta(2, mpq_class(3, 4), p)) / 16L;
    CHECK(oracle::abs_diff(g, oracle::catalan(p)) < 1e-85);

    CHECK(oracle::abs_diff(periodic_dirichlet_series(2, {0, 1, 0, -1}, p), oracle::catalan(p)) < 1e-85);
    CHECK(oracle::abs_diff(periodic_dirichlet_series(3, {1}, p), oracle::zeta(3, p)) < 1e-85);
}

TEST_CASE("Bernoulli numbers")
{
    auto B = bernoulli_numbers(12);
    CHECK(B[0] == 1);
    CHECK(B[1] == mpq_class(-1, 2));
    CHECK(B[2] == mpq_class(1, 6));
    CHECK(B[3] == 0);
    CHECK(B[4] == mpq_class(-1, 30));
    CHECK(B[12] == mpq_class(-691, 2730));
}

TEST_CASE("real and complex arithmetic")
{
    Real x("1.5", 128);
    CHECK((x * 2L).to_double() == 3.0);
    CHECK(bits_for_digits(30) == 100);
    CHECK(pow10(-3, 128).to_double() == doctest::Approx(1e-3));
    CHECK(Real(mpq_class(1, 3), 64).with_precision(256).precision() == 256);

    Complex i = i_pow(1, 128);
    Complex m = i * i;
    CHECK(m.re().to_double() == -1.0);
    CHECK(m.im().is_zero());
    Complex w = unit_root(mpq_class(1, 3), 200);
    Complex w3 = w * w * w;
    CHECK(std::abs(w3.re().to_double() - 1) < 1e-55);
    CHECK(std::abs(w3.im().to_double()) < 1e-55);
    CHECK(unit_root(mpq_class(-3, 4), 64).im().to_double() == 1.0);
    CHECK(abs(Complex(Real(3L, 64), Real(4L, 64))).to_double() == 5.0);
    CHECK((Complex(Real(1L, 64), Real(1L, 64)) / Complex(Real(1L, 64), Real(-1L, 64))).im().to_double() == 1.0);
}

TEST_CASE("Eichler sums with known closed forms")
{
    const Precision p = 256;
    // tau = i, q = e^{-2 pi}
    Complex tau(Real(0L, p), Real(1L, p));
    Real q = exp(-oracle::pi(p) * 2L);

    SUBCASE("sum q^n / n = -log(1 - q)")
    {
        std::vector<mpq_class> c(400, 1);
        c[0] = 0;
        EichlerSeries E(std::move(c), 1, CoefficientBound{1.0, 0});
        auto v = eichler_eval(E, tau, 50);
        Real want = -log(Real(1L, p) - q);
        CHECK(oracle::abs_diff(v.value.re(), want) < 1e-48);
        CHECK(std::abs(v.value.im().to_double()) < 1e-48);
        CHECK(v.error_bound.to_double() <= 1e-50);
    }

    SUBCASE("divisor Lambert sum against a double loop")
    {
        Real x("0.1", p);
        Complex cx(x, Real(0L, p));
        auto v = lambert_character_sum(cx, {1}, 2, 40);
        Real want(p);
        for (long n = 1; n <= 60; ++n)
            for (long m = 1; m * n <= 60; ++m)
                want += pow(x, n * m) / Real(n * n, p);
        CHECK(oracle::abs_diff(v.value.re(), want) < 1e-38);
    }

    SUBCASE("Ramanujan sum against direct summation")
    {
        Real x("0.05", p);
        auto v = ramanujan_sum(Complex(x, Real(0L, p)), 40);
        Real want(p);
        for (long n = 1; n <= 60; ++n) {
            long chi = n % 3 == 0 ? 0 : (n % 3 == 1 ? 1 : -1);
            if (chi == 0)
                continue;
            Real xn = pow(x, n);
            want += xn / ((Real(1L, p) - xn) * Real(n * n, p)) * chi;
        }
        CHECK(oracle::abs_diff(v.value.re(), want) < 1e-38);
    }

    SUBCASE("default coefficient bound")
    {
        auto b = coefficient_bound({0, 1, -4, 9, 16}, 2);
        CHECK(b.C == doctest::Approx(1.0));
        CHECK_THROWS(EichlerSeries(apery::series::QSeries(0, std::vector<mpq_class>{1, 2}), 1));
    }
}

TEST_CASE("extrapolation helpers")
{
    const Precision p = 200;
    SUBCASE("Neville reproduces polynomials")
    {
        std::vector<Real> xs, ys;
        for (long i = 1; i <= 5; ++i) {
            Real x(mpq_class(1, i + 1), p);
            xs.push_back(x);
            ys.push_back(Real(7L, p) - x * 3L + x * x * x * x * 2L);
        }
        CHECK(oracle::abs_diff(neville_at_zero(xs, ys), Real(7L, p)) < 1e-55);
    }

    SUBCASE("Aitken is exact on geometric partial sums")
    {
        std::vector<Real> s;
        Real acc(p), term(1L, p);
        for (int i = 0; i < 6; ++i) {
            acc += term;
            s.push_back(acc);
            term *= Real(mpq_class(2, 3), p);
        }
        auto a = aitken_delta2(s);
        REQUIRE(a.size() == 4);
        for (const auto &v : a)
            CHECK(oracle::abs_diff(v, Real(3L, p)) < 1e-55);
    }

    SUBCASE("linear fit")
    {
        auto f = linear_fit({1, 2, 3, 4}, {3, 5, 7, 9});
        CHECK(f.slope == doctest::Approx(2));
        CHECK(f.intercept == doctest::Approx(1));
        CHECK(f.r2 == doctest::Approx(1));
    }
}
