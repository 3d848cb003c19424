#include "apery/lfunctions/abel.hpp"

#include <cmath>

#include "apery/analytic/extrapolate.hpp"

namespace apery::lfun {

namespace {

// Cutoff where the e^{-delta n} tail of C n^{sigma-s} is below e^{-46}.
std::size_t cutoff(double delta, double C, int exponent)
{
    double logC = std::log(std::max(C, 1.0));
    for (std::size_t N = 16;; N += N / 8) {
        double n = static_cast<double>(N);
        double lt = logC + (exponent + 1) * std::log(n) - delta * n - std::log(delta);
        if (lt < -46)
            return N;
    }
}

} // namespace

AbelResult abel_regularized_sum(CoefficientStream &coeffs, const std::vector<Complex> &weights, int s,
                                const AbelOptions &opts)
{
    if (weights.empty())
        throw LFunctionError("empty weight table");
    if (opts.lo_exp >= opts.hi_exp || opts.order < 1 || opts.hi_exp - opts.lo_exp < opts.order + 1)
        throw LFunctionError("Abel ladder too short for the extrapolation order");
    const Precision p = opts.prec;
    const std::size_t P = weights.size();

    coeffs.ensure(512);
    double C = coeffs.growth_constant(s);
    double d_min = std::ldexp(1.0, -opts.hi_exp);
    std::size_t Nmax = cutoff(d_min, C, 0);
    coeffs.ensure(Nmax);

    // c_n n^{-s} once.
    std::vector<std::pair<std::size_t, Real>> terms;
    for (std::size_t n = 1; n <= Nmax; ++n) {
        std::int64_t c = coeffs[n];
        if (c == 0)
            continue;
        const Complex &wr = weights[n % P];
        if (wr.re().is_zero() && wr.im().is_zero())
            continue;
        Real v(static_cast<long>(c), p);
        Real ns(static_cast<long>(n), p);
        v /= pow(ns, s);
        terms.emplace_back(n, std::move(v));
    }

    AbelResult out;
    out.terms = Nmax;
    std::vector<Real> xs;
    std::vector<Complex> ys;
    for (int e = opts.lo_exp; e <= opts.hi_exp; ++e) {
        double dd = std::ldexp(1.0, -e);
        std::size_t N = cutoff(dd, C, 0);
        Real delta(dd, p);
        Real step = exp(-delta);
        std::vector<Real> per(P, Real(0L, p));
        Real damp(1L, p);
        std::size_t at = 0;
        for (const auto &[n, v] : terms) {
            if (n > N)
                break;
            // advance e^{-delta n}
            if (n - at == 1)
                damp *= step;
            else
                damp *= exp(-delta * static_cast<long>(n - at));
            at = n;
            per[n % P] += v * damp;
        }
        Complex total(p);
        for (std::size_t r = 0; r < P; ++r)
            if (!per[r].is_zero())
                total += weights[r] * per[r];
        xs.push_back(delta);
        ys.push_back(total);
    }
    out.ladder = ys;

    const std::size_t w = static_cast<std::size_t>(opts.order) + 1;
    auto window = [&](std::size_t end) {
        std::vector<Real> x(xs.begin() + static_cast<std::ptrdiff_t>(end - w), xs.begin() + static_cast<std::ptrdiff_t>(end));
        std::vector<Complex> y(ys.begin() + static_cast<std::ptrdiff_t>(end - w), ys.begin() + static_cast<std::ptrdiff_t>(end));
        return analytic::neville_at_zero(x, y);
    };
    Complex last = window(xs.size());
    Complex prev = window(xs.size() - 1);
    out.error_estimate = abs(last - prev).to_double();
    if (xs.size() >= w + 2) {
        Complex prev2 = window(xs.size() - 2);
        double earlier = abs(prev - prev2).to_double();
        double scale = std::max(1.0, abs(last).to_double());
        if (out.error_estimate > 10 * earlier && out.error_estimate > 1e-6 * scale)
            throw LFunctionError("Abel extrapolation diverges: successive estimates differ by " +
                                 std::to_string(out.error_estimate));
    }
    out.value = last;
    return out;
}

AbelResult abel_twisted(CoefficientStream &coeffs, const mpq_class &phase, int s, const AbelOptions &opts)
{
    mpz_class den = phase.get_den();
    if (!den.fits_slong_p() || den > 100000)
        throw LFunctionError("twist denominator too large");
    std::vector<Complex> w;
    for (long r = 0; r < den.get_si(); ++r)
        w.push_back(analytic::unit_root(phase * r, opts.prec));
    return abel_regularized_sum(coeffs, w, s, opts);
}

AbelResult abel_residue_class(CoefficientStream &coeffs, long residue, long modulus, int s, const AbelOptions &opts)
{
    if (modulus < 1)
        throw LFunctionError("modulus must be positive");
    std::vector<Complex> w(static_cast<std::size_t>(modulus), Complex(opts.prec));
    w[static_cast<std::size_t>(((residue % modulus) + modulus) % modulus)] = Complex(Real(1L, opts.prec), Real(0L, opts.prec));
    return abel_regularized_sum(coeffs, w, s, opts);
}

} // namespace apery::lfun
