#include "apery/lfunctions/lseries.hpp"

#include <algorithm>
#include <cmath>

namespace apery::lfun {

CoefficientStream::CoefficientStream(std::string name, Generator gen) : name_(std::move(name)), gen_(std::move(gen))
{
}

void CoefficientStream::ensure(std::size_t N)
{
    if (!data_.empty() && top() >= N)
        return;
    std::size_t want = std::max(N, data_.empty() ? N : 2 * top());
    auto fresh = gen_(want);
    if (fresh.size() < want + 1)
        throw LFunctionError("coefficient generator for " + name_ + " returned too few terms");
    data_ = std::move(fresh);
}

double CoefficientStream::growth_constant(int sigma) const
{
    double C = 0;
    for (std::size_t n = 1; n < data_.size(); ++n)
        if (data_[n] != 0)
            C = std::max(C, std::fabs(static_cast<double>(data_[n])) / std::pow(static_cast<double>(n), sigma));
    return C * (1 + 1e-12);
}

LSeriesData LSeriesData::dual() const
{
    LSeriesData out = *this;
    out.coeffs = dual_coeffs;
    out.dual_coeffs = coeffs;
    out.a_over_c = -d_over_c;
    out.d_over_c = -a_over_c;
    if (eps) {
        Complex inv = eps->conj();
        out.eps = weight % 2 == 0 ? inv : -inv;
    }
    return out;
}

Real upper_gamma_int(int m, const Real &x)
{
    if (m < 1)
        throw LFunctionError("upper_gamma_int needs m >= 1");
    // Gamma(m, x) = (m-1)! e^{-x} sum_{j<m} x^j / j!
    Precision p = x.precision();
    Real sum(1L, p), term(1L, p);
    for (int j = 1; j < m; ++j) {
        term = term * x / static_cast<long>(j);
        sum += term;
    }
    long fact = 1;
    for (int j = 2; j < m; ++j)
        fact *= j;
    return sum * exp(-x) * fact;
}

namespace {

long factorial(int m)
{
    long f = 1;
    for (int j = 2; j <= m; ++j)
        f *= j;
    return f;
}

// Number of terms after which sum_{n>M} C n^sigma (alpha n)^{-m} Gamma(m, alpha y n)
// drops below 10^{-digits}.
std::size_t tail_terms(double C, int sigma, int m, double alpha, double y, int digits, double &tail)
{
    const double rate = alpha * y;
    const double target = -digits * std::log(10.0) - std::log(4.0);
    auto log_term = [&](double n) {
        double x = rate * n;
        return std::log(std::max(C, 1e-300)) + sigma * std::log(n) - m * std::log(alpha * n) +
               std::log(static_cast<double>(factorial(m - 1))) + (m - 1) * std::log1p(x) - x;
    };
    for (std::size_t M = 1;; ++M) {
        double n = static_cast<double>(M + 1);
        double growth = (sigma + m) * std::log1p(1.0 / n) - rate;
        if (growth < -1e-3) {
            double lt = log_term(n) - std::log1p(-std::exp(growth));
            if (lt < target) {
                tail = std::exp(lt);
                return M;
            }
        }
        if (M > 50000000)
            throw LFunctionError("smoothed sum needs too many terms");
    }
}

struct SplitSums {
    Complex S1;
    Complex S2;
};

std::vector<Complex> phase_table(const mpq_class &r, Precision prec)
{
    mpz_class den = r.get_den();
    if (!den.fits_slong_p() || den > 100000)
        throw LFunctionError("phase denominator too large");
    long P = den.get_si();
    std::vector<Complex> t;
    for (long n = 0; n < P; ++n)
        t.push_back(analytic::unit_root(r * n, prec));
    return t;
}

class Evaluator {
public:
    Evaluator(const LSeriesData &spec, int s, int digits) : spec_(spec), s_(s), k_(spec.weight)
    {
        if (!spec.coeffs || !spec.dual_coeffs)
            throw LFunctionError("L-series data without coefficient streams");
        if (s_ <= 0 || s_ >= k_)
            throw LFunctionError("s must lie strictly between 0 and the weight");
        if (spec.scale_sq <= 0)
            throw LFunctionError("scale must be positive");
        wp_ = analytic::bits_for_digits(digits, 48);
        digits_ = digits;
        c_ = analytic::sqrt(Real(spec.scale_sq, wp_));
        alpha_ = analytic::const_pi(wp_) * 2L / c_;
        ph1_ = phase_table(spec.a_over_c, wp_);
        ph2_ = phase_table(-spec.d_over_c, wp_);
    }

    // S1 and S2 with the Gamma arguments at y and 1/y.
    SplitSums sums(const mpq_class &y, Real &tail)
    {
        double alpha = alpha_.to_double();
        double yd = y.get_d();
        // Stream growth: sigma = k covers divisor-bounded weight-k coefficients.
        auto &c1 = *spec_.coeffs;
        auto &c2 = *spec_.dual_coeffs;
        std::size_t probe = 200;
        c1.ensure(probe);
        c2.ensure(probe);
        double t1 = 0, t2 = 0;
        std::size_t M1 = tail_terms(c1.growth_constant(k_), k_, s_, alpha, yd, digits_, t1);
        std::size_t M2 = tail_terms(c2.growth_constant(k_), k_, k_ - s_, alpha, 1.0 / yd, digits_, t2);
        c1.ensure(M1);
        c2.ensure(M2);
        terms_ = std::max(terms_, std::max(M1, M2));
        tail = Real(t1 + t2, wp_);

        Real yr(y, wp_);
        SplitSums out{Complex(wp_), Complex(wp_)};
        for (std::size_t n = 1; n <= M1; ++n) {
            std::int64_t c = c1[n];
            if (c == 0)
                continue;
            Real x = alpha_ * static_cast<long>(n);
            Real w = upper_gamma_int(s_, x * yr) / pow(x, s_) * Real(static_cast<long>(c), wp_);
            out.S1 += ph1_[n % ph1_.size()] * w;
        }
        for (std::size_t n = 1; n <= M2; ++n) {
            std::int64_t c = c2[n];
            if (c == 0)
                continue;
            Real x = alpha_ * static_cast<long>(n);
            Real w = upper_gamma_int(k_ - s_, x / yr) / pow(x, k_ - s_) * Real(static_cast<long>(c), wp_);
            out.S2 += ph2_[n % ph2_.size()] * w;
        }
        // Constant terms: -c_0 y^s / s and -c*_0 y^{s-k} / (k-s).
        if (c1[0] != 0)
            out.S1.re() -= pow(yr, s_) * static_cast<long>(c1[0]) / static_cast<long>(s_);
        if (c2[0] != 0)
            out.S2.re() -= pow(yr, s_ - k_) * static_cast<long>(c2[0]) / static_cast<long>(k_ - s_);
        return out;
    }

    Complex ik() const { return analytic::i_pow(k_, wp_); }
    // (2 pi / c)^{-s} Gamma(s)
    Real normalizer() const { return pow(alpha_, -static_cast<long>(s_)) * factorial(s_ - 1); }
    Precision wp() const { return wp_; }
    std::size_t terms() const { return terms_; }

private:
    const LSeriesData &spec_;
    int s_, k_;
    int digits_ = 30;
    Precision wp_ = 128;
    Real c_, alpha_;
    std::vector<Complex> ph1_, ph2_;
    std::size_t terms_ = 0;
};

Complex snap_root_of_unity(const Complex &z, Precision prec)
{
    double re = z.re().to_double(), im = z.im().to_double();
    double ang = std::atan2(im, re);
    long k = std::lround(ang * 24 / (2 * M_PI));
    Complex w = analytic::unit_root(mpq_class(k, 24), prec);
    double dist = abs(z - w).to_double();
    if (!(dist < 1e-10))
        throw LFunctionError("root number " + z.to_string(12) + " is not within 1e-10 of a 24th root of unity");
    return w;
}

} // namespace

Complex detect_root_number(const LSeriesData &spec, int s, int target_digits, const mpq_class &y_probe)
{
    Evaluator ev(spec, s, target_digits);
    Real tail(ev.wp());
    auto a = ev.sums(1, tail);
    auto b = ev.sums(y_probe, tail);
    Complex den = ev.ik() * (a.S2 - b.S2);
    if (abs(den).is_zero())
        throw LFunctionError("degenerate probe: dual sums do not vary with the split point");
    return snap_root_of_unity((b.S1 - a.S1) / den, ev.wp());
}

SmoothedValue lvalue_smoothed(const LSeriesData &spec, int s, int target_digits)
{
    SmoothedValue out;
    out.eps = spec.eps ? *spec.eps : detect_root_number(spec, s, std::max(30, target_digits));
    Evaluator ev(spec, s, target_digits);
    Complex factor = ev.ik() * out.eps;
    Real tail(ev.wp());
    auto main = ev.sums(1, tail);
    Complex lambda = main.S1 + factor * main.S2;
    Real residual(0L, ev.wp());
    for (const mpq_class &y : {mpq_class(4, 5), mpq_class(3, 2)}) {
        Real t(ev.wp());
        auto alt = ev.sums(y, t);
        Complex other = alt.S1 + factor * alt.S2;
        residual = analytic::max(residual, abs(other - lambda));
    }
    Real norm = ev.normalizer();
    Complex inv(Real(1L, ev.wp()) / norm, Real(0L, ev.wp()));
    out.value = lambda * inv;
    out.error_bound = tail / norm;
    out.fe_residual = residual / norm;
    out.terms = ev.terms();
    Real tol = analytic::pow10(-(target_digits - 5), ev.wp());
    if (out.fe_residual > tol)
        throw LFunctionError("functional-equation residual " + out.fe_residual.to_string(3) +
                             " exceeds tolerance; wrong root number or scale");
    return out;
}

} // namespace apery::lfun
