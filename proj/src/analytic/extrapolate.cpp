#include "apery/analytic/extrapolate.hpp"

#include <cmath>

#include "apery/analytic/constants.hpp"

namespace apery::analytic {

namespace {

template <class T>
T neville(const std::vector<Real> &xs, std::vector<T> P)
{
    if (xs.size() != P.size() || xs.empty())
        throw EvalError("neville: mismatched or empty abscissae");
    const std::size_t n = xs.size();
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t i = 0; i + k < n; ++i) {
            Real den = xs[i + k] - xs[i];
            if (den.is_zero())
                throw EvalError("neville: repeated abscissa");
            // P_i <- (x_{i+k} P_i - x_i P_{i+1}) / (x_{i+k} - x_i)
            T num = P[i] * xs[i + k] - P[i + 1] * xs[i];
            P[i] = num * (Real(1L, den.precision()) / den);
        }
    return P[0];
}

} // namespace

Real neville_at_zero(const std::vector<Real> &xs, const std::vector<Real> &ys) { return neville(xs, ys); }

Complex neville_at_zero(const std::vector<Real> &xs, const std::vector<Complex> &ys) { return neville(xs, ys); }

std::vector<Real> aitken_delta2(const std::vector<Real> &s)
{
    std::vector<Real> out;
    for (std::size_t i = 0; i + 2 < s.size(); ++i) {
        Real d1 = s[i + 1] - s[i];
        Real d2 = s[i + 2] - s[i + 1];
        Real den = d2 - d1;
        if (den.is_zero())
            out.push_back(s[i + 2]);
        else
            out.push_back(s[i + 2] - d2 * d2 / den);
    }
    return out;
}

LinearFit linear_fit(const std::vector<double> &x, const std::vector<double> &y)
{
    if (x.size() != y.size() || x.size() < 2)
        throw EvalError("linear_fit needs at least two points");
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0)
        throw EvalError("linear_fit: degenerate abscissae");
    LinearFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double sse = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double r = y[i] - f.intercept - f.slope * x[i];
        sse += r * r;
    }
    f.r2 = syy > 0 ? 1 - sse / syy : 1;
    f.rms = std::sqrt(sse / n);
    return f;
}

} // namespace apery::analytic
