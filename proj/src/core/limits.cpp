#include "apery/core/limits.hpp"

#include <array>
#include <cmath>

#include "apery/analytic/extrapolate.hpp"

namespace apery::core {

RateFit fit_rate(const std::vector<long> &ns, const std::vector<Real> &ratios, const Real &target,
                 const std::string &model, const Real &floor)
{
    RateFit fit;
    fit.model = model;
    std::vector<double> x, y;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        Real e = analytic::abs(ratios[i] - target);
        if (e <= floor || e.is_zero())
            continue;
        double n = static_cast<double>(ns[i]);
        if (model == "geometric")
            x.push_back(n);
        else if (model == "power")
            x.push_back(std::log(n));
        else if (model == "loglike")
            x.push_back(std::log(std::log(n)));
        else
            throw std::invalid_argument("unknown rate model '" + model + "'");
        y.push_back(e.log10_abs() * std::log(10.0));
    }
    fit.points = static_cast<int>(x.size());
    if (x.size() < 20) {
        fit.note = "unmeasurable: " + std::to_string(x.size()) + " points above the precision floor";
        return fit;
    }
    auto lf = analytic::linear_fit(x, y);
    fit.measurable = true;
    fit.r2 = lf.r2;
    fit.fitted = model == "geometric" ? std::exp(lf.slope) : lf.slope;
    return fit;
}

namespace {

// Least squares for y ~ sum_k c_k phi_k(x) with up to three basis functions.
template <std::size_t K>
std::array<long double, K> least_squares(const std::vector<std::array<long double, K>> &rows,
                                         const std::vector<long double> &y, long double &rss)
{
    std::array<std::array<long double, K + 1>, K> M{};
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t a = 0; a < K; ++a) {
            for (std::size_t b = 0; b < K; ++b)
                M[a][b] += rows[i][a] * rows[i][b];
            M[a][K] += rows[i][a] * y[i];
        }
    for (std::size_t c = 0; c < K; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < K; ++r)
            if (std::fabs(M[r][c]) > std::fabs(M[piv][c]))
                piv = r;
        std::swap(M[c], M[piv]);
        for (std::size_t r = 0; r < K; ++r) {
            if (r == c || M[c][c] == 0)
                continue;
            long double f = M[r][c] / M[c][c];
            for (std::size_t k = c; k <= K; ++k)
                M[r][k] -= f * M[c][k];
        }
    }
    std::array<long double, K> sol{};
    for (std::size_t c = 0; c < K; ++c)
        sol[c] = M[c][c] == 0 ? 0 : M[c][K] / M[c][c];
    rss = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        long double v = -y[i];
        for (std::size_t a = 0; a < K; ++a)
            v += sol[a] * rows[i][a];
        rss += v * v;
    }
    return sol;
}

} // namespace

ModelFit fit_power_model(const std::vector<long> &ns, const std::vector<double> &r, double p)
{
    std::vector<std::array<long double, 3>> rows;
    std::vector<long double> y(r.begin(), r.end());
    for (long n : ns) {
        long double u = std::pow(static_cast<long double>(n), -p);
        rows.push_back({1.0L, u, u * u});
    }
    long double rss = 0;
    auto c = least_squares<3>(rows, y, rss);
    return {static_cast<double>(c[0]), static_cast<double>(c[1]), static_cast<double>(c[2]),
            static_cast<double>(std::sqrt(rss / static_cast<long double>(ns.size())))};
}

ModelFit fit_shifted_log_model(const std::vector<long> &ns, const std::vector<double> &r)
{
    std::vector<long double> y(r.begin(), r.end());
    double lmin = std::log(static_cast<double>(ns.front()));
    auto solve = [&](double shift, ModelFit &out) {
        std::vector<std::array<long double, 2>> rows;
        for (long n : ns)
            rows.push_back({1.0L, 1.0L / (std::log(static_cast<long double>(n)) + shift)});
        long double rss = 0;
        auto c = least_squares<2>(rows, y, rss);
        out = {static_cast<double>(c[0]), static_cast<double>(c[1]), shift,
               static_cast<double>(std::sqrt(rss / static_cast<long double>(ns.size())))};
        return static_cast<double>(rss);
    };
    // The shift keeps log n + c2 positive over the range.
    double lo = -lmin + 0.5, hi = 200.0;
    ModelFit best{};
    double best_rss = INFINITY;
    const int grid = 400;
    double best_x = lo;
    for (int i = 0; i <= grid; ++i) {
        double s = lo + (hi - lo) * i / grid;
        ModelFit f;
        double v = solve(s, f);
        if (v < best_rss) {
            best_rss = v;
            best = f;
            best_x = s;
        }
    }
    double a = std::max(lo, best_x - (hi - lo) / grid), b = std::min(hi, best_x + (hi - lo) / grid);
    const double g = (std::sqrt(5.0) - 1) / 2;
    for (int it = 0; it < 100; ++it) {
        double x1 = b - g * (b - a), x2 = a + g * (b - a);
        ModelFit f1, f2;
        if (solve(x1, f1) < solve(x2, f2))
            b = x2;
        else
            a = x1;
    }
    ModelFit f;
    if (solve((a + b) / 2, f) < best_rss)
        best = f;
    return best;
}

} // namespace apery::core
