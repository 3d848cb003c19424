#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apery/analytic/hp.hpp"

namespace apery::core {

using analytic::Precision;
using analytic::Real;

struct RateFit {
    std::string model;
    bool measurable = false;
    /// ratio per step (geometric), exponent (power) or slope against
    /// log log n (loglike)
    double fitted = 0;
    double r2 = 0;
    int points = 0;
    std::string note;
};

/// Fit log|r_n - target| against n, log n or log log n. Residuals at or
/// below floor are dropped; fewer than 20 usable points is unmeasurable.
RateFit fit_rate(const std::vector<long> &ns, const std::vector<Real> &ratios, const Real &target,
                 const std::string &model, const Real &floor);

struct ModelFit {
    double c0 = 0;
    double c1 = 0;
    double c2 = 0;
    double rms = 0;
};

/// r_n ~ c0 + c1 n^{-p} + c2 n^{-2p}
ModelFit fit_power_model(const std::vector<long> &ns, const std::vector<double> &r, double p);

/// r_n ~ c0 + c1 / (log n + c2), c2 found by a one-dimensional search.
ModelFit fit_shifted_log_model(const std::vector<long> &ns, const std::vector<double> &r);

struct LimitEstimate {
    Real value;
    Real raw_ratio;
    std::size_t n_used = 0;
    std::string method;
    RateFit rate;
    Real error_vs_target;
    std::optional<Real> aitken;
    /// min and max of |r_n - T| * scale(n) over the fit range
    double scaled_min = 0, scaled_max = 0;
};

} // namespace apery::core
