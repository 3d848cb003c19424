#pragma once

#include <vector>

#include "apery/analytic/hp.hpp"

namespace apery::analytic {

/// Value at x = 0 of the interpolating polynomial through (xs[i], ys[i]).
Real neville_at_zero(const std::vector<Real> &xs, const std::vector<Real> &ys);
Complex neville_at_zero(const std::vector<Real> &xs, const std::vector<Complex> &ys);

/// Aitken delta-squared transform; output has two fewer entries. Entries
/// with a vanishing second difference are passed through.
std::vector<Real> aitken_delta2(const std::vector<Real> &s);

/// Ordinary least squares y ~ c0 + c1 x.
struct LinearFit {
    double intercept = 0;
    double slope = 0;
    double r2 = 0;
    double rms = 0;
};

LinearFit linear_fit(const std::vector<double> &x, const std::vector<double> &y);

} // namespace apery::analytic
