#pragma once

#include <optional>

#include "apery/operator/theta_operator.hpp"
#include "apery/series/qseries.hpp"

namespace apery::op {

using series::QSeries;

struct OdeReport {
    /// Absolute order through which L A vanishes (N on success).
    int verified_to = -1;
    /// First exponent with a nonzero coefficient of L A, if any.
    std::optional<int> first_failure;
    Rational failure_coefficient;
    QSeries residual = QSeries::one(0);

    bool ok() const { return !first_failure.has_value(); }
};

/// theta_t X = (theta_q X) * t / (theta_q t), as a lead-0 series through q^N.
/// t needs lead exponent 1 and must be known through q^{N+1}.
QSeries theta_ratio(const QSeries &t, int N);

/// Checks L A = O(q^{N+1}) in the q variable.
OdeReport verify_ode(const ThetaOperator &op, const QSeries &t, const QSeries &A, int N);

/// f = (theta_q t / t)^order g_num(t) / (g_den(t) A) through q^N. Throws
/// OperatorError when the constant term does not vanish.
QSeries build_integrand(const QSeries &t, const QSeries &A, const Poly &g_num, const Poly &g_den, int order, int N);

/// theta_q t / t through q^N.
QSeries log_derivative(const QSeries &t, int N);

} // namespace apery::op
