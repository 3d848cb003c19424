#include "apery/operator/verify.hpp"

namespace apery::op {

namespace {

void require_t(const QSeries &t, int N)
{
    if (t.lead_exp() != 1)
        throw OperatorError("t must have lead exponent 1");
    if (t.abs_order() < N + 1)
        throw OperatorError("t is not known through q^" + std::to_string(N + 1));
    if (t[0] == 0)
        throw OperatorError("theta_q t has zero leading coefficient");
}

void require_A(const QSeries &A, int N)
{
    if (A.lead_exp() != 0 || A[0] != 1)
        throw OperatorError("A must have constant term 1");
    if (A.abs_order() < N)
        throw OperatorError("A is not known through q^" + std::to_string(N));
}

// t/q and (theta_q t)/q as lead-0 series through q^N.
std::pair<QSeries, QSeries> reduced(const QSeries &t, int N)
{
    QSeries tq = t.shifted(-1).truncated(N);
    QSeries th = theta_q(t).shifted(-1).truncated(N);
    return {tq, th};
}

std::vector<Rational> coeffs_of(const Poly &p)
{
    return p.coeffs();
}

} // namespace

QSeries theta_ratio(const QSeries &t, int N)
{
    require_t(t, N);
    auto [tq, th] = reduced(t, N);
    return tq / th;
}

QSeries log_derivative(const QSeries &t, int N)
{
    require_t(t, N);
    auto [tq, th] = reduced(t, N);
    return th / tq;
}

OdeReport verify_ode(const ThetaOperator &op, const QSeries &t, const QSeries &A, int N)
{
    require_A(A, N);
    QSeries R = theta_ratio(t, N);
    QSeries X = A.truncated(N);
    QSeries LA = QSeries::zero(0, N);
    // L A = sum_i (theta_t^i A) * c_i(t), with c_i the theta^i coefficient.
    for (int i = 0; i <= op.order(); ++i) {
        if (i > 0)
            X = theta_q(X) * R;
        Poly c = op.theta_coefficient(i);
        if (c.is_zero())
            continue;
        LA = LA + X * polynomial_in(coeffs_of(c), t, N);
    }
    OdeReport rep;
    rep.residual = LA;
    for (int e = 0; e <= N; ++e) {
        const Rational &c = LA[static_cast<std::size_t>(e)];
        if (c != 0) {
            rep.first_failure = e;
            rep.failure_coefficient = c;
            rep.verified_to = e - 1;
            return rep;
        }
    }
    rep.verified_to = N;
    return rep;
}

QSeries build_integrand(const QSeries &t, const QSeries &A, const Poly &g_num, const Poly &g_den, int order, int N)
{
    require_A(A, N);
    QSeries G = int_pow(log_derivative(t, N), order);
    QSeries num = polynomial_in(coeffs_of(g_num), t, N);
    QSeries den = polynomial_in(coeffs_of(g_den), t, N);
    if (den[0] == 0)
        throw OperatorError("g denominator vanishes at t = 0");
    QSeries f = G * num / (den * A.truncated(N));
    if (f[0] != 0)
        throw OperatorError("integrand has a nonvanishing constant term " + f[0].get_str());
    return f;
}

} // namespace apery::op
