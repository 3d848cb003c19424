#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apery/operator/theta_operator.hpp"

namespace apery::op {

/// m^order u_m + sum_{j=1}^{d} Q_j(m) u_{m-j} = rhs_m, with Q_j(m) = P_j(m-j).
struct Recurrence {
    int order = 0;
    /// Q_0 .. Q_d as polynomials in m; Q_0 = m^order.
    std::vector<Poly> terms;
    /// Inhomogeneous source as a polynomial in t.
    Poly rhs;

    int degree() const { return static_cast<int>(terms.size()) - 1; }
    /// Characteristic polynomial h(t) = sum_j lc(Q_j) t^j, read off the
    /// top coefficients.
    Poly characteristic() const;
    /// Same recurrence with a different source.
    Recurrence with_rhs(Poly source) const;
};

Recurrence ode_to_recurrence(const ThetaOperator &op, const Poly &rhs);

/// The recurrence as a (d+1)-term relation in n: coefficient of u_{n+d-j}
/// is R_j(n) = P_j(n+d-j).
std::vector<Poly> shifted_form(const ThetaOperator &op);

/// Exact residual m^order u_m + sum Q_j(m) u_{m-j} - rhs_m.
Rational recurrence_residual(const Recurrence &rec, const std::vector<Rational> &u, std::size_t m);

struct TermDiscrepancy {
    int index = 0; // j in the shifted form
    Poly stated;
    Poly derived;
};

/// Compare stated R_j(n) polynomials against the operator.
std::vector<TermDiscrepancy> audit_recurrence(const ThetaOperator &op, const std::vector<Poly> &stated);

} // namespace apery::op
