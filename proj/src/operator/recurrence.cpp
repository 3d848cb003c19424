#include "apery/operator/recurrence.hpp"

namespace apery::op {

Poly Recurrence::characteristic() const
{
    std::vector<Rational> c(terms.size());
    for (std::size_t j = 0; j < terms.size(); ++j)
        c[j] = terms[j].coeff(order);
    return Poly(std::move(c));
}

Recurrence Recurrence::with_rhs(Poly source) const
{
    Recurrence r = *this;
    r.rhs = std::move(source);
    return r;
}

Recurrence ode_to_recurrence(const ThetaOperator &op, const Poly &rhs)
{
    int d = op.degree();
    if (!rhs.is_zero() && rhs.coeff(0) != 0)
        throw OperatorError("source has a nonzero constant term");
    if (d >= 1 && rhs.degree() >= d)
        throw OperatorError("source degree " + std::to_string(rhs.degree()) + " is not below the operator degree " +
                            std::to_string(d));
    Recurrence rec;
    rec.order = op.order();
    rec.rhs = rhs;
    for (int j = 0; j <= d; ++j)
        rec.terms.push_back(op.P(j).shifted(Rational(-j)));
    return rec;
}

std::vector<Poly> shifted_form(const ThetaOperator &op)
{
    int d = op.degree();
    std::vector<Poly> out;
    for (int j = 0; j <= d; ++j)
        out.push_back(op.P(j).shifted(Rational(d - j)));
    return out;
}

Rational recurrence_residual(const Recurrence &rec, const std::vector<Rational> &u, std::size_t m)
{
    Rational mm(static_cast<long>(m));
    Rational r = 0;
    for (int j = 0; j <= rec.degree(); ++j) {
        if (static_cast<std::size_t>(j) > m)
            break;
        r += rec.terms[j](mm) * u.at(m - j);
    }
    return r - rec.rhs.coeff(static_cast<int>(m));
}

std::vector<TermDiscrepancy> audit_recurrence(const ThetaOperator &op, const std::vector<Poly> &stated)
{
    auto derived = shifted_form(op);
    std::vector<TermDiscrepancy> out;
    std::size_t n = std::max(derived.size(), stated.size());
    for (std::size_t j = 0; j < n; ++j) {
        Poly s = j < stated.size() ? stated[j] : Poly();
        Poly d = j < derived.size() ? derived[j] : Poly();
        if (s != d)
            out.push_back({static_cast<int>(j), s, d});
    }
    return out;
}

} // namespace apery::op
