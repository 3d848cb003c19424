#pragma once

// Truncated q-series with exact rational coefficients.
//
// A QSeries stores q^lead * (c_0 + c_1 q + ... + c_N q^N) + O(q^{lead+N+1}).
// The lead exponent may be fractional (eta prefactors q^{m/24}); the
// coefficient steps are always integral.

#include <optional>
#include <vector>

#include <json.hpp>

#include "apery/series/rational.hpp"

namespace apery::series {

class QSeries {
public:
    /// The constant 1 known through relative order N.
    static QSeries one(int N);
    static QSeries constant(const Rational &c, int N);
    /// c * q^exponent known through relative order N.
    static QSeries monomial(const Rational &exponent, const Rational &c, int N);
    /// O(q^{lead+N+1}): all coefficients zero.
    static QSeries zero(const Rational &lead, int N);

    QSeries(Rational lead, std::vector<Rational> coeffs);
    QSeries(Rational lead, const std::vector<Integer> &coeffs);

    const Rational &lead_exp() const { return lead_; }
    int trunc_order() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Largest absolute exponent whose coefficient is known.
    Rational abs_order() const { return lead_ + trunc_order(); }
    const std::vector<Rational> &coeffs() const { return coeffs_; }
    const Rational &operator[](std::size_t i) const { return coeffs_.at(i); }

    /// Coefficient of q^exponent. Zero below the lead or off the exponent
    /// lattice; throws beyond the truncation order.
    Rational coeff_at(const Rational &exponent) const;

    bool is_zero() const;
    bool is_integral() const;
    /// Strip leading zero coefficients, raising the lead exponent.
    QSeries normalized() const;
    QSeries truncated(int N) const;
    /// Multiply by q^shift.
    QSeries shifted(const Rational &shift) const;

    QSeries operator-() const;
    QSeries &operator*=(const Rational &c);

private:
    Rational lead_;
    std::vector<Rational> coeffs_;
};

QSeries operator+(const QSeries &a, const QSeries &b);
QSeries operator-(const QSeries &a, const QSeries &b);
QSeries operator*(const QSeries &a, const QSeries &b);
QSeries operator*(const QSeries &a, const Rational &c);
QSeries operator*(const Rational &c, const QSeries &a);
QSeries operator/(const QSeries &a, const QSeries &b);
QSeries inverse(const QSeries &a);
QSeries int_pow(const QSeries &a, long e);

/// q d/dq
QSeries theta_q(const QSeries &a);

/// p(t) = sum p_i t^i for a series t with positive lead exponent, known
/// through the same absolute order as t.
QSeries polynomial_in(const std::vector<Rational> &p, const QSeries &t, int N);

/// Equality over the shared range of absolute exponents.
bool operator==(const QSeries &a, const QSeries &b);
inline bool operator!=(const QSeries &a, const QSeries &b) { return !(a == b); }

/// Smallest absolute exponent at which a and b differ within their shared
/// range, if any.
std::optional<Rational> first_mismatch(const QSeries &a, const QSeries &b);

nlohmann::json to_json(const QSeries &s);
QSeries qseries_from_json(const nlohmann::json &j);

} // namespace apery::series
