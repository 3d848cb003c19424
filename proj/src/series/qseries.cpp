#include "apery/series/qseries.hpp"

#include <algorithm>

namespace apery::series {

namespace {

std::vector<Integer> scaled_integers(const std::vector<Rational> &v, std::size_t len, Integer &den)
{
    std::vector<Rational> head(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(len));
    den = common_denominator(head);
    std::vector<Integer> out(len);
    for (std::size_t i = 0; i < len; ++i) {
        if (head[i] == 0)
            continue;
        out[i] = head[i].get_num() * (den / head[i].get_den());
    }
    return out;
}

Integer lattice_offset(const Rational &from, const Rational &to, bool &ok)
{
    Rational d = to - from;
    ok = d.get_den() == 1;
    return d.get_num();
}

} // namespace

QSeries QSeries::one(int N) { return constant(1, N); }

QSeries QSeries::constant(const Rational &c, int N) { return monomial(0, c, N); }

QSeries QSeries::monomial(const Rational &exponent, const Rational &c, int N)
{
    if (N < 0)
        throw SeriesError("negative truncation order");
    std::vector<Rational> coeffs(static_cast<std::size_t>(N) + 1);
    coeffs[0] = c;
    return QSeries(exponent, std::move(coeffs));
}

QSeries QSeries::zero(const Rational &lead, int N) { return monomial(lead, 0, N); }

QSeries::QSeries(Rational lead, std::vector<Rational> coeffs) : lead_(std::move(lead)), coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw SeriesError("a q-series needs at least one coefficient");
    lead_.canonicalize();
}

QSeries::QSeries(Rational lead, const std::vector<Integer> &coeffs) : lead_(std::move(lead))
{
    if (coeffs.empty())
        throw SeriesError("a q-series needs at least one coefficient");
    coeffs_.reserve(coeffs.size());
    for (const auto &c : coeffs)
        coeffs_.emplace_back(c);
    lead_.canonicalize();
}

Rational QSeries::coeff_at(const Rational &exponent) const
{
    bool ok = false;
    Integer off = lattice_offset(lead_, exponent, ok);
    if (!ok || off < 0)
        return 0;
    if (off > trunc_order())
        throw SeriesError("coefficient of q^" + to_string(exponent) + " is beyond the truncation order");
    return coeffs_[off.get_ui()];
}

bool QSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational &c) { return c == 0; });
}

bool QSeries::is_integral() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational &c) { return c.get_den() == 1; });
}

QSeries QSeries::normalized() const
{
    std::size_t k = 0;
    while (k < coeffs_.size() && coeffs_[k] == 0)
        ++k;
    if (k == 0 || k == coeffs_.size())
        return *this;
    return QSeries(lead_ + static_cast<long>(k),
                   std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

QSeries QSeries::truncated(int N) const
{
    if (N < 0 || N > trunc_order())
        throw SeriesError("cannot truncate to order " + std::to_string(N));
    return QSeries(lead_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + N + 1));
}

QSeries QSeries::shifted(const Rational &shift) const { return QSeries(lead_ + shift, coeffs_); }

QSeries QSeries::operator-() const
{
    QSeries out = *this;
    for (auto &c : out.coeffs_)
        c = -c;
    return out;
}

QSeries &QSeries::operator*=(const Rational &c)
{
    for (auto &x : coeffs_)
        x *= c;
    return *this;
}

QSeries operator+(const QSeries &a, const QSeries &b)
{
    bool ok = false;
    lattice_offset(a.lead_exp(), b.lead_exp(), ok);
    if (!ok)
        throw SeriesError("cannot add series with lead exponents " + to_string(a.lead_exp()) + " and " +
                          to_string(b.lead_exp()));
    Rational lead = std::min(a.lead_exp(), b.lead_exp());
    Rational top = std::min(a.abs_order(), b.abs_order());
    Rational span = top - lead;
    if (span < 0)
        return QSeries::zero(lead, 0);
    long N = span.get_num().get_si();
    std::vector<Rational> coeffs(static_cast<std::size_t>(N) + 1);
    for (long i = 0; i <= N; ++i) {
        Rational e = lead + i;
        coeffs[i] = a.coeff_at(e) + b.coeff_at(e);
    }
    return QSeries(lead, std::move(coeffs));
}

QSeries operator-(const QSeries &a, const QSeries &b) { return a + (-b); }

QSeries operator*(const QSeries &a, const QSeries &b)
{
    std::size_t len = static_cast<std::size_t>(std::min(a.trunc_order(), b.trunc_order())) + 1;
    Integer da, db;
    auto A = scaled_integers(a.coeffs(), len, da);
    auto B = scaled_integers(b.coeffs(), len, db);
    std::vector<Integer> C(len);
    for (std::size_t i = 0; i < len; ++i) {
        if (A[i] == 0)
            continue;
        for (std::size_t j = 0; i + j < len; ++j)
            if (B[j] != 0)
                mpz_addmul(C[i + j].get_mpz_t(), A[i].get_mpz_t(), B[j].get_mpz_t());
    }
    Integer den = da * db;
    std::vector<Rational> coeffs(len);
    for (std::size_t k = 0; k < len; ++k) {
        coeffs[k] = Rational(C[k], den);
        coeffs[k].canonicalize();
    }
    return QSeries(a.lead_exp() + b.lead_exp(), std::move(coeffs));
}

QSeries operator*(const QSeries &a, const Rational &c)
{
    QSeries out = a;
    out *= c;
    return out;
}

QSeries operator*(const Rational &c, const QSeries &a) { return a * c; }

QSeries inverse(const QSeries &a)
{
    if (a[0] == 0)
        throw SeriesError("division by a series with zero leading coefficient");
    std::size_t len = a.coeffs().size();
    Integer den;
    auto A = scaled_integers(a.coeffs(), len, den);
    // R_k = r_k * A_0^{k+1} stays integral.
    std::vector<Integer> R(len);
    R[0] = 1;
    std::vector<Integer> a0pow(len);
    a0pow[0] = 1;
    for (std::size_t j = 1; j < len; ++j)
        a0pow[j] = a0pow[j - 1] * A[0];
    for (std::size_t k = 1; k < len; ++k) {
        Integer acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            if (A[j] == 0)
                continue;
            acc += A[j] * R[k - j] * a0pow[j - 1];
        }
        R[k] = -acc;
    }
    std::vector<Rational> coeffs(len);
    Integer scale = A[0];
    for (std::size_t k = 0; k < len; ++k) {
        coeffs[k] = Rational(R[k] * den, scale);
        coeffs[k].canonicalize();
        scale *= A[0];
    }
    return QSeries(-a.lead_exp(), std::move(coeffs));
}

QSeries operator/(const QSeries &a, const QSeries &b) { return a * inverse(b); }

QSeries int_pow(const QSeries &a, long e)
{
    if (e < 0)
        return int_pow(inverse(a), -e);
    QSeries result = QSeries::one(a.trunc_order());
    QSeries base = a;
    while (e > 0) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return result;
}

QSeries theta_q(const QSeries &a)
{
    std::vector<Rational> coeffs = a.coeffs();
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        coeffs[i] *= a.lead_exp() + static_cast<long>(i);
    return QSeries(a.lead_exp(), std::move(coeffs));
}

QSeries polynomial_in(const std::vector<Rational> &p, const QSeries &t, int N)
{
    if (t.lead_exp() <= 0 || t.lead_exp().get_den() != 1)
        throw SeriesError("polynomial substitution needs a positive integral lead exponent");
    if (t.abs_order() < N)
        throw SeriesError("substituted series is not known through the requested order");
    std::vector<Rational> dense(static_cast<std::size_t>(N) + 1);
    for (int e = 1; e <= N; ++e)
        dense[e] = t.coeff_at(e);
    QSeries t0(0, std::move(dense));
    if (p.empty())
        return QSeries::zero(0, N);
    QSeries r = QSeries::constant(p.back(), N);
    for (std::size_t i = p.size() - 1; i-- > 0;)
        r = r * t0 + QSeries::constant(p[i], N);
    return r;
}

std::optional<Rational> first_mismatch(const QSeries &a, const QSeries &b)
{
    bool ok = false;
    lattice_offset(a.lead_exp(), b.lead_exp(), ok);
    if (!ok) {
        if (a.is_zero() && b.is_zero())
            return std::nullopt;
        return std::min(a.lead_exp(), b.lead_exp());
    }
    Rational lead = std::min(a.lead_exp(), b.lead_exp());
    Rational top = std::min(a.abs_order(), b.abs_order());
    for (Rational e = lead; e <= top; e += 1)
        if (a.coeff_at(e) != b.coeff_at(e))
            return e;
    return std::nullopt;
}

bool operator==(const QSeries &a, const QSeries &b) { return !first_mismatch(a, b).has_value(); }

nlohmann::json to_json(const QSeries &s)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto &c : s.coeffs())
        coeffs.push_back(to_string(c));
    return nlohmann::json{{"lead_exp", to_string(s.lead_exp())}, {"coeffs", std::move(coeffs)}};
}

QSeries qseries_from_json(const nlohmann::json &j)
{
    try {
        std::vector<Rational> coeffs;
        for (const auto &c : j.at("coeffs"))
            coeffs.push_back(parse_rational(c.get<std::string>()));
        return QSeries(parse_rational(j.at("lead_exp").get<std::string>()), std::move(coeffs));
    } catch (const nlohmann::json::exception &e) {
        throw SeriesError(std::string("malformed series JSON: ") + e.what());
    }
}

} // namespace apery::series
