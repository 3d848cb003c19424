#include "apery/core/forms.hpp"

#include "apery/operator/verify.hpp"
#include "apery/series/eta.hpp"
#include "apery/series/lambert.hpp"

namespace apery::core {

namespace {

using nlohmann::json;

Rational rational_field(const json &j, const char *key, const Rational &fallback)
{
    if (!j.contains(key))
        return fallback;
    const auto &v = j.at(key);
    if (v.is_string())
        return series::parse_rational(v.get<std::string>());
    if (v.is_number_integer())
        return Rational(v.get<long>());
    throw RegistryError(std::string("field '") + key + "' must be a rational string or integer");
}

std::vector<Rational> rational_list(const json &j)
{
    std::vector<Rational> out;
    for (const auto &v : j) {
        if (v.is_string())
            out.push_back(series::parse_rational(v.get<std::string>()));
        else
            out.emplace_back(v.get<long>());
    }
    return out;
}

series::LambertSeries lambert_of(const json &j)
{
    series::LambertSeries ls;
    ls.shape = series::parse_lambert_shape(j.at("shape").get<std::string>());
    ls.weights = rational_list(j.at("weights"));
    ls.power = j.value("power", 0);
    ls.constant = rational_field(j, "constant", 0);
    ls.scale = rational_field(j, "scale", 1);
    return ls;
}

series::EtaQuotient eta_of(const json &j)
{
    series::EtaQuotient eq;
    for (const auto &f : j.at("factors"))
        eq.factors.emplace_back(f.at(0).get<long>(), f.at(1).get<long>());
    return eq;
}

std::vector<Rational> multipliers_of(const json &j) { return rational_list(j.at("multipliers")); }

// Series with relative truncation order R.
QSeries build_rel(const json &j, int R, const FormContext &ctx)
{
    const std::string kind = j.at("kind").get<std::string>();
    QSeries out = QSeries::one(R);
    if (kind == "eta") {
        out = series::expand(eta_of(j), R);
    } else if (kind == "periodic_product") {
        series::PeriodicProduct pp;
        pp.lead = rational_field(j, "lead", 0);
        for (const auto &e : j.at("exponents"))
            pp.exponents.push_back(e.get<long>());
        out = series::expand(pp, R);
    } else if (kind == "lambert") {
        out = series::expand(lambert_of(j), R);
    } else if (kind == "eisenstein") {
        bool first = true;
        for (const auto &term : j.at("terms")) {
            std::string name = term.at(0).get<std::string>();
            series::EisensteinKind ek;
            if (name == "E2")
                ek = series::EisensteinKind::E2;
            else if (name == "E4")
                ek = series::EisensteinKind::E4;
            else
                throw RegistryError("unknown Eisenstein series '" + name + "'");
            Rational c = series::parse_rational(term.at(2).get<std::string>());
            QSeries s = series::eisenstein(ek, term.at(1).get<long>(), R) * c;
            out = first ? s : out + s;
            first = false;
        }
        if (first)
            throw RegistryError("empty Eisenstein combination");
    } else if (kind == "triple_product") {
        auto ms = multipliers_of(j);
        if (ms.empty())
            throw RegistryError("triple_product needs multipliers");
        out = series::triple_product_sparse(ms[0], R, rational_field(j, "scale", 1));
        for (std::size_t i = 1; i < ms.size(); ++i)
            out = out * series::triple_product_sparse(ms[i], R);
    } else if (kind == "product") {
        bool first = true;
        for (const auto &f : j.at("factors")) {
            QSeries s = series::int_pow(build_rel(f, R, ctx), f.value("exponent", 1L));
            out = first ? s : out * s;
            first = false;
        }
    } else if (kind == "rational_in" || kind == "t_rational") {
        QSeries base = QSeries::one(0);
        if (kind == "t_rational") {
            if (!ctx.t)
                throw RegistryError("t_rational used without a t series");
            base = *ctx.t;
        } else {
            base = build_rel(j.at("of"), R, ctx).normalized();
        }
        auto num = rational_list(j.at("num"));
        auto den = rational_list(j.at("den"));
        out = series::polynomial_in(num, base, R) / series::polynomial_in(den, base, R);
    } else if (kind == "theta_log_t") {
        if (!ctx.t)
            throw RegistryError("theta_log_t used without a t series");
        out = op::log_derivative(*ctx.t, R);
    } else if (kind == "A") {
        if (!ctx.A)
            throw RegistryError("A used without an A series");
        out = ctx.A->truncated(std::min(R, ctx.A->trunc_order()));
    } else {
        throw RegistryError("unknown form kind '" + kind + "'");
    }
    return out;
}

} // namespace

QSeries build_form(const json &form, int N, const FormContext &ctx)
{
    try {
        // Two spare orders cover leads up to 2 and series used as t.
        QSeries s = build_rel(form, N + 2, ctx).normalized();
        Rational rel = Rational(N) - s.lead_exp();
        if (rel < 0)
            return QSeries::zero(N + 1, 0);
        mpz_class r = rel.get_num() / rel.get_den();
        if (r > s.trunc_order())
            throw RegistryError("form is known only through q^" + series::to_string(s.abs_order()));
        return s.truncated(static_cast<int>(r.get_si()));
    } catch (const nlohmann::json::exception &e) {
        throw RegistryError(std::string("malformed form description: ") + e.what());
    } catch (const series::SeriesError &e) {
        throw RegistryError(std::string("form expansion failed: ") + e.what());
    }
}

lfun::CoefficientStream::Generator stream_generator(const json &form)
{
    const std::string kind = form.at("kind").get<std::string>();
    if (kind == "triple_product" && form.at("multipliers").size() == 2 && !form.contains("scale")) {
        auto ms = multipliers_of(form);
        return [ms](std::size_t N) { return series::triple_product_pair_coefficients(ms[0], ms[1], N); };
    }
    if (kind == "lambert") {
        auto ls = lambert_of(form);
        return [ls](std::size_t N) { return series::lambert_coefficients(ls, N); };
    }
    return [form](std::size_t N) {
        QSeries s = build_form(form, static_cast<int>(N));
        std::vector<std::int64_t> out(N + 1, 0);
        for (std::size_t n = 0; n <= N; ++n) {
            Rational c = s.coeff_at(static_cast<long>(n));
            if (c.get_den() != 1 || !c.get_num().fits_slong_p())
                throw RegistryError("form coefficient of q^" + std::to_string(n) + " is not a machine integer");
            out[n] = c.get_num().get_si();
        }
        return out;
    };
}

} // namespace apery::core
