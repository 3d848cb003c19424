#include "apery/core/run_case.hpp"

#include <cmath>
#include <sstream>

#include "apery/analytic/eichler.hpp"
#include "apery/analytic/extrapolate.hpp"
#include "apery/operator/recurrence.hpp"
#include "apery/operator/verify.hpp"

namespace apery::core {

using nlohmann::ordered_json;

namespace {

std::string sci(double x)
{
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

int digits_of(Precision p) { return static_cast<int>(static_cast<double>(p) * 0.30103); }

struct Checks {
    ordered_json list = ordered_json::array();
    bool pass = true;

    ordered_json &add(const std::string &name, bool ok, ordered_json detail = ordered_json::object())
    {
        ordered_json c;
        c["name"] = name;
        c["pass"] = ok;
        for (auto &[k, v] : detail.items())
            c[k] = v;
        list.push_back(std::move(c));
        pass = pass && ok;
        return list.back();
    }

    void warn(const std::string &name, ordered_json detail)
    {
        ordered_json c;
        c["name"] = name;
        c["pass"] = true;
        c["warning"] = true;
        for (auto &[k, v] : detail.items())
            c[k] = v;
        list.push_back(std::move(c));
    }

    void fail(const std::string &name, const std::exception &e) { add(name, false, {{"error", e.what()}}); }
};

std::vector<long> sample_points(const RateSpec &r, std::size_t N)
{
    std::vector<long> ns;
    long hi = std::min<long>(r.hi, static_cast<long>(N));
    for (long n = r.lo; n <= hi; n += r.step)
        ns.push_back(n);
    return ns;
}

} // namespace

Real evaluate_target(const std::vector<TargetTerm> &target, const FormRegistry &forms, int digits)
{
    Precision p = analytic::bits_for_digits(digits, 32);
    Real sum(0L, p);
    for (const auto &t : target) {
        Real v(p);
        if (t.constant) {
            v = analytic::constant(*t.constant, p);
        } else {
            auto f = forms.form_data(t.form);
            const auto &fe = lfun::find_equation(f, t.equation);
            auto L = lfun::lvalue_smoothed(lfun::equation_data(f, fe), f.weight - 1, digits + 5);
            if (abs(L.value.im()) > analytic::pow10(-(digits - 2), p))
                throw lfun::LFunctionError("L-value of " + t.form + " is not real");
            v = L.value.re().with_precision(p);
        }
        sum += v * Real(t.coeff, p);
    }
    return sum;
}

LimitEstimate estimate_limit(const CaseSpec &c, const op::SequenceRun &run, std::size_t N, const Real &target,
                             Precision wp)
{
    LimitEstimate est;
    est.n_used = N;
    est.raw_ratio = run.ratio(N, wp);
    const auto &rate = c.rate;
    auto ns = sample_points(rate, N);
    std::vector<Real> rs;
    std::vector<double> rd;
    for (long n : ns) {
        rs.push_back(run.ratio(static_cast<std::size_t>(n), wp));
        rd.push_back(rs.back().to_double());
    }
    Real floor = analytic::pow10(-(digits_of(wp) - 8), wp);
    est.rate = fit_rate(ns, rs, target, rate.model, floor);

    if (N >= 2) {
        std::vector<Real> tail = {run.ratio(N - 2, wp), run.ratio(N - 1, wp), est.raw_ratio};
        auto acc = analytic::aitken_delta2(tail);
        if (!acc.empty())
            est.aitken = acc.back();
    }

    if (rate.model == "geometric" || ns.size() < 3) {
        est.value = est.raw_ratio;
        est.method = "raw ratio";
    } else if (rate.model == "power") {
        auto f = fit_power_model(ns, rd, rate.power.get_d());
        est.value = Real(f.c0, wp);
        est.method = "fit c0 + c1 n^-p + c2 n^-2p";
    } else {
        auto f = fit_shifted_log_model(ns, rd);
        est.value = Real(f.c0, wp);
        est.method = "fit c0 + c1/(log n + c2)";
    }
    est.error_vs_target = abs(est.value - target);

    if (rate.model != "geometric" && !ns.empty()) {
        est.scaled_min = INFINITY;
        est.scaled_max = 0;
        for (std::size_t i = 0; i < ns.size(); ++i) {
            double e = abs(rs[i] - target).to_double();
            double n = static_cast<double>(ns[i]);
            double s = rate.model == "power" ? e * std::pow(n, rate.power.get_d()) : e * std::log(n);
            est.scaled_min = std::min(est.scaled_min, s);
            est.scaled_max = std::max(est.scaled_max, s);
        }
    }
    return est;
}

CaseReport run_case(const std::string &id, const RunOptions &opts) { return run_case(load_case(id), opts); }

CaseReport run_case(const CaseSpec &c, const RunOptions &opts)
{
    Checks checks;
    ordered_json rep;
    rep["case"] = c.id;
    rep["title"] = c.title;
    const int S = opts.series_order;
    const std::size_t N = static_cast<std::size_t>(opts.n.value_or(c.n_default));
    const int digits = opts.digits.value_or(c.digits_default);
    FormRegistry forms = load_forms();
    const op::ThetaOperator L = c.theta_operator();

    // Exact q-series certification.
    int ode_to = -1, integrand_to = -1;
    try {
        QSeries t = build_form(c.t_form, S + 4);
        FormContext ctx{&t, nullptr};
        QSeries A = build_form(c.A_form, S + 2, ctx);
        ctx.A = &A;
        if (t.lead_exp() != 1)
            throw RegistryError("t must start at q^1, starts at q^" + series::to_string(t.lead_exp()));
        auto ode = op::verify_ode(L, t, A.truncated(S), S);
        ode_to = ode.verified_to;
        ordered_json d;
        d["order"] = S;
        if (ode.first_failure) {
            d["first_failure"] = *ode.first_failure;
            d["coefficient"] = series::to_string(ode.failure_coefficient);
        }
        checks.add("ode", ode.ok(), d);

        op::Poly h = L.leading_coefficient();
        bool g_ok = c.g_num * h == c.g_den * c.rhs;
        checks.add("g = rhs / h", g_ok, {{"g_num", c.g_num.to_string("t")}, {"g_den", c.g_den.to_string("t")}});

        QSeries f = op::build_integrand(t, A, c.g_num, c.g_den, L.order(), S);
        QSeries closed = build_form(c.integrand, S, ctx);
        auto mism = series::first_mismatch(f, closed);
        integrand_to = mism ? static_cast<int>(mism->get_d()) - 1 : S;
        ordered_json di;
        di["order"] = S;
        if (mism)
            di["first_mismatch"] = series::to_string(*mism);
        checks.add("integrand closed form", !mism, di);

        for (const auto &id : c.identities) {
            QSeries l = build_form(id.lhs, S, ctx), r = build_form(id.rhs, S, ctx);
            auto m = series::first_mismatch(l, r);
            ordered_json dd;
            dd["order"] = S;
            if (m)
                dd["first_mismatch"] = series::to_string(*m);
            checks.add("identity: " + id.name, !m, dd);
        }

        for (const auto &ac : c.analytic_checks) {
            std::string kind = ac.at("kind").get<std::string>();
            if (kind != "eichler")
                continue;
            int dg = ac.value("digits", 30), tol = ac.value("tolerance_digits", 25);
            Precision p = analytic::bits_for_digits(dg, 64);
            analytic::EichlerSeries E(f, L.order());
            Real re(series::parse_rational(ac.at("tau_re").get<std::string>()), p);
            Real im = analytic::sqrt(Real(series::parse_rational(ac.at("tau_im_sq").get<std::string>()), p));
            analytic::Complex tau(re, im);
            auto val = analytic::eichler_eval(E, tau, dg);
            std::string mode = ac.value("mode", "value");
            analytic::Complex lhs = val.value;
            Real bound = val.error_bound;
            if (mode == "fixed_point_derivative") {
                // E(tau) - tau E'(tau), E' = 2 pi i sum c_n q^n / n^{order-1}
                auto d = analytic::eichler_eval(analytic::EichlerSeries(f, L.order() - 1), tau, dg);
                analytic::Complex twopii(Real(0L, p), analytic::const_pi(p) * 2L);
                lhs = lhs - tau * twopii * d.value;
                bound += d.error_bound * static_cast<long>(std::ceil(abs(tau).to_double() * 7));
            } else if (mode != "value") {
                throw RegistryError("unknown Eichler check mode '" + mode + "'");
            }
            Real T = evaluate_target(c.target, forms, dg + 5);
            Real err = abs(lhs - analytic::Complex(T, Real(0L, p)));
            checks.add("Eichler integral at elliptic point", err < analytic::pow10(-tol, p),
                       {{"tau", ac.at("tau_re").get<std::string>() + " + i sqrt(" +
                                    ac.at("tau_im_sq").get<std::string>() + ")"},
                        {"mode", mode == "value" ? "E(tau)" : "E(tau) - tau E'(tau)"},
                        {"value", lhs.re().to_string(dg)},
                        {"E(tau)", val.value.re().to_string(dg)},
                        {"target", T.to_string(dg)},
                        {"abs_error", err.to_string(3)},
                        {"tail_bound", bound.to_string(3)}});
        }
    } catch (const std::exception &e) {
        checks.fail("q-series certification", e);
    }
    rep["ode_verified_to"] = ode_to;
    rep["integrand_match_order"] = integrand_to;

    // Singularities.
    try {
        auto roots = op::singular_points(L);
        bool ok = true;
        ordered_json found = ordered_json::array();
        for (const auto &r : roots) {
            std::ostringstream os;
            os.precision(12);
            os << r.real();
            if (std::fabs(r.imag()) > 1e-9)
                os << (r.imag() < 0 ? " - " : " + ") << std::fabs(r.imag()) << "i";
            found.push_back(os.str());
        }
        for (const auto &s : c.singularities) {
            auto v = s.value();
            bool hit = false;
            for (const auto &r : roots)
                hit = hit || std::abs(r - v) <= 1e-6 * std::max(1.0, std::abs(v));
            ok = ok && hit;
        }
        for (const auto &r : roots) {
            bool hit = false;
            for (const auto &s : c.singularities)
                hit = hit || std::abs(r - s.value()) <= 1e-6 * std::max(1.0, std::abs(r));
            ok = ok && hit;
        }
        ordered_json reg = ordered_json::array();
        for (const auto &s : c.singularities)
            reg.push_back({{"t", s.to_string()}, {"type", s.type}, {"tau", s.tau}});
        checks.add("singularities", ok, {{"roots_of_h", found}, {"registered", reg}});
    } catch (const std::exception &e) {
        checks.fail("singularities", e);
    }

    // Sequences, audit and limit.
    try {
        op::Recurrence rec = op::ode_to_recurrence(L, c.rhs);
        double rho = op::singularity_ratio(L.leading_coefficient());
        double expected_ratio = 1.0 / rho;
        Precision wp = std::max<Precision>(opts.prec_bits, analytic::bits_for_digits(digits, 64));
        if (c.rate.model == "geometric")
            wp = std::max<Precision>(wp, static_cast<Precision>(std::ceil(static_cast<double>(N) * std::log2(rho))) + 64);
        op::SequenceOptions so;
        so.float_prec = wp;
        auto run = op::run_sequences(rec, N, so);

        // Exact recurrence residuals over the exact range.
        std::size_t M = std::min<std::size_t>({N, 200, run.exact_top()});
        std::vector<Rational> a(M + 1), b(M + 1);
        for (std::size_t m = 0; m <= M; ++m) {
            a[m] = run.a(m);
            b[m] = run.b(m);
        }
        op::Recurrence hom = rec.with_rhs(op::Poly());
        bool res_ok = true;
        for (std::size_t m = 1; m <= M; ++m)
            res_ok = res_ok && op::recurrence_residual(hom, a, m) == 0 && op::recurrence_residual(rec, b, m) == 0;
        checks.add("recurrence residuals", res_ok, {{"through", M}});

        if (!c.stated.recurrence.empty()) {
            auto disc = op::audit_recurrence(L, c.stated.recurrence);
            ordered_json dj = ordered_json::array();
            for (const auto &d : disc)
                dj.push_back({{"term", d.index},
                              {"stated", d.stated.to_string("n")},
                              {"derived", d.derived.to_string("n")}});
            if (disc.empty())
                checks.add("stated recurrence", true, {{"agreement", "exact"}});
            else
                checks.warn("stated recurrence", {{"discrepancies", dj}, {"used", "derived"}});
        }
        if (!c.stated.initial.empty()) {
            ordered_json mism = ordered_json::array();
            for (const auto &[key, stated] : c.stated.initial) {
                std::size_t m = std::stoul(key.substr(1));
                if (m > M)
                    continue;
                Rational got = key[0] == 'a' ? a[m] : b[m] * c.stated.b_scale;
                if (got != stated)
                    mism.push_back({{"value", key}, {"stated", series::to_string(stated)},
                                    {"computed", series::to_string(got)}});
            }
            if (mism.empty())
                checks.add("stated initial values", true, {{"count", c.stated.initial.size()}});
            else
                checks.warn("stated initial values", {{"mismatches", mism}});
        }

        Real T = evaluate_target(c.target, forms, digits_of(wp));
        auto est = estimate_limit(c, run, N, T, wp);
        int shown = std::min(digits + 5, digits_of(wp));
        rep["n_used"] = N;
        rep["limit_estimate"] = est.value.to_string(shown);
        rep["raw_ratio"] = est.raw_ratio.to_string(shown);
        rep["limit_method"] = est.method;
        rep["target"] = T.to_string(shown);
        rep["target_expression"] = to_string(c.target);
        rep["abs_error"] = est.error_vs_target.to_string(3);
        rep["raw_abs_error"] = abs(est.raw_ratio - T).to_string(3);
        rep["rate_model"] = c.rate.model;
        rep["fitted_rate"] = est.rate.measurable ? ordered_json(est.rate.fitted) : ordered_json("unmeasurable");
        rep["rate_fit_points"] = est.rate.points;
        rep["working_precision_bits"] = wp;
        if (run.switchover_residual())
            rep["switchover_residual"] = sci(*run.switchover_residual());

        if (c.rate.model == "geometric") {
            double tol = std::pow(10.0, -digits);
            checks.add("limit", est.error_vs_target < Real(tol, wp),
                       {{"abs_error", est.error_vs_target.to_string(3)}, {"tolerance", sci(tol)}});
            rep["expected_rate"] = expected_ratio;
            bool ok = est.rate.measurable && std::fabs(est.rate.fitted / expected_ratio - 1) < c.rate.tolerance;
            checks.add("rate", ok, {{"fitted_ratio", est.rate.fitted}, {"expected_ratio", expected_ratio},
                                    {"relative_tolerance", c.rate.tolerance}, {"note", est.rate.note}});
        } else {
            double tol = c.rate.extrapolation_tolerance;
            checks.add("extrapolated limit", est.error_vs_target < Real(tol, wp),
                       {{"abs_error", est.error_vs_target.to_string(3)}, {"tolerance", sci(tol)}});
            double spread = est.scaled_min > 0 ? est.scaled_max / est.scaled_min : INFINITY;
            std::string label = c.rate.model == "power" ? "|r_n - T| n^p" : "|r_n - T| log n";
            checks.add("scaled error bounded", spread < c.rate.scaled_max_over_min,
                       {{"quantity", label}, {"min", est.scaled_min}, {"max", est.scaled_max},
                        {"max_over_min", spread}, {"bound", c.rate.scaled_max_over_min}});
            if (c.rate.model == "power") {
                rep["expected_rate"] = ordered_json::array({c.rate.exponent_lo, c.rate.exponent_hi});
                bool ok = est.rate.measurable && est.rate.fitted >= c.rate.exponent_lo &&
                          est.rate.fitted <= c.rate.exponent_hi;
                checks.add("rate", ok, {{"fitted_exponent", est.rate.fitted},
                                        {"range", rep["expected_rate"]}, {"note", est.rate.note}});
            } else {
                rep["expected_rate"] = "1/log n";
                checks.add("rate", est.rate.measurable,
                           {{"slope_vs_loglog_n", est.rate.fitted}, {"note", est.rate.note}});
            }
        }
        if (est.aitken)
            rep["aitken_estimate"] = est.aitken->to_string(shown);
    } catch (const std::exception &e) {
        checks.fail("sequences and limit", e);
    }

    // Remaining analytic checks.
    for (const auto &ac : c.analytic_checks) {
        std::string kind = ac.at("kind").get<std::string>();
        try {
            if (kind == "ramanujan") {
                int dg = ac.value("digits", 30), tol = ac.value("tolerance_digits", 25);
                Precision p = analytic::bits_for_digits(dg, 64);
                Real x = -analytic::exp(-analytic::const_pi(p) / analytic::sqrt(Real(3L, p)));
                auto v = analytic::ramanujan_sum(analytic::Complex(x, Real(0L, p)), dg);
                Real T = evaluate_target(c.target, forms, dg + 5);
                Real err = abs(v.value.re() - T);
                checks.add("Ramanujan-type sum", err < analytic::pow10(-tol, p),
                           {{"value", v.value.re().to_string(dg)}, {"target", T.to_string(dg)},
                            {"abs_error", err.to_string(3)}});
            } else if (kind == "root_number") {
                auto f = forms.form_data(ac.at("form").get<std::string>());
                const auto &fe = lfun::find_equation(f, ac.at("equation").get<std::string>());
                auto eps = lfun::detect_root_number(lfun::equation_data(f, fe), f.weight - 1);
                Real want(series::parse_rational(ac.at("expected").get<std::string>()), eps.precision());
                Real err = abs(eps - analytic::Complex(want, Real(0L, eps.precision())));
                checks.add("root number", err.to_double() < 1e-10,
                           {{"form", f.name}, {"equation", fe.name}, {"detected", eps.to_string(6)},
                            {"expected", ac.at("expected")}});
            } else if (kind != "eichler") {
                throw RegistryError("unknown analytic check '" + kind + "'");
            }
        } catch (const std::exception &e) {
            checks.fail(kind, e);
        }
    }

    rep["pass"] = checks.pass;
    rep["checks"] = checks.list;
    return {rep, checks.pass};
}

IdentitiesReport run_identities(const std::string &which, int digits)
{
    if (which != "stabilizer" && which != "mod12" && which != "mod16" && which != "all")
        throw RegistryError("unknown identity group '" + which + "' (expected stabilizer, mod12, mod16 or all)");
    FormRegistry forms = load_forms();
    ordered_json rep;
    rep["which"] = which;
    rep["digits_requested"] = digits;
    ordered_json groups = ordered_json::array();
    bool pass = true;
    const double tol = std::pow(10.0, -digits);

    auto record = [&](const std::string &name, const std::vector<lfun::IdentityCheck> &cs, ordered_json extra) {
        ordered_json g;
        g["group"] = name;
        for (auto &[k, v] : extra.items())
            g[k] = v;
        ordered_json arr = ordered_json::array();
        bool ok = true;
        for (const auto &ch : cs) {
            arr.push_back(lfun::to_json(ch, std::max(digits + 4, 12)));
            ok = ok && ch.pass;
        }
        g["pass"] = ok;
        g["checks"] = arr;
        groups.push_back(g);
        pass = pass && ok;
    };

    if (which == "stabilizer" || which == "all") {
        for (const auto &st : forms.stabilizer) {
            std::string name = "stabilizer " + st.form;
            try {
                auto f = forms.form_data(st.form);
                auto cs = lfun::verify_stabilizer_identity(f, st.gamma, digits);
                double dev = 0;
                for (std::size_t i = 0; i < 3 && i < cs.size(); ++i)
                    dev = std::max(dev, cs[i].abs_error.to_double());
                if (!st.expected.empty()) {
                    Real want = evaluate_target(st.expected, forms, digits + 6);
                    Precision p = want.precision();
                    cs.push_back({"L(" + std::to_string(f.weight - 1) + ") = " + to_string(st.expected), cs[0].lhs,
                                  analytic::Complex(want, Real(0L, p)),
                                  abs(cs[0].lhs - analytic::Complex(want, Real(0L, p))), digits, "smoothed/target",
                                  tol, false});
                    cs.back().pass = cs.back().abs_error.to_double() < tol;
                }
                const auto &g = st.gamma;
                record(name, cs,
                       {{"gamma", {g.a, g.b, g.c, g.d}}, {"max_pairwise_deviation", sci(dev)}});
            } catch (const std::exception &e) {
                groups.push_back({{"group", name}, {"pass", false}, {"error", e.what()}});
                pass = false;
            }
        }
    }
    for (const std::string cor : {"mod12", "mod16"}) {
        if (which != cor && which != "all")
            continue;
        try {
            auto it = forms.corollaries.find(cor);
            if (it == forms.corollaries.end())
                throw RegistryError("no form registered for " + cor);
            auto f = forms.form_data(it->second);
            auto cs = lfun::corollary_checks(cor, f, digits);
            // Support of the coefficients.
            f.coeffs->ensure(2000);
            long bad = -1;
            for (std::size_t n = 1; n <= 2000 && bad < 0; ++n) {
                auto cn = (*f.coeffs)[n];
                bool allowed = cor == "mod12" ? (n % 2 == 1 && n % 12 != 5 && n % 12 != 11) : n % 4 == 1;
                if (!allowed && cn != 0)
                    bad = static_cast<long>(n);
            }
            Precision p = analytic::bits_for_digits(digits, 32);
            std::string support = cor == "mod12" ? "c_n = 0 for even n and n = 5, 11 (12), n <= 2000"
                                                 : "c_n = 0 unless n = 1 (4), n <= 2000";
            lfun::IdentityCheck sc{support, analytic::Complex(Real(bad < 0 ? 0L : bad, p), Real(0L, p)),
                                   analytic::Complex(p), Real(bad < 0 ? 0L : 1L, p), digits, "exact", 0.5,
                                   bad < 0};
            cs.insert(cs.begin(), sc);
            record(cor + " " + f.name, cs, ordered_json::object());
        } catch (const std::exception &e) {
            groups.push_back({{"group", cor}, {"pass", false}, {"error", e.what()}});
            pass = false;
        }
    }
    rep["pass"] = pass;
    rep["groups"] = groups;
    return {rep, pass};
}

} // namespace apery::core
