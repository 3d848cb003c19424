#include "apery/core/registry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#ifndef APERY_REGISTRY_DIR
#define APERY_REGISTRY_DIR "registry"
#endif

namespace apery::core {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::vector<std::string> canonical_order = {"zeta3", "zeta2", "case_h", "l2f7", "case_e", "l2f6", "case_beta"};

Rational rat(const json &v)
{
    if (v.is_string())
        return series::parse_rational(v.get<std::string>());
    if (v.is_number_integer())
        return Rational(v.get<long>());
    throw RegistryError("expected a rational, got " + v.dump());
}

op::Poly poly(const json &v)
{
    std::vector<Rational> c;
    for (const auto &x : v)
        c.push_back(rat(x));
    return op::Poly(std::move(c));
}

json read_json(const fs::path &p)
{
    std::ifstream in(p);
    if (!in)
        throw RegistryError("cannot open " + p.string());
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw RegistryError(p.string() + ": " + e.what());
    }
}

RateSpec parse_rate(const json &j)
{
    RateSpec r;
    r.model = j.at("model").get<std::string>();
    if (r.model != "geometric" && r.model != "power" && r.model != "loglike")
        throw RegistryError("unknown rate model '" + r.model + "'");
    r.lo = j.at("fit_range").at(0).get<int>();
    r.hi = j.at("fit_range").at(1).get<int>();
    r.step = j.value("step", 1);
    r.tolerance = j.value("tolerance", 0.05);
    if (j.contains("exponent_range")) {
        r.exponent_lo = j.at("exponent_range").at(0).get<double>();
        r.exponent_hi = j.at("exponent_range").at(1).get<double>();
    }
    if (j.contains("power"))
        r.power = rat(j.at("power"));
    r.scaled_max_over_min = j.value("scaled_max_over_min", 3.0);
    r.extrapolation_tolerance = j.value("extrapolation_tolerance", 1e-3);
    return r;
}

} // namespace

std::complex<double> Singularity::value() const
{
    double root = std::sqrt(std::fabs(d.get_d()));
    double bb = b.get_d() * root;
    if (d < 0)
        return {a.get_d(), bb};
    return {a.get_d() + bb, 0.0};
}

std::string Singularity::to_string() const
{
    std::string s = series::to_string(a);
    if (b != 0 && d != 1)
        s += (b > 0 ? " + " : " - ") + series::to_string(abs(b)) + " sqrt(" + series::to_string(d) + ")";
    else if (b != 0)
        s = series::to_string(a + b);
    return s;
}

std::vector<TargetTerm> parse_target(const json &j)
{
    std::vector<TargetTerm> out;
    for (const auto &t : j) {
        TargetTerm term;
        term.coeff = rat(t.at("coeff"));
        if (t.contains("constant")) {
            term.constant = analytic::parse_constant(t.at("constant").get<std::string>());
        } else if (t.contains("lvalue")) {
            term.form = t.at("lvalue").at("form").get<std::string>();
            term.equation = t.at("lvalue").at("equation").get<std::string>();
        } else {
            throw RegistryError("target term needs 'constant' or 'lvalue'");
        }
        out.push_back(std::move(term));
    }
    if (out.empty())
        throw RegistryError("empty target expression");
    return out;
}

std::string to_string(const std::vector<TargetTerm> &target)
{
    std::string s;
    for (std::size_t i = 0; i < target.size(); ++i) {
        const auto &t = target[i];
        if (i > 0)
            s += t.coeff < 0 ? " - " : " + ";
        else if (t.coeff < 0)
            s += "-";
        std::string mag = series::to_string(abs(t.coeff));
        if (mag != "1")
            s += mag + "*";
        s += t.constant ? analytic::to_string(*t.constant) : "L(" + t.form + ", " + t.equation + ")";
    }
    return s;
}

CaseSpec parse_case(const json &j)
{
    try {
        CaseSpec c;
        c.id = j.at("id").get<std::string>();
        c.title = j.value("title", c.id);
        for (const auto &p : j.at("operator"))
            c.operator_polys.push_back(poly(p));
        c.rhs = poly(j.at("rhs"));
        c.g_num = poly(j.at("g_num"));
        c.g_den = poly(j.at("g_den"));
        c.t_form = j.at("t_form");
        c.A_form = j.at("A_form");
        c.integrand = j.at("integrand");
        for (const auto &id : j.value("identities", json::array()))
            c.identities.push_back({id.at("name").get<std::string>(), id.at("lhs"), id.at("rhs")});
        for (const auto &s : j.value("singularities", json::array())) {
            Singularity sg;
            sg.a = rat(s.at("t").at(0));
            sg.b = rat(s.at("t").at(1));
            sg.d = rat(s.at("t").at(2));
            sg.type = s.value("type", "");
            sg.tau = s.value("tau", "");
            c.singularities.push_back(sg);
        }
        c.target = parse_target(j.at("target"));
        c.rate = parse_rate(j.at("rate"));
        c.n_default = j.value("n_default", 50);
        c.digits_default = j.value("digits_default", 30);
        if (j.contains("stated")) {
            const auto &st = j.at("stated");
            for (const auto &p : st.value("recurrence", json::array()))
                c.stated.recurrence.push_back(poly(p));
            const json initial = st.value("initial", json::object());
            for (const auto &[k, v] : initial.items())
                c.stated.initial[k] = rat(v);
            if (st.contains("b_scale"))
                c.stated.b_scale = rat(st.at("b_scale"));
        }
        c.analytic_checks = j.value("analytic_checks", json::array());
        c.theta_operator();
        return c;
    } catch (const json::exception &e) {
        throw RegistryError(std::string("malformed case record: ") + e.what());
    } catch (const series::SeriesError &e) {
        throw RegistryError(std::string("malformed case record: ") + e.what());
    } catch (const op::OperatorError &e) {
        throw RegistryError(std::string("invalid operator: ") + e.what());
    }
}

FormRegistry parse_forms(const json &j)
{
    try {
        FormRegistry r;
        for (const auto &[name, f] : j.at("forms").items()) {
            FormEntry e;
            e.name = name;
            e.stream = f.at("stream");
            e.weight = f.value("weight", 3);
            for (const auto &q : f.value("equations", json::array()))
                e.equations.push_back({q.at("name").get<std::string>(), rat(q.at("scale_sq")), rat(q.at("a_over_c")),
                                       rat(q.at("d_over_c"))});
            r.forms[name] = std::move(e);
        }
        for (const auto &s : j.value("stabilizer", json::array())) {
            StabilizerSpec st;
            st.form = s.at("form").get<std::string>();
            const auto &g = s.at("gamma");
            st.gamma = {g.at(0).get<long>(), g.at(1).get<long>(), g.at(2).get<long>(), g.at(3).get<long>()};
            if (s.contains("expected"))
                st.expected = parse_target(s.at("expected"));
            r.stabilizer.push_back(std::move(st));
        }
        const json cor = j.value("corollaries", json::object());
        for (const auto &[k, v] : cor.items())
            r.corollaries[k] = v.get<std::string>();
        return r;
    } catch (const json::exception &e) {
        throw RegistryError(std::string("malformed forms registry: ") + e.what());
    }
}

const FormEntry &FormRegistry::entry(const std::string &name) const
{
    auto it = forms.find(name);
    if (it == forms.end())
        throw RegistryError("unknown form '" + name + "'");
    return it->second;
}

lfun::FormData FormRegistry::form_data(const std::string &name) const
{
    const auto &e = entry(name);
    lfun::FormData d;
    d.name = name;
    d.coeffs = std::make_shared<lfun::CoefficientStream>(name, stream_generator(e.stream));
    d.weight = e.weight;
    d.equations = e.equations;
    return d;
}

std::string registry_dir()
{
    if (const char *env = std::getenv("APERY_REGISTRY"); env && *env)
        return env;
    return APERY_REGISTRY_DIR;
}

std::vector<std::string> case_ids()
{
    fs::path dir = registry_dir();
    if (!fs::is_directory(dir))
        throw RegistryError("registry directory " + dir.string() + " not found");
    std::vector<std::string> found;
    for (const auto &e : fs::directory_iterator(dir)) {
        if (e.path().extension() != ".json" || e.path().stem() == "forms")
            continue;
        found.push_back(e.path().stem().string());
    }
    auto rank = [](const std::string &id) {
        auto it = std::find(canonical_order.begin(), canonical_order.end(), id);
        return static_cast<std::size_t>(it - canonical_order.begin());
    };
    std::sort(found.begin(), found.end(), [&](const std::string &a, const std::string &b) {
        auto ra = rank(a), rb = rank(b);
        return ra != rb ? ra < rb : a < b;
    });
    return found;
}

bool has_case(const std::string &id)
{
    auto ids = case_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

CaseSpec load_case(const std::string &id)
{
    if (!has_case(id))
        throw RegistryError("unknown case '" + id + "'");
    CaseSpec c = parse_case(read_json(fs::path(registry_dir()) / (id + ".json")));
    if (c.id != id)
        throw RegistryError("registry file " + id + ".json declares id '" + c.id + "'");
    return c;
}

FormRegistry load_forms() { return parse_forms(read_json(fs::path(registry_dir()) / "forms.json")); }

} // namespace apery::core
