#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "apery/core/forms.hpp"
#include "apery/core/limits.hpp"
#include "apery/core/registry.hpp"
#include "apery/core/run_case.hpp"
#include "apery/series/eta.hpp"
#include "oracles.hpp"

using namespace apery;
using namespace apery::core;
using nlohmann::json;

namespace {

std::vector<long> range(long lo, long hi, long step = 1)
{
    std::vector<long> out;
    for (long n = lo; n <= hi; n += step)
        out.push_back(n);
    return out;
}

std::vector<Real> model(const std::vector<long> &ns, const std::function<double(double)> &f)
{
    std::vector<Real> out;
    for (long n : ns)
        out.emplace_back(f(static_cast<double>(n)), 128);
    return out;
}

} // namespace

TEST_CASE("registry contents")
{
    auto ids = case_ids();
    std::vector<std::string> want = {"zeta3", "zeta2", "case_h", "l2f7", "case_e", "l2f6", "case_beta"};
    CHECK(ids == want);
    CHECK(has_case("case_h"));
    CHECK_FALSE(has_case("zeta5"));
    CHECK_THROWS_AS(load_case("zeta5"), RegistryError);

    for (const auto &id : ids) {
        CaseSpec c = load_case(id);
        CAPTURE(id);
        CHECK(c.id == id);
        CHECK(c.theta_operator().leading_coefficient()(0) == 1);
        CHECK_FALSE(c.target.empty());
        CHECK_FALSE(c.singularities.empty());
        CHECK(c.singularities.size() <= static_cast<std::size_t>(c.theta_operator().leading_coefficient().degree()));
    }

    FormRegistry f = load_forms();
    CHECK(f.forms.size() == 5);
    CHECK(f.stabilizer.size() == 2);
    CHECK(f.corollaries.at("mod12") == "f6");
    CHECK(f.form_data("f7").equations.size() == 1);
    CHECK_THROWS_AS(f.entry("f9"), RegistryError);
}

TEST_CASE("malformed case files are rejected")
{
    json good = json::parse(std::ifstream(registry_dir() + "/zeta3.json"));
    CHECK_NOTHROW(parse_case(good));

    json missing = good;
    missing.erase("operator");
    CHECK_THROWS_AS(parse_case(missing), RegistryError);

    json bad_rate = good;
    bad_rate["rate"]["model"] = "cubic";
    CHECK_THROWS_AS(parse_case(bad_rate), RegistryError);

    json bad_target = good;
    bad_target["target"] = json::array({{{"coeff", "1"}, {"constant", "zeta7"}}});
    CHECK_THROWS(parse_case(bad_target));

    CHECK_THROWS_AS(parse_target(json::array({{{"coeff", "1"}}})), RegistryError);
}

TEST_CASE("alternate registry directory")
{
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "apery_registry_test";
    fs::remove_all(dir);
    fs::create_directories(dir);
    fs::copy_file(fs::path(registry_dir()) / "zeta2.json", dir / "zeta2.json");
    fs::copy_file(fs::path(registry_dir()) / "forms.json", dir / "forms.json");
    setenv("APERY_REGISTRY", dir.c_str(), 1);
    CHECK(case_ids() == std::vector<std::string>{"zeta2"});
    CHECK(load_case("zeta2").id == "zeta2");
    CHECK_FALSE(has_case("zeta3"));
    unsetenv("APERY_REGISTRY");
    fs::remove_all(dir);
    CHECK(case_ids().size() == 7);
}

TEST_CASE("form descriptions")
{
    SUBCASE("eta quotient")
    {
        QSeries t = build_form(json::parse(R"({"kind": "eta", "factors": [[3, 12], [1, -12]]})"), 5);
        CHECK(t.lead_exp() == 1);
        CHECK(t.coeff_at(3) == 90);
        CHECK(t.abs_order() == 5);
    }

    SUBCASE("product factors carry their own exponent")
    {
        json lam = json::parse(R"({"kind": "lambert", "shape": "divisor", "weights": [0, 1, -1], "power": 0, "constant": "1", "scale": "6"})");
        json prod = {{"kind", "product"}, {"factors", json::array({lam})}};
        QSeries a = build_form(lam, 8);
        CHECK(build_form(prod, 8) == a);
        prod["factors"][0]["exponent"] = 3;
        CHECK(build_form(prod, 8) == series::int_pow(a, 3));
        CHECK(a.coeff_at(1) == 6);
    }

    SUBCASE("eisenstein combination")
    {
        QSeries e = build_form(json::parse(R"({"kind": "eisenstein", "terms": [["E4", 1, "1/240"], ["E4", 2, "-1/240"]]})"), 4);
        CHECK(e.lead_exp() == 1);
        CHECK(e.coeff_at(1) == 1);
        CHECK(e.coeff_at(2) == Rational(oracle::sigma(2, 3) - 1));
    }

    SUBCASE("context forms")
    {
        QSeries t = build_form(json::parse(R"({"kind": "eta", "factors": [[3, 12], [1, -12]]})"), 12);
        QSeries A = build_form(json::parse(R"({"kind": "lambert", "shape": "divisor", "weights": [0, 1, -1], "power": 0, "constant": "1", "scale": "6"})"), 8);
        FormContext ctx{&t, &A};
        QSeries r = build_form(json::parse(R"({"kind": "t_rational", "num": ["1", "27"], "den": ["1"]})"), 8, ctx);
        CHECK(r.coeff_at(1) == 27);
        CHECK(build_form(json::parse(R"({"kind": "A"})"), 8, ctx) == A);
        CHECK_THROWS_AS(build_form(json::parse(R"({"kind": "A"})"), 8), RegistryError);
    }

    SUBCASE("unknown kinds")
    {
        CHECK_THROWS_AS(build_form(json::parse(R"({"kind": "theta_series"})"), 4), RegistryError);
    }

    SUBCASE("integer streams agree with exact expansions")
    {
        for (const char *src : {R"({"kind": "triple_product", "multipliers": ["1/8", "7/8"]})",
                                R"({"kind": "eta", "factors": [[3, 9], [1, -3]]})",
                                R"({"kind": "lambert", "shape": "divisor", "weights": [0, 1, -2, 2, -1], "power": 2})"}) {
            json f = json::parse(src);
            auto gen = stream_generator(f);
            auto v = gen(60);
            QSeries s = build_form(f, 60);
            for (int n = 1; n <= 60; ++n)
                CHECK(Rational(v[n]) == s.coeff_at(n));
        }
    }
}

TEST_CASE("rate fits on synthetic data")
{
    Real T(mpq_class(1, 3), 128);
    Real floor(1e-100, 128);

    auto ns = range(5, 45);
    std::vector<Real> rs;
    for (long n : ns)
        rs.push_back(Real(mpq_class(1, 3), 600) + pow(Real(mpq_class(1, 1154), 600), n) * 2L);
    auto geo = fit_rate(ns, rs, Real(mpq_class(1, 3), 600), "geometric", floor);
    CHECK(geo.measurable);
    CHECK(geo.fitted == doctest::Approx(1.0 / 1154).epsilon(1e-6));

    auto big = range(500, 4000, 10);
    auto pw = fit_rate(big, model(big, [](double n) { return 1.0 / 3 + 0.1 * std::pow(n, -1.0 / 3); }), T, "power",
                       floor);
    CHECK(pw.fitted == doctest::Approx(-1.0 / 3).epsilon(1e-6));

    auto ll = fit_rate(big, model(big, [](double n) { return 1.0 / 3 + 1 / std::log(n); }), T, "loglike", floor);
    CHECK(ll.fitted == doctest::Approx(-1.0).epsilon(1e-6));

    auto few = range(1, 10);
    CHECK_FALSE(fit_rate(few, model(few, [](double) { return 1.0; }), T, "power", floor).measurable);

    auto exact = fit_rate(ns, model(ns, [](double) { return 1.0 / 3; }), T, "geometric", Real(1e-10, 128));
    CHECK_FALSE(exact.measurable);
}

TEST_CASE("limit models")
{
    auto ns = range(1000, 10000, 10);
    std::vector<double> r;
    for (long n : ns)
        r.push_back(0.25 + 3 * std::pow(n, -1.0 / 3) - 2 * std::pow(n, -2.0 / 3));
    auto p = fit_power_model(ns, r, 1.0 / 3);
    CHECK(p.c0 == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(p.c1 == doctest::Approx(3).epsilon(1e-6));

    r.clear();
    for (long n : ns)
        r.push_back(0.5 + 2 / (std::log(n) + 0.7));
    auto l = fit_shifted_log_model(ns, r);
    CHECK(l.c0 == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(l.c2 == doctest::Approx(0.7).epsilon(1e-4));
    CHECK(l.rms < 1e-9);
}

TEST_CASE("targets")
{
    FormRegistry f = load_forms();
    auto t = parse_target(json::parse(R"([{"coeff": "2/81", "constant": "pi2"}, {"coeff": "-1/2", "constant": "L2_chi3"}])"));
    CHECK(to_string(t) == "2/81*pi2 - 1/2*L2_chi3");
    Real v = evaluate_target(t, f, 30);
    double want = 2 * M_PI * M_PI / 81 - static_cast<double>(oracle::l2_chi3()) / 2;
    CHECK(v.to_double() == doctest::Approx(want).epsilon(1e-12));
    CHECK(v.to_double() == doctest::Approx(-0.1469573).epsilon(1e-6));
}

TEST_CASE("end-to-end geometric cases")
{
    for (const char *id : {"zeta3", "zeta2", "l2f7"}) {
        CAPTURE(id);
        CaseReport r = run_case(id);
        CHECK(r.pass);
        CHECK(r.json["ode_verified_to"].get<int>() == 200);
        for (const auto &c : r.json["checks"]) {
            CAPTURE(c.dump());
            CHECK(c["pass"].get<bool>());
        }
    }

    RunOptions short_run;
    short_run.n = 5;
    CHECK_FALSE(run_case("zeta3", short_run).pass);
}

TEST_CASE("reports are deterministic")
{
    RunOptions o;
    o.series_order = 60;
    CHECK(run_case("zeta2", o).json.dump() == run_case("zeta2", o).json.dump());
}
