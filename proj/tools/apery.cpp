#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "apery/core/run_case.hpp"
#include "apery/operator/recurrence.hpp"
#include "apery/operator/sequences.hpp"

using namespace apery;
using nlohmann::ordered_json;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string case_id;
    std::string which = "all";
    std::string what = "sequences";
    std::optional<int> n;
    std::optional<int> digits;
    int prec_bits = 256;
    int series_order = 200;
    std::string format;
    std::string out;
};

void emit(const std::string &text, const std::string &path)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f)
        throw std::runtime_error("cannot write " + path);
    f << text;
}

std::string pad(std::string s, std::size_t w)
{
    if (s.size() < w)
        s.append(w - s.size(), ' ');
    return s;
}

std::string case_line(const ordered_json &r)
{
    auto field = [&](const char *k) {
        if (!r.contains(k))
            return std::string("-");
        return r[k].is_string() ? r[k].get<std::string>() : r[k].dump();
    };
    return pad(field("case"), 11) + pad(r["pass"].get<bool>() ? "PASS" : "FAIL", 6) + pad(field("n_used"), 7) +
           pad(field("abs_error"), 11) + pad(field("rate_model"), 11) + field("fitted_rate");
}

std::string case_text(const ordered_json &r)
{
    std::ostringstream os;
    os << r["case"].get<std::string>() << ": " << r["title"].get<std::string>() << "\n";
    for (const char *k : {"ode_verified_to", "integrand_match_order", "n_used", "limit_estimate", "target",
                          "target_expression", "abs_error", "rate_model", "fitted_rate"})
        if (r.contains(k))
            os << "  " << pad(k, 22) << (r[k].is_string() ? r[k].get<std::string>() : r[k].dump()) << "\n";
    for (const auto &c : r["checks"]) {
        std::string status = c.value("warning", false) ? "WARN" : (c["pass"].get<bool>() ? "ok  " : "FAIL");
        os << "  [" << status << "] " << c["name"].get<std::string>();
        if (c.contains("error"))
            os << ": " << c["error"].get<std::string>();
        if (c.contains("discrepancies"))
            for (const auto &d : c["discrepancies"])
                os << "\n         term " << d["term"].dump() << ": stated " << d["stated"].get<std::string>()
                   << ", derived " << d["derived"].get<std::string>();
        if (c.contains("mismatches"))
            for (const auto &d : c["mismatches"])
                os << "\n         " << d["value"].get<std::string>() << ": stated " << d["stated"].get<std::string>()
                   << ", computed " << d["computed"].get<std::string>();
        os << "\n";
    }
    os << "  result: " << (r["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

int cmd_verify(const Config &cfg)
{
    std::vector<std::string> ids;
    if (cfg.case_id == "all") {
        ids = core::case_ids();
    } else {
        if (!core::has_case(cfg.case_id))
            throw UsageError("unknown case '" + cfg.case_id + "'");
        ids = {cfg.case_id};
    }
    core::RunOptions opts;
    opts.n = cfg.n;
    opts.digits = cfg.digits;
    opts.prec_bits = cfg.prec_bits;
    opts.series_order = cfg.series_order;

    std::vector<core::CaseReport> reports(ids.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < ids.size();) {
            try {
                reports[i] = core::run_case(ids[i], opts);
            } catch (const std::exception &e) {
                reports[i].json = {{"case", ids[i]}, {"pass", false}, {"error", e.what()}};
                reports[i].pass = false;
            }
        }
    };
    unsigned nw = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), ids.size()));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < nw; ++w)
        pool.emplace_back(worker);
    for (auto &t : pool)
        t.join();

    bool pass = true;
    for (const auto &r : reports)
        pass = pass && r.pass;
    std::string format = cfg.format.empty() ? "json" : cfg.format;
    std::string text;
    if (format == "json") {
        if (reports.size() == 1) {
            text = reports[0].json.dump(2) + "\n";
        } else {
            ordered_json all;
            all["pass"] = pass;
            all["cases"] = ordered_json::array();
            for (const auto &r : reports)
                all["cases"].push_back(r.json);
            text = all.dump(2) + "\n";
        }
    } else if (format == "text") {
        for (const auto &r : reports)
            text += r.json.contains("checks") ? case_text(r.json) : r.json.dump() + "\n";
        if (reports.size() > 1) {
            text += "\n" + pad("case", 11) + pad("", 6) + pad("n", 7) + pad("abs_error", 11) + pad("rate", 11) +
                    "fitted\n";
            for (const auto &r : reports)
                text += case_line(r.json) + "\n";
        }
    } else {
        throw UsageError("verify supports --format json or text");
    }
    emit(text, cfg.out);
    return pass ? exit_pass : exit_fail;
}

int cmd_identities(const Config &cfg)
{
    int digits = cfg.digits.value_or(8);
    core::IdentitiesReport rep;
    try {
        rep = core::run_identities(cfg.which, digits);
    } catch (const core::RegistryError &e) {
        throw UsageError(e.what());
    }
    std::string format = cfg.format.empty() ? "json" : cfg.format;
    std::string text;
    if (format == "json") {
        text = rep.json.dump(2) + "\n";
    } else if (format == "text") {
        std::ostringstream os;
        for (const auto &g : rep.json["groups"]) {
            os << g["group"].get<std::string>() << ": " << (g["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
            if (g.contains("error"))
                os << "  error: " << g["error"].get<std::string>() << "\n";
            for (const auto &c : g.value("checks", ordered_json::array()))
                os << "  [" << (c["pass"].get<bool>() ? "ok  " : "FAIL") << "] " << c["identity"].get<std::string>()
                   << "  |lhs - rhs| = " << c["abs_error"].get<std::string>() << "  (" << c["method"].get<std::string>()
                   << ")\n";
        }
        text = os.str();
    } else {
        throw UsageError("identities supports --format json or text");
    }
    emit(text, cfg.out);
    return rep.pass ? exit_pass : exit_fail;
}

int cmd_dump(const Config &cfg)
{
    if (!core::has_case(cfg.case_id))
        throw UsageError("unknown case '" + cfg.case_id + "'");
    auto c = core::load_case(cfg.case_id);
    int n = cfg.n.value_or(10);
    std::string format = cfg.format.empty() ? "csv" : cfg.format;
    if (format != "csv" && format != "json")
        throw UsageError("dump supports --format csv or json");
    std::ostringstream os;
    if (cfg.what == "sequences") {
        auto rec = op::ode_to_recurrence(c.theta_operator(), c.rhs);
        op::SequenceOptions so;
        if (static_cast<std::size_t>(n) > so.exact_limit)
            throw UsageError("sequence dumps are exact and limited to n <= " + std::to_string(so.exact_limit));
        auto run = op::run_sequences(rec, static_cast<std::size_t>(n), so);
        if (format == "csv") {
            os << "n,a_n,b_n\n";
            for (int m = 0; m <= n; ++m)
                os << m << "," << series::to_string(run.a(m)) << "," << series::to_string(run.b(m)) << "\n";
        } else {
            ordered_json j;
            j["case"] = c.id;
            j["a"] = ordered_json::array();
            j["b"] = ordered_json::array();
            for (int m = 0; m <= n; ++m) {
                j["a"].push_back(series::to_string(run.a(m)));
                j["b"].push_back(series::to_string(run.b(m)));
            }
            os << j.dump(2) << "\n";
        }
    } else {
        series::QSeries s = series::QSeries::one(0);
        series::QSeries t = core::build_form(c.t_form, n + 4);
        series::QSeries A = core::build_form(c.A_form, n + 2, {&t, nullptr});
        if (cfg.what == "tseries")
            s = core::build_form(c.t_form, n);
        else if (cfg.what == "Aseries")
            s = A.truncated(n);
        else if (cfg.what == "integrand")
            s = core::build_form(c.integrand, n, {&t, &A});
        else
            throw UsageError("unknown --what '" + cfg.what + "' (sequences, tseries, Aseries, integrand)");
        if (format == "csv") {
            os << "exponent,coefficient\n";
            for (int i = 0; i <= s.trunc_order(); ++i)
                os << series::to_string(s.lead_exp() + i) << "," << series::to_string(s[i]) << "\n";
        } else {
            ordered_json j;
            j["case"] = c.id;
            j["what"] = cfg.what;
            j["series"] = series::to_json(s);
            os << j.dump(2) << "\n";
        }
    }
    emit(os.str(), cfg.out);
    return exit_pass;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Apery limits via modular forms: recurrences, q-series certificates and L-values"};
    app.require_subcommand(1);
    Config cfg;

    auto common = [&](CLI::App *sub) {
        sub->add_option("--format", cfg.format, "json, text or csv")->check(CLI::IsMember({"json", "text", "csv"}));
        sub->add_option("--out", cfg.out, "write the report to a file");
    };

    auto *verify = app.add_subcommand("verify", "run the end-to-end check of a case");
    verify->add_option("--case", cfg.case_id, "case id or 'all'")->required();
    verify->add_option("--n", cfg.n, "index of the ratio b_n/a_n")->check(CLI::Range(1, 10000000));
    verify->add_option("--digits", cfg.digits, "agreement digits for geometric cases")->check(CLI::Range(6, 100000));
    verify->add_option("--prec-bits", cfg.prec_bits, "minimum working precision")->check(CLI::Range(64, 1 << 24));
    verify->add_option("--series-order", cfg.series_order, "order of the exact q-series checks")
        ->check(CLI::Range(1, 100000));
    common(verify);

    auto *ident = app.add_subcommand("identities", "check the twisted L-value identities");
    ident->add_option("--which", cfg.which, "stabilizer, mod12, mod16 or all");
    ident->add_option("--digits", cfg.digits, "agreement digits")->check(CLI::Range(6, 14));
    common(ident);

    auto *dump = app.add_subcommand("dump", "write sequences or q-series of a case");
    dump->add_option("--case", cfg.case_id, "case id")->required();
    dump->add_option("--what", cfg.what, "sequences, tseries, Aseries or integrand");
    dump->add_option("--n", cfg.n, "last index or exponent")->check(CLI::Range(0, 100000));
    common(dump);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return e.get_exit_code() == 0 ? rc : exit_usage;
    }

    try {
        if (*verify)
            return cmd_verify(cfg);
        if (*ident)
            return cmd_identities(cfg);
        return cmd_dump(cfg);
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const core::RegistryError &e) {
        std::cerr << "registry error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_fail;
    }
}
