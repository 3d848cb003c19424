#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "apery/analytic/constants.hpp"
#include "apery/core/forms.hpp"
#include "apery/lfunctions/identities.hpp"
#include "apery/operator/theta_operator.hpp"

namespace apery::core {

/// a + b sqrt(d)
struct Singularity {
    Rational a, b, d;
    std::string type;
    std::string tau;
    std::complex<double> value() const;
    std::string to_string() const;
};

/// coeff * (constant | L-value of a registered form at s = k-1)
struct TargetTerm {
    Rational coeff;
    std::optional<analytic::Constant> constant;
    std::string form;
    std::string equation;
};

struct RateSpec {
    std::string model; // geometric | power | loglike
    int lo = 0, hi = 0, step = 1;
    double tolerance = 0.05;
    double exponent_lo = 0, exponent_hi = 0;
    Rational power = 0;
    double scaled_max_over_min = 3;
    double extrapolation_tolerance = 1e-3;
};

struct StatedData {
    std::vector<op::Poly> recurrence;
    /// "a1" -> value, "b2" -> value, ...
    std::map<std::string, Rational> initial;
    /// stated b = b_scale * computed b
    Rational b_scale = 1;
};

struct IdentitySpec {
    std::string name;
    nlohmann::json lhs, rhs;
};

struct CaseSpec {
    std::string id;
    std::string title;
    std::vector<op::Poly> operator_polys;
    op::Poly rhs, g_num, g_den;
    nlohmann::json t_form, A_form, integrand;
    std::vector<IdentitySpec> identities;
    std::vector<Singularity> singularities;
    std::vector<TargetTerm> target;
    RateSpec rate;
    int n_default = 50;
    int digits_default = 30;
    StatedData stated;
    nlohmann::json analytic_checks = nlohmann::json::array();

    op::ThetaOperator theta_operator() const { return op::ThetaOperator(operator_polys); }
};

struct FormEntry {
    std::string name;
    nlohmann::json stream;
    int weight = 3;
    std::vector<lfun::FunctionalEquation> equations;
};

struct StabilizerSpec {
    std::string form;
    lfun::Matrix2 gamma{};
    std::vector<TargetTerm> expected;
};

struct FormRegistry {
    std::map<std::string, FormEntry> forms;
    std::vector<StabilizerSpec> stabilizer;
    std::map<std::string, std::string> corollaries;

    /// Fresh coefficient stream per call; callers share it as needed.
    lfun::FormData form_data(const std::string &name) const;
    const FormEntry &entry(const std::string &name) const;
};

/// APERY_REGISTRY if set, else the directory compiled in.
std::string registry_dir();
/// Registered case ids in canonical order.
std::vector<std::string> case_ids();
bool has_case(const std::string &id);
CaseSpec load_case(const std::string &id);
CaseSpec parse_case(const nlohmann::json &j);
FormRegistry load_forms();
FormRegistry parse_forms(const nlohmann::json &j);
std::vector<TargetTerm> parse_target(const nlohmann::json &j);
std::string to_string(const std::vector<TargetTerm> &target);

} // namespace apery::core
