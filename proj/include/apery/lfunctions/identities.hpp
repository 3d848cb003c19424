#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "apery/lfunctions/abel.hpp"

namespace apery::lfun {

/// A registered functional equation for twists of a form.
struct FunctionalEquation {
    std::string name;
    mpq_class scale_sq;
    mpq_class a_over_c;
    mpq_class d_over_c;
};

struct FormData {
    std::string name;
    StreamPtr coeffs;
    int weight = 3;
    std::vector<FunctionalEquation> equations;
};

struct Matrix2 {
    long a, b, c, d;
};

struct IdentityCheck {
    std::string identity;
    Complex lhs;
    Complex rhs;
    Real abs_error;
    int digits_requested = 0;
    std::string method;
    double tolerance = 0;
    bool pass = false;
};

nlohmann::ordered_json to_json(const IdentityCheck &c, int digits);

/// Self-dual L-series data for one registered functional equation.
LSeriesData equation_data(const FormData &f, const FunctionalEquation &fe);
/// Registered equation by name; throws when absent.
const FunctionalEquation &find_equation(const FormData &f, const std::string &name);

/// L-series data of the twist by e^{2 pi i n a/c} attached to gamma.
LSeriesData twist_data(const FormData &f, const Matrix2 &gamma);

/// Compare L(k-1), L*(k-1) and L_alpha(k-1) for a parabolic gamma fixing
/// alpha. Smoothed values are cross-checked against Abel sums to 1e-6.
std::vector<IdentityCheck> verify_stabilizer_identity(const FormData &f, const Matrix2 &gamma, int digits,
                                                      const AbelOptions &abel = {});

/// Residue-class identities: "mod12" or "mod16".
std::vector<IdentityCheck> corollary_checks(const std::string &which, const FormData &f, int digits,
                                            const AbelOptions &abel = {});

} // namespace apery::lfun
