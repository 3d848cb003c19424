#include "apery/lfunctions/identities.hpp"

#include <cmath>

namespace apery::lfun {

namespace {

constexpr double abel_agreement = 1e-6;

mpq_class frac_part(const mpq_class &x)
{
    mpz_class num = x.get_num() % x.get_den();
    if (num < 0)
        num += x.get_den();
    mpq_class r(num, x.get_den());
    r.canonicalize();
    return r;
}

IdentityCheck make_check(std::string identity, const Complex &lhs, const Complex &rhs, int digits, std::string method,
                         double tol)
{
    IdentityCheck c{std::move(identity), lhs, rhs, abs(lhs - rhs), digits, std::move(method), tol, false};
    c.pass = c.abs_error.to_double() < tol;
    return c;
}

const FunctionalEquation *equation_for_phase(const FormData &f, const mpq_class &phase)
{
    for (const auto &fe : f.equations)
        if (frac_part(fe.a_over_c) == frac_part(phase))
            return &fe;
    return nullptr;
}

} // namespace

LSeriesData equation_data(const FormData &f, const FunctionalEquation &fe)
{
    LSeriesData d;
    d.coeffs = f.coeffs;
    d.dual_coeffs = f.coeffs;
    d.weight = f.weight;
    d.scale_sq = fe.scale_sq;
    d.a_over_c = fe.a_over_c;
    d.d_over_c = fe.d_over_c;
    return d;
}

const FunctionalEquation &find_equation(const FormData &f, const std::string &name)
{
    for (const auto &fe : f.equations)
        if (fe.name == name)
            return fe;
    throw LFunctionError("form " + f.name + " has no functional equation named '" + name + "'");
}

nlohmann::ordered_json to_json(const IdentityCheck &c, int digits)
{
    auto show = [digits](const Complex &z) {
        if (z.im().is_zero())
            return z.re().to_string(digits);
        return z.to_string(digits);
    };
    nlohmann::ordered_json j;
    j["identity"] = c.identity;
    j["lhs"] = show(c.lhs);
    j["rhs"] = show(c.rhs);
    j["abs_error"] = c.abs_error.to_string(3);
    j["digits_requested"] = c.digits_requested;
    j["method"] = c.method;
    j["pass"] = c.pass;
    return j;
}

LSeriesData twist_data(const FormData &f, const Matrix2 &g)
{
    if (g.c <= 0)
        throw LFunctionError("twist matrix needs c > 0");
    LSeriesData d;
    d.coeffs = f.coeffs;
    d.dual_coeffs = f.coeffs;
    d.weight = f.weight;
    d.scale_sq = mpq_class(g.c) * g.c;
    d.a_over_c = mpq_class(g.a, g.c);
    d.d_over_c = mpq_class(g.d, g.c);
    d.a_over_c.canonicalize();
    d.d_over_c.canonicalize();
    return d;
}

std::vector<IdentityCheck> verify_stabilizer_identity(const FormData &f, const Matrix2 &g, int digits,
                                                      const AbelOptions &abel)
{
    mpz_class det = mpz_class(g.a) * g.d - mpz_class(g.b) * g.c;
    if (det != 1)
        throw LFunctionError("matrix determinant is " + det.get_str() + ", expected 1");
    if (g.c <= 0)
        throw LFunctionError("matrix needs c > 0");
    if (g.a + g.d != 2)
        throw LFunctionError("matrix is not parabolic with trace 2");
    mpq_class alpha(g.a - g.d, 2 * g.c);
    alpha.canonicalize();
    if (mpq_class(g.c) * alpha * alpha + mpq_class(g.d - g.a) * alpha - g.b != 0)
        throw LFunctionError("alpha is not fixed by the matrix");

    const int s = f.weight - 1;
    const Precision p = analytic::bits_for_digits(digits, 32);
    const double tol = std::pow(10.0, -digits);
    std::vector<IdentityCheck> out;

    LSeriesData L = twist_data(f, g);
    auto vL = lvalue_smoothed(L, s, digits + 6);
    L.eps = vL.eps;
    auto vS = lvalue_smoothed(L.dual(), s, digits + 6);

    Complex lalpha(p);
    std::string alpha_method;
    if (const auto *fe = equation_for_phase(f, alpha)) {
        lalpha = lvalue_smoothed(equation_data(f, *fe), s, digits + 6).value;
        alpha_method = "smoothed(" + fe->name + ")";
    } else {
        lalpha = abel_twisted(*f.coeffs, alpha, s, abel).value;
        alpha_method = "abel";
    }

    std::string ga = "(" + std::to_string(g.a) + "," + std::to_string(g.b) + ";" + std::to_string(g.c) + "," +
                     std::to_string(g.d) + ")";
    out.push_back(make_check("L(" + std::to_string(s) + ") = L*(" + std::to_string(s) + ") for " + ga, vL.value,
                             vS.value, digits, "smoothed", tol));
    out.push_back(make_check("L(" + std::to_string(s) + ") = L_alpha(" + std::to_string(s) + "), alpha = " +
                                 alpha.get_str(),
                             vL.value, lalpha, digits, alpha_method, tol));
    out.push_back(make_check("L*(" + std::to_string(s) + ") = L_alpha(" + std::to_string(s) + ")", vS.value, lalpha,
                             digits, "smoothed/" + alpha_method, tol));

    // Abel oracle for the two twisted sums.
    auto aL = abel_twisted(*f.coeffs, L.a_over_c, s, abel);
    out.push_back(make_check("smoothed L vs Abel, phase " + L.a_over_c.get_str(), vL.value, aL.value, digits,
                             "smoothed/abel", abel_agreement));
    auto aS = abel_twisted(*f.coeffs, -L.d_over_c, s, abel);
    mpq_class dual_phase = -L.d_over_c;
    out.push_back(make_check("smoothed L* vs Abel, phase " + dual_phase.get_str(), vS.value, aS.value, digits,
                             "smoothed/abel", abel_agreement));
    return out;
}

std::vector<IdentityCheck> corollary_checks(const std::string &which, const FormData &f, int digits,
                                            const AbelOptions &abel)
{
    const int s = f.weight - 1;
    const Precision p = analytic::bits_for_digits(digits, 32);
    const double tol = std::pow(10.0, -digits);
    const auto *fe = equation_for_phase(f, 0);
    if (!fe)
        throw LFunctionError("form " + f.name + " has no untwisted functional equation");
    auto base = lvalue_smoothed(equation_data(f, *fe), s, digits + 6);
    const Complex &L = base.value;
    std::string sname = std::to_string(s);
    std::vector<IdentityCheck> out;

    auto abel_L = abel_twisted(*f.coeffs, 0, s, abel);
    out.push_back(make_check("smoothed L(" + sname + ") vs Abel", L, abel_L.value, digits, "smoothed/abel",
                             abel_agreement));

    if (which == "mod12") {
        Real r3 = analytic::sqrt(Real(3L, p));
        auto L1 = abel_residue_class(*f.coeffs, 1, 12, s, abel).value;
        auto L7 = abel_residue_class(*f.coeffs, 7, 12, s, abel).value;
        Real two(2L, p);
        out.push_back(make_check("sum_{n=1 (12)} = (2+sqrt3)/3 L", L1, L * ((two + r3) / 3L), digits, "abel", tol));
        out.push_back(make_check("sum_{n=7 (12)} = (2-sqrt3)/3 L", L7, L * ((two - r3) / 3L), digits, "abel", tol));
        out.push_back(make_check("sum_{n=1 (12)} + sum_{n=7 (12)} = 4/3 L", L1 + L7,
                                 L * (Real(4L, p) / 3L), digits, "abel", tol));
        out.push_back(make_check("sum_{n=1 (12)} - sum_{n=7 (12)} = 2/sqrt3 L", L1 - L7, L * (two / r3), digits,
                                 "abel", tol));
    } else if (which == "mod16") {
        Real th = analytic::const_pi(p) / 8L;
        std::vector<Complex> Ls;
        for (long i = 0; i < 4; ++i)
            Ls.push_back(abel_residue_class(*f.coeffs, 4 * i + 1, 16, s, abel).value);
        out.push_back(make_check("sum_{n=1 (16)} - sum_{n=9 (16)} = cos(pi/8) L", Ls[0] - Ls[2],
                                 L * analytic::cos(th), digits, "abel", tol));
        out.push_back(make_check("sum_{n=5 (16)} - sum_{n=13 (16)} = -sin(pi/8) L", Ls[1] - Ls[3],
                                 L * (-analytic::sin(th)), digits, "abel", tol));
        Complex total = Ls[0] + Ls[1] + Ls[2] + Ls[3];
        out.push_back(make_check("sum over n = 1 (4) equals L", total, L, digits, "abel", tol));
    } else {
        throw LFunctionError("unknown corollary '" + which + "' (expected mod12 or mod16)");
    }
    return out;
}

} // namespace apery::lfun
