#include "apery/operator/theta_operator.hpp"

#include <algorithm>
#include <cmath>

namespace apery::op {

ThetaOperator::ThetaOperator(std::vector<Poly> polys) : polys_(std::move(polys))
{
    if (polys_.empty())
        throw OperatorError("theta operator needs at least P_0");
    order_ = polys_[0].degree();
    if (order_ < 0 || polys_[0] != Poly::monomial(order_))
        throw OperatorError("P_0 must be a monic pure power of theta");
    for (std::size_t j = 1; j < polys_.size(); ++j)
        if (polys_[j].degree() > order_)
            throw OperatorError("deg P_" + std::to_string(j) + " exceeds the operator order");
    while (polys_.size() > 1 && polys_.back().is_zero())
        polys_.pop_back();
}

ThetaOperator ThetaOperator::from_strings(const std::vector<std::vector<std::string>> &polys)
{
    std::vector<Poly> p;
    for (const auto &c : polys)
        p.push_back(Poly::from_strings(c));
    return ThetaOperator(std::move(p));
}

Poly ThetaOperator::theta_coefficient(int i) const
{
    std::vector<Rational> c(polys_.size());
    for (std::size_t j = 0; j < polys_.size(); ++j)
        c[j] = polys_[j].coeff(i);
    return Poly(std::move(c));
}

std::vector<std::complex<double>> poly_roots(const Poly &p)
{
    int n = p.degree();
    if (n < 1)
        return {};
    using C = std::complex<long double>;
    std::vector<C> a(static_cast<std::size_t>(n) + 1);
    long double lead = p.coeff(n).get_d();
    for (int i = 0; i <= n; ++i)
        a[i] = static_cast<long double>(p.coeff(i).get_d()) / lead;
    auto eval = [&](C z) {
        C r = 0;
        for (int i = n; i >= 0; --i)
            r = r * z + a[i];
        return r;
    };
    std::vector<C> z(static_cast<std::size_t>(n));
    C seed(0.4L, 0.9L);
    for (int i = 0; i < n; ++i)
        z[i] = std::pow(seed, i);
    for (int iter = 0; iter < 2000; ++iter) {
        long double change = 0;
        for (int i = 0; i < n; ++i) {
            C den = 1;
            for (int j = 0; j < n; ++j)
                if (j != i)
                    den *= z[i] - z[j];
            C step = eval(z[i]) / den;
            z[i] -= step;
            change = std::max(change, std::abs(step));
        }
        if (change < 1e-18L)
            break;
    }
    std::vector<std::complex<double>> out;
    for (auto &r : z)
        out.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
    return out;
}

std::vector<std::complex<double>> singular_points(const ThetaOperator &op)
{
    return poly_roots(op.leading_coefficient());
}

double singularity_ratio(const Poly &h)
{
    auto roots = poly_roots(h);
    std::vector<double> mods;
    for (auto &r : roots)
        mods.push_back(std::abs(r));
    std::sort(mods.begin(), mods.end());
    for (std::size_t i = 1; i < mods.size(); ++i)
        if (mods[i] > mods[0] * (1 + 1e-6))
            return mods[i] / mods[0];
    return 1.0;
}

} // namespace apery::op
