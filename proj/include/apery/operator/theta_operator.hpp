#pragma once

#include <complex>
#include <vector>

#include "apery/operator/poly.hpp"

namespace apery::op {

/// L = sum_{j=0}^{d} t^j P_j(theta), theta = t d/dt, with P_0 = theta^order.
class ThetaOperator {
public:
    /// polys[j] holds P_j as a polynomial in theta.
    explicit ThetaOperator(std::vector<Poly> polys);
    static ThetaOperator from_strings(const std::vector<std::vector<std::string>> &polys);

    int order() const { return order_; }
    int degree() const { return static_cast<int>(polys_.size()) - 1; }
    const std::vector<Poly> &polys() const { return polys_; }
    const Poly &P(int j) const { return polys_.at(j); }

    /// Coefficient of theta^i as a polynomial in t.
    Poly theta_coefficient(int i) const;
    /// Coefficient of theta^order as a polynomial in t; h(0) = 1.
    Poly leading_coefficient() const { return theta_coefficient(order_); }

private:
    int order_ = 0;
    std::vector<Poly> polys_;
};

/// Complex roots of a polynomial (Durand-Kerner), in no particular order.
std::vector<std::complex<double>> poly_roots(const Poly &p);

/// Nonzero finite singular points: the roots of the leading coefficient h(t).
std::vector<std::complex<double>> singular_points(const ThetaOperator &op);

/// |t_2|/|t_1| for the two smallest distinct root moduli of h; 1 when all
/// roots share one modulus or h is constant.
double singularity_ratio(const Poly &h);

} // namespace apery::op
