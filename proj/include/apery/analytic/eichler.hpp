#pragma once

#include <vector>

#include "apery/analytic/constants.hpp"
#include "apery/series/qseries.hpp"

namespace apery::analytic {

/// |c_n| <= C n^sigma for all materialized n >= 1.
struct CoefficientBound {
    double C = 0;
    int sigma = 0;
};

/// sum_{n>=1} c_n q^n / n^order
class EichlerSeries {
public:
    /// Coefficients of q^0..q^N of f; c_0 must vanish. The bound defaults to
    /// sigma = order with the smallest C covering every coefficient.
    EichlerSeries(const series::QSeries &f, int order);
    EichlerSeries(std::vector<mpq_class> coeffs, int order, CoefficientBound bound);

    int order() const { return order_; }
    std::size_t size() const { return coeffs_.size(); }
    const std::vector<mpq_class> &coeffs() const { return coeffs_; }
    const CoefficientBound &bound() const { return bound_; }

private:
    std::vector<mpq_class> coeffs_;
    int order_;
    CoefficientBound bound_;
};

/// Smallest C with |c_n| <= C n^sigma over n = 1..N.
CoefficientBound coefficient_bound(const std::vector<mpq_class> &c, int sigma);

/// Value at tau with a certified tail bound <= 10^{-target_digits}.
Certified<Complex> eichler_eval(const EichlerSeries &E, const Complex &tau, int target_digits);

/// sum_{n>=1} chi(n) x^n / (n^power (1 - x^n)) with chi periodic.
Certified<Complex> lambert_character_sum(const Complex &x, const std::vector<long> &chi, int power, int target_digits);

/// sum_{n>=1} (n/3) x^n / (n^2 (1 - x^n))
Certified<Complex> ramanujan_sum(const Complex &x, int target_digits);

} // namespace apery::analytic
