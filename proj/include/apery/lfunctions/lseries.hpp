#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "apery/analytic/hp.hpp"

namespace apery::lfun {

using analytic::Certified;
using analytic::Complex;
using analytic::Precision;
using analytic::Real;

class LFunctionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Extend-on-demand integer coefficients c_0..c_N of a q-expansion.
///
/// ensure() is the only mutating call and must be externally serialized;
/// reads of an already materialized prefix are safe from any thread.
class CoefficientStream {
public:
    using Generator = std::function<std::vector<std::int64_t>(std::size_t N)>;

    CoefficientStream(std::string name, Generator gen);

    const std::string &name() const { return name_; }
    void ensure(std::size_t N);
    /// Index of the last materialized coefficient.
    std::size_t top() const { return data_.empty() ? 0 : data_.size() - 1; }
    std::int64_t operator[](std::size_t n) const { return data_.at(n); }
    const std::vector<std::int64_t> &data() const { return data_; }
    /// Smallest C with |c_n| <= C n^sigma over the materialized range.
    double growth_constant(int sigma) const;

private:
    std::string name_;
    Generator gen_;
    std::vector<std::int64_t> data_;
};

using StreamPtr = std::shared_ptr<CoefficientStream>;

/// Functional-equation data for L(s) = sum c_n e^{2 pi i n a/c} n^{-s}:
/// (2pi/c)^{-s} Gamma(s) L(s) = i^k eps (2pi/c)^{s-k} Gamma(k-s) L*(k-s),
/// L*(s) = sum c*_n e^{-2 pi i n d/c} n^{-s}.
struct LSeriesData {
    StreamPtr coeffs;
    StreamPtr dual_coeffs;
    int weight = 3;
    /// c^2, so irrational scales such as 2 sqrt 3 stay exact.
    mpq_class scale_sq = 1;
    mpq_class a_over_c = 0;
    mpq_class d_over_c = 0;
    std::optional<Complex> eps;

    /// The functional equation read from the other side: phases -d/c and
    /// -a/c, root number eps^{-1} (-1)^k.
    LSeriesData dual() const;
};

struct SmoothedValue {
    Complex value;
    Real error_bound;
    Complex eps;
    /// Largest deviation of the completed value across split points.
    Real fe_residual;
    std::size_t terms = 0;
};

/// L(s) from the two-sum split at y = 1. Detects eps when absent; throws
/// when the functional equation fails at the probe split points.
SmoothedValue lvalue_smoothed(const LSeriesData &spec, int s, int target_digits);

/// Solve the functional equation for eps at split points 1 and y_probe and
/// snap to a 24th root of unity.
Complex detect_root_number(const LSeriesData &spec, int s, int target_digits = 30,
                           const mpq_class &y_probe = mpq_class(5, 4));

/// Upper incomplete gamma for integer m >= 1 (closed form).
Real upper_gamma_int(int m, const Real &x);

} // namespace apery::lfun
