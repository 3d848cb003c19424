#pragma once

#include <optional>
#include <vector>

#include "apery/analytic/hp.hpp"
#include "apery/operator/recurrence.hpp"

namespace apery::op {

using analytic::Precision;
using analytic::Real;

struct SequenceOptions {
    /// Indices up to this bound are computed exactly.
    std::size_t exact_limit = 2000;
    /// Base precision of the floating continuation; raised to
    /// N log2(rho) + 64 bits when the singularity ratio demands it.
    Precision float_prec = 256;
};

/// Homogeneous solution a (a_0 = 1) and source solution b (b_0 = 0) of one
/// recurrence.
///
/// Exact entries are stored as integers over a shared denominator
/// W_m = prod_{i<=m} D i^order, so no gcd work happens during the run.
class SequenceRun {
public:
    std::size_t size() const { return size_; }
    /// Lowest index with a nonzero source coefficient.
    std::size_t source_index() const { return source_index_; }
    std::size_t exact_top() const { return exact_top_; }
    bool is_exact(std::size_t m) const { return m <= exact_top_; }
    Precision float_precision() const { return float_prec_; }

    Rational a(std::size_t m) const;
    Rational b(std::size_t m) const;
    Real a_hp(std::size_t m, Precision prec) const;
    Real b_hp(std::size_t m, Precision prec) const;
    /// b_m / a_m; throws OperatorError when a_m vanishes.
    Real ratio(std::size_t m, Precision prec) const;
    /// Exact b_m / a_m.
    Rational ratio_exact(std::size_t m) const;

    /// Largest relative gap between the floating continuation and the exact
    /// values over the overlap window; nullopt when no continuation ran.
    std::optional<double> switchover_residual() const { return switchover_residual_; }

    friend SequenceRun run_sequences(const Recurrence &rec, std::size_t N, const SequenceOptions &opts);

private:
    std::size_t size_ = 0;
    std::size_t source_index_ = 0;
    std::size_t exact_top_ = 0;
    Precision float_prec_ = 0;
    std::vector<Integer> va_, vb_, scale_;
    std::vector<Real> fa_, fb_;
    std::optional<double> switchover_residual_;
};

/// Sequences through index N.
SequenceRun run_sequences(const Recurrence &rec, std::size_t N, const SequenceOptions &opts = {});

struct SequencePair {
    std::vector<Rational> a;
    std::vector<Rational> b;
    std::size_t j = 0;
};

/// Exact sequences through index N (N must not exceed the exact limit).
SequencePair exact_sequences(const Recurrence &rec, std::size_t N);

} // namespace apery::op
