#pragma once

#include <vector>

#include "apery/lfunctions/lseries.hpp"

namespace apery::lfun {

struct AbelOptions {
    /// deltas are 2^-lo_exp .. 2^-hi_exp
    int lo_exp = 5;
    int hi_exp = 12;
    /// polynomial degree of the extrapolation in delta
    int order = 4;
    Precision prec = 128;
};

struct AbelResult {
    Complex value;
    /// |difference of the last two window extrapolants|
    double error_estimate = 0;
    std::vector<Complex> ladder;
    std::size_t terms = 0;
};

/// lim_{delta->0} sum_n w_{n mod P} c_n n^{-s} e^{-delta n} by polynomial
/// extrapolation in delta of the smoothed partial sums.
/// Sequences whose weighted coefficients have a nonzero mean pick up
/// delta^k log delta terms and are not handled.
AbelResult abel_regularized_sum(CoefficientStream &coeffs, const std::vector<Complex> &periodic_weights, int s,
                                const AbelOptions &opts = {});

/// Twist e^{2 pi i n r}.
AbelResult abel_twisted(CoefficientStream &coeffs, const mpq_class &phase, int s, const AbelOptions &opts = {});

/// Restriction to n = residue (mod modulus).
AbelResult abel_residue_class(CoefficientStream &coeffs, long residue, long modulus, int s,
                              const AbelOptions &opts = {});

} // namespace apery::lfun
