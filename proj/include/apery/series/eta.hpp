#pragma once

#include <utility>
#include <vector>

#include "apery/series/qseries.hpp"

namespace apery::series {

/// Coefficients of prod_{n>=1} (1-q^n)^{c_n} through q^N, given c_1..c_N
/// (exponents[0] is ignored).
std::vector<Integer> product_expansion(const std::vector<long> &exponents, int N);

/// prod eta(m tau)^e
struct EtaQuotient {
    std::vector<std::pair<long, long>> factors;

    Rational lead_exp() const;
    /// Weight sum(e)/2.
    Rational weight() const;
};

/// Exact q-expansion through relative order N.
QSeries expand(const EtaQuotient &eq, int N);

/// q^lead prod_{n>=1} (1-q^n)^{e(n mod M)}
struct PeriodicProduct {
    Rational lead;
    std::vector<long> exponents;
};

QSeries expand(const PeriodicProduct &pp, int N);

} // namespace apery::series
