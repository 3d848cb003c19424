#pragma once

#include <string>
#include <vector>

#include "apery/analytic/hp.hpp"

namespace apery::analytic {

class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Constant { pi, pi2, zeta2, zeta3, L2_chi3, L2_chi_minus1 };

Constant parse_constant(const std::string &name);
std::string to_string(Constant c);

Real constant(Constant c, Precision prec);

/// Hurwitz zeta(s, a) for integer s >= 2 and rational 0 < a <= 1, by
/// Euler-Maclaurin summation with exact Bernoulli numbers.
Real hurwitz_zeta(long s, const mpq_class &a, Precision prec);

/// sum_n chi(n) n^{-s} for a function chi periodic mod chi.size(), via
/// m^{-s} sum_r chi(r) zeta(s, r/m).
Real periodic_dirichlet_series(long s, const std::vector<long> &chi, Precision prec);

/// Bernoulli numbers B_0..B_n (B_1 = -1/2).
std::vector<mpq_class> bernoulli_numbers(int n);

} // namespace apery::analytic
