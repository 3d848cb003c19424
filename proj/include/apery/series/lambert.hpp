#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apery/series/qseries.hpp"

namespace apery::series {

// Registered Lambert shapes, psi(n) = weights[n mod modulus]:
//   divisor               sum_n psi(n) n^p q^n / (1 - q^n)
//   codivisor             sum_n n^p sum_k psi(k) q^{kn}
//   alternating_one_plus  sum_n psi(n) (-1)^{n-1} n^p q^n / (1 + q^{2n})
enum class LambertShape { divisor, codivisor, alternating_one_plus };

LambertShape parse_lambert_shape(const std::string &name);
std::string to_string(LambertShape shape);

/// constant + scale * (shape sum)
struct LambertSeries {
    LambertShape shape = LambertShape::divisor;
    std::vector<Rational> weights;
    int power = 0;
    Rational constant = 0;
    Rational scale = 1;
};

QSeries expand(const LambertSeries &ls, int N);

/// Divisor power sum sigma_k(n).
Integer divisor_sigma(long n, int k);

enum class EisensteinKind { E2, E4 };

/// E2 = 1 - 24 sum sigma_1(n) q^n, E4 = 1 + 240 sum sigma_3(n) q^n, in q^multiplier.
QSeries eisenstein(EisensteinKind kind, long multiplier, int N);

/// scale * sum_{n>=0} (-1)^n (2n+1) q^{multiplier (2n+1)^2} through relative
/// order N. 8*multiplier must be an integer.
QSeries triple_product_sparse(const Rational &multiplier, int N, const Rational &scale = 1);

// Machine-integer expansions for long coefficient streams. Entry n is the
// coefficient of q^n; overflow raises SeriesError.

/// Product of the two sparse triple products; m1 + m2 must be an integer.
std::vector<std::int64_t> triple_product_pair_coefficients(const Rational &m1, const Rational &m2, std::size_t N);

/// Integer-weighted Lambert series (weights, constant and scale integral).
std::vector<std::int64_t> lambert_coefficients(const LambertSeries &ls, std::size_t N);

} // namespace apery::series
