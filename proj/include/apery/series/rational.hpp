#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace apery::series {

using Rational = mpq_class;
using Integer = mpz_class;

class SeriesError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parse "p/q", "-p/q" or an integer literal. The result is canonical.
Rational parse_rational(const std::string &text);
std::string to_string(const Rational &value);

std::vector<Rational> parse_rationals(const std::vector<std::string> &texts);

bool is_integer(const Rational &value);

/// Least common multiple of all denominators (1 for an empty range).
Integer common_denominator(const std::vector<Rational> &values);

} // namespace apery::series
