#include "apery/series/rational.hpp"

#include <cctype>

namespace apery::series {

Rational parse_rational(const std::string &text)
{
    std::string trimmed;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            trimmed.push_back(ch);
    if (trimmed.empty())
        throw SeriesError("empty rational literal");
    auto valid = [](const std::string &s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+'))
            ++i;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                return false;
        return true;
    };
    auto slash = trimmed.find('/');
    std::string num = trimmed.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : trimmed.substr(slash + 1);
    if (!valid(num, true) || !valid(den, false))
        throw SeriesError("not a rational literal: " + text);
    if (num[0] == '+')
        num.erase(0, 1);
    Integer n(num), d(den);
    if (d == 0)
        throw SeriesError("zero denominator in " + text);
    Rational out(n, d);
    out.canonicalize();
    return out;
}

std::string to_string(const Rational &value) { return value.get_str(); }

std::vector<Rational> parse_rationals(const std::vector<std::string> &texts)
{
    std::vector<Rational> out;
    out.reserve(texts.size());
    for (const auto &t : texts)
        out.push_back(parse_rational(t));
    return out;
}

bool is_integer(const Rational &value) { return value.get_den() == 1; }

Integer common_denominator(const std::vector<Rational> &values)
{
    Integer l = 1;
    for (const auto &v : values)
        if (v.get_den() != 1)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    return l;
}

} // namespace apery::series
