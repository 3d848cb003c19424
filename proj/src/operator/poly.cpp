#include "apery/operator/poly.hpp"

#include <sstream>

namespace apery::op {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    for (auto &c : coeffs_)
        c.canonicalize();
    trim();
}

Poly Poly::from_strings(const std::vector<std::string> &coeffs)
{
    return Poly(series::parse_rationals(coeffs));
}

Poly Poly::monomial(int degree, const Rational &c)
{
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v[degree] = c;
    return Poly(std::move(v));
}

void Poly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rational Poly::coeff(int i) const
{
    if (i < 0 || i > degree())
        return 0;
    return coeffs_[i];
}

int Poly::valuation() const
{
    for (int i = 0; i <= degree(); ++i)
        if (coeffs_[i] != 0)
            return i;
    return -1;
}

Rational Poly::operator()(const Rational &x) const
{
    Rational r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        r = r * x + *it;
    return r;
}

Poly Poly::shifted(const Rational &c) const
{
    // Horner in the polynomial ring: r = r*(x+c) + a_i.
    Poly lin(std::vector<Rational>{c, 1});
    Poly r;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        r = r * lin + Poly(std::vector<Rational>{*it});
    return r;
}

Poly Poly::operator+(const Poly &o) const
{
    std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return Poly(std::move(v));
}

Poly Poly::operator-(const Poly &o) const { return *this + o * Rational(-1); }

Poly Poly::operator*(const Poly &o) const
{
    if (is_zero() || o.is_zero())
        return Poly();
    std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * o.coeffs_[j];
    return Poly(std::move(v));
}

Poly Poly::operator*(const Rational &c) const
{
    std::vector<Rational> v = coeffs_;
    for (auto &x : v)
        x *= c;
    return Poly(std::move(v));
}

std::string Poly::to_string(const std::string &var) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational &c = coeffs_[i];
        if (c == 0)
            continue;
        Rational mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? "-" : "+");
        first = false;
        if (i == 0 || mag != 1)
            os << mag.get_str();
        if (i >= 1)
            os << var;
        if (i >= 2)
            os << '^' << i;
    }
    return os.str();
}

std::vector<std::string> Poly::to_strings() const
{
    std::vector<std::string> out;
    for (const auto &c : coeffs_)
        out.push_back(c.get_str());
    return out;
}

} // namespace apery::op
