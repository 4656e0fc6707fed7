#include <mlucas/arith/dyadic.hpp>

#include <algorithm>
#include <cmath>

namespace mlucas::arith
{

namespace
{

std::int64_t trailing_zeros(const Integer &v)
{
    return static_cast<std::int64_t>(boost::multiprecision::lsb(boost::multiprecision::abs(v)));
}

// |v| is a power of two.
bool is_power_of_two(const Integer &v)
{
    if (v == 0) {
        return false;
    }
    Integer a = boost::multiprecision::abs(v);
    return (a & (a - 1)) == 0;
}

} // namespace

Dyadic Dyadic::normalize(Integer num, std::int64_t exp)
{
    if (exp < 0) {
        throw std::invalid_argument("Dyadic::normalize: negative exponent");
    }
    Dyadic r;
    if (num == 0) {
        return r;
    }
    const std::int64_t shift = std::min(trailing_zeros(num), exp);
    if (shift > 0) {
        // low bits are zero, so the shift is an exact division for either sign
        num /= Integer{1} << static_cast<unsigned>(shift);
    }
    r.m_num = std::move(num);
    r.m_exp = exp - shift;
    return r;
}

bool Dyadic::is_unit() const
{
    return is_power_of_two(m_num);
}

Dyadic Dyadic::inverse() const
{
    if (!is_unit()) {
        throw not_invertible("Dyadic::inverse: value is not +-2^k");
    }
    const std::int64_t k = trailing_zeros(m_num) - m_exp;
    const int sign = m_num < 0 ? -1 : 1;
    return Dyadic{sign}.scaled_pow2(-k);
}

Dyadic Dyadic::scaled_pow2(std::int64_t k) const
{
    if (is_zero()) {
        return {};
    }
    if (k >= m_exp) {
        Dyadic r;
        r.m_num = m_num << static_cast<unsigned>(k - m_exp);
        return r;
    }
    return normalize(m_num, m_exp - k);
}

double Dyadic::to_double() const
{
    return std::ldexp(m_num.convert_to<double>(), -static_cast<int>(m_exp));
}

Dyadic Dyadic::operator-() const
{
    Dyadic r = *this;
    r.m_num = -r.m_num;
    return r;
}

Dyadic operator+(const Dyadic &a, const Dyadic &b)
{
    if (a.m_exp == b.m_exp) {
        return Dyadic::normalize(a.m_num + b.m_num, a.m_exp);
    }
    if (a.m_exp > b.m_exp) {
        return Dyadic::normalize(a.m_num + (b.m_num << static_cast<unsigned>(a.m_exp - b.m_exp)), a.m_exp);
    }
    return Dyadic::normalize((a.m_num << static_cast<unsigned>(b.m_exp - a.m_exp)) + b.m_num, b.m_exp);
}

Dyadic operator-(const Dyadic &a, const Dyadic &b)
{
    return a + (-b);
}

Dyadic operator*(const Dyadic &a, const Dyadic &b)
{
    return Dyadic::normalize(a.m_num * b.m_num, a.m_exp + b.m_exp);
}

} // namespace mlucas::arith
