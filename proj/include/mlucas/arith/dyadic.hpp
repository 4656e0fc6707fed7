#pragma once

#include <concepts>
#include <cstdint>

#include <mlucas/arith/integer.hpp>

namespace mlucas::arith
{

/// Exact element of Z[1/2], stored as num / 2^exp.
///
/// The representation is canonical: either exp == 0, or num is odd. Zero is
/// always 0 / 2^0. Because of this, structural equality is value equality.
class Dyadic
{
public:
    Dyadic() = default;

    template <std::integral I>
    Dyadic(I n) : m_num(n)
    {
    }

    Dyadic(Integer n) : m_num(std::move(n)) {}

    /// Canonical form of num / 2^exp. Throws std::invalid_argument if exp < 0.
    static Dyadic normalize(Integer num, std::int64_t exp);

    const Integer &num() const noexcept
    {
        return m_num;
    }
    std::int64_t exp() const noexcept
    {
        return m_exp;
    }

    bool is_zero() const noexcept
    {
        return m_num == 0;
    }
    bool is_integer() const noexcept
    {
        return m_exp == 0;
    }
    // Units of Z[1/2] are +-2^k.
    bool is_unit() const;

    Dyadic inverse() const;

    // this * 2^k; k may be negative.
    Dyadic scaled_pow2(std::int64_t k) const;

    double to_double() const;

    Dyadic operator-() const;

    friend Dyadic operator+(const Dyadic &a, const Dyadic &b);
    friend Dyadic operator-(const Dyadic &a, const Dyadic &b);
    friend Dyadic operator*(const Dyadic &a, const Dyadic &b);

    Dyadic &operator+=(const Dyadic &o)
    {
        return *this = *this + o;
    }
    Dyadic &operator-=(const Dyadic &o)
    {
        return *this = *this - o;
    }
    Dyadic &operator*=(const Dyadic &o)
    {
        return *this = *this * o;
    }

    friend bool operator==(const Dyadic &, const Dyadic &) = default;

private:
    Integer m_num{0};
    std::int64_t m_exp{0};
};

} // namespace mlucas::arith
