#pragma once

#include <concepts>
#include <cstdint>

#include <mlucas/arith/dyadic.hpp>

namespace mlucas::arith
{

/// re + im*i over the dyadic rationals. This is the scalar ring of the whole
/// library: every number and every polynomial coefficient lives here.
class GaussianDyadic
{
public:
    GaussianDyadic() = default;

    template <std::integral I>
    GaussianDyadic(I n) : m_re(n)
    {
    }

    GaussianDyadic(Integer n) : m_re(std::move(n)) {}
    GaussianDyadic(Dyadic re) : m_re(std::move(re)) {}
    GaussianDyadic(Dyadic re, Dyadic im) : m_re(std::move(re)), m_im(std::move(im)) {}

    static GaussianDyadic i()
    {
        return {Dyadic{0}, Dyadic{1}};
    }

    const Dyadic &re() const noexcept
    {
        return m_re;
    }
    const Dyadic &im() const noexcept
    {
        return m_im;
    }

    bool is_zero() const noexcept
    {
        return m_re.is_zero() && m_im.is_zero();
    }
    bool is_real() const noexcept
    {
        return m_im.is_zero();
    }

    GaussianDyadic conj() const
    {
        return {m_re, -m_im};
    }
    // re^2 + im^2
    Dyadic norm() const;

    // Invertible iff the norm is a unit of Z[1/2].
    bool is_unit() const;
    GaussianDyadic inverse() const;

    GaussianDyadic scaled_pow2(std::int64_t k) const
    {
        return {m_re.scaled_pow2(k), m_im.scaled_pow2(k)};
    }

    GaussianDyadic operator-() const
    {
        return {-m_re, -m_im};
    }

    friend GaussianDyadic operator+(const GaussianDyadic &a, const GaussianDyadic &b)
    {
        return {a.m_re + b.m_re, a.m_im + b.m_im};
    }
    friend GaussianDyadic operator-(const GaussianDyadic &a, const GaussianDyadic &b)
    {
        return {a.m_re - b.m_re, a.m_im - b.m_im};
    }
    friend GaussianDyadic operator*(const GaussianDyadic &a, const GaussianDyadic &b);

    GaussianDyadic &operator+=(const GaussianDyadic &o)
    {
        return *this = *this + o;
    }
    GaussianDyadic &operator-=(const GaussianDyadic &o)
    {
        return *this = *this - o;
    }
    GaussianDyadic &operator*=(const GaussianDyadic &o)
    {
        return *this = *this * o;
    }

    friend bool operator==(const GaussianDyadic &, const GaussianDyadic &) = default;

private:
    Dyadic m_re;
    Dyadic m_im;
};

} // namespace mlucas::arith
