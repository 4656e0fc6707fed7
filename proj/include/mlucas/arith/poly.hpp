#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include <mlucas/arith/gaussian.hpp>

namespace mlucas::arith
{

/// Dense univariate polynomial in x over GaussianDyadic, ascending degree.
/// Trailing zero coefficients are always stripped, so the zero polynomial
/// has no coefficients at all.
class Poly
{
public:
    Poly() = default;
    Poly(std::vector<GaussianDyadic> coeffs);
    Poly(std::initializer_list<GaussianDyadic> coeffs);
    Poly(GaussianDyadic constant);

    template <std::integral I>
    Poly(I constant) : Poly(GaussianDyadic{constant})
    {
    }

    // c * x^k
    static Poly monomial(GaussianDyadic c, std::size_t k);
    static Poly x()
    {
        return monomial(GaussianDyadic{1}, 1);
    }

    const std::vector<GaussianDyadic> &coeffs() const noexcept
    {
        return m_coeffs;
    }
    // Zero past the end.
    GaussianDyadic coeff(std::size_t k) const;

    bool is_zero() const noexcept
    {
        return m_coeffs.empty();
    }
    // -1 for the zero polynomial.
    long degree() const noexcept
    {
        return static_cast<long>(m_coeffs.size()) - 1;
    }

    // Coefficient-wise real and imaginary parts.
    Poly real_part() const;
    Poly imag_part() const;

    bool is_unit() const;
    Poly inverse() const;

    Poly scaled_pow2(std::int64_t k) const;

    GaussianDyadic eval(const GaussianDyadic &at) const;

    Poly operator-() const;
    friend Poly operator+(const Poly &a, const Poly &b);
    friend Poly operator-(const Poly &a, const Poly &b);
    friend Poly operator*(const Poly &a, const Poly &b);
    friend Poly operator*(const GaussianDyadic &c, const Poly &p);

    Poly &operator+=(const Poly &o)
    {
        return *this = *this + o;
    }
    Poly &operator-=(const Poly &o)
    {
        return *this = *this - o;
    }
    Poly &operator*=(const Poly &o)
    {
        return *this = *this * o;
    }

    friend bool operator==(const Poly &, const Poly &) = default;

private:
    void trim();

    std::vector<GaussianDyadic> m_coeffs;
};

GaussianDyadic poly_eval(const Poly &p, const GaussianDyadic &at);

} // namespace mlucas::arith
