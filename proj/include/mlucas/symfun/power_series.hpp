#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include <mlucas/arith/ring.hpp>

namespace mlucas::symfun
{

using arith::Ring;

/// Formal power series in z truncated after z^order, over a Ring.
///
/// Arithmetic between series of different orders yields the smaller order,
/// so every coefficient of a result is exact.
template <Ring T>
class PowerSeries
{
public:
    explicit PowerSeries(std::size_t order) : m_coeffs(order + 1, T{0}) {}

    // Pads with zeros or truncates to order + 1 coefficients.
    PowerSeries(std::vector<T> coeffs, std::size_t order) : m_coeffs(std::move(coeffs))
    {
        m_coeffs.resize(order + 1, T{0});
    }

    std::size_t order() const noexcept
    {
        return m_coeffs.size() - 1;
    }
    const T &operator[](std::size_t k) const
    {
        return m_coeffs.at(k);
    }
    const std::vector<T> &coeffs() const noexcept
    {
        return m_coeffs;
    }

    friend PowerSeries operator+(const PowerSeries &a, const PowerSeries &b)
    {
        PowerSeries r(std::min(a.order(), b.order()));
        for (std::size_t k = 0; k <= r.order(); ++k) {
            r.m_coeffs[k] = a.m_coeffs[k] + b.m_coeffs[k];
        }
        return r;
    }

    friend PowerSeries operator-(const PowerSeries &a, const PowerSeries &b)
    {
        PowerSeries r(std::min(a.order(), b.order()));
        for (std::size_t k = 0; k <= r.order(); ++k) {
            r.m_coeffs[k] = a.m_coeffs[k] - b.m_coeffs[k];
        }
        return r;
    }

    friend PowerSeries operator*(const PowerSeries &a, const PowerSeries &b)
    {
        PowerSeries r(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i <= r.order(); ++i) {
            if (a.m_coeffs[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; i + j <= r.order(); ++j) {
                r.m_coeffs[i + j] = r.m_coeffs[i + j] + a.m_coeffs[i] * b.m_coeffs[j];
            }
        }
        return r;
    }

    friend PowerSeries operator*(const T &c, const PowerSeries &s)
    {
        PowerSeries r = s;
        for (auto &x : r.m_coeffs) {
            x = c * x;
        }
        return r;
    }

    friend bool operator==(const PowerSeries &, const PowerSeries &) = default;

private:
    std::vector<T> m_coeffs;
};

/// The unique s with den * s == num (mod z^{order+1}), by long division.
/// num and den are ascending coefficient lists in z. Throws
/// arith::not_invertible unless den's constant term is a unit.
template <Ring T>
PowerSeries<T> series_div(const std::vector<T> &num, const std::vector<T> &den, std::size_t order)
{
    if (den.empty() || !den.front().is_unit()) {
        throw arith::not_invertible("series_div: constant term of the denominator is not invertible");
    }
    const T inv = den.front().inverse();
    std::vector<T> s;
    s.reserve(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
        T acc = k < num.size() ? num[k] : T{0};
        for (std::size_t j = 1; j < den.size() && j <= k; ++j) {
            if (!den[j].is_zero()) {
                acc = acc - den[j] * s[k - j];
            }
        }
        s.push_back(inv * acc);
    }
    return PowerSeries<T>(std::move(s), order);
}

// den * s truncated at s.order(); the round-trip check for series_div.
template <Ring T>
std::vector<T> truncated_product(const std::vector<T> &den, const PowerSeries<T> &s)
{
    std::vector<T> out(s.order() + 1, T{0});
    for (std::size_t i = 0; i < den.size() && i <= s.order(); ++i) {
        for (std::size_t j = 0; i + j <= s.order(); ++j) {
            out[i + j] = out[i + j] + den[i] * s[j];
        }
    }
    return out;
}

} // namespace mlucas::symfun
